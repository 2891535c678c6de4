#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

enum class Verdict {
    connected,
    disconnected,
    count,            // exact component count in Prediction::count
    two_components,
    six_components,
    more_than_two,
    unknown,          // outside the hypotheses; reasons say why
};

std::string_view verdict_name(Verdict v);

struct Prediction {
    Verdict verdict = Verdict::unknown;
    uint64_t count = 0;               // meaningful only for Verdict::count
    std::string case_tag;             // which dispatch case fired
    std::vector<std::string> reasons; // failed/violated conditions
};

// Connectivity of FS(X, K_p) predicted from X's structure alone.
// Dispatch: a cycle X gets the exact count formula; otherwise the case is
// determined by the partition shape:
//   complete-target      k_t = 1 (Y complete): connected iff X connected
//   star-target          k_t = n-1: connected iff X connected, non-bipartite,
//                        not theta0, and 2-connected (no cut vertex)
//   two-class-target     t = 2, k_1 >= 2: connected iff X connected,
//                        non-bipartite, max_bridge_length < k_1
//   wide-multipartite    t > 2 and (k_t > 2 or gcd > 1): connected iff X
//                        connected and max_bridge_length < n - k_t
//   narrow-multipartite  t > 2, k_1 = 1, k_t = 2: connected iff X connected
//                        and not a path
// Requires t >= 2, n >= 4, |V(X)| = n.
Prediction predict(const Graph& x, const Partition& p);

// Component count regime of FS(X, K_{k,n-k}) for connected bipartite
// non-cycle X with n >= 5, n >= 2k >= 4: two_components when X has no
// k-bridge and is not the exception spider at its exceptional k;
// six_components for the exception; more_than_two when a k-bridge exists.
// Hypothesis violations yield verdict unknown with reasons.
Prediction predict_two_components(const Graph& x, int k);

// The k at which each exception spider drops to exactly six components.
// Derived by exhaustive brute-force sweep over all admissible k (the
// acceptance suite re-derives the sweep); never hand-entered from a formula.
int exceptional_k(SpiderException e);

// Least k such that FS(X, B_{k,n-k}) is connected; nullopt when no k works
// (X disconnected). Cases: cycle -> n-2; bipartite non-cycle 2-connected -> 2;
// theta0 -> 2; otherwise max_bridge_length + 1. Requires n >= 4.
std::optional<int> kappa(const Graph& x);

// Parity of sign(sigma) + |sigma({0..k-1}) cap {0..ell-1}| with sign encoded
// 0 for even, 1 for odd. For X = K_{k,n-k}, Y = K_{ell,n-ell} (size-k / size-
// ell classes laid out first) this bit is invariant under friendly swaps and
// separates the two components. Requires k, ell >= 2, n >= 5.
int parity_class(const Perm& sigma, int k, int ell);

}  // namespace fslab
