#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

// States of FS(X,Y) are bijections V(X)->V(Y) indexed by Lehmer rank, giving
// flat arrays of size n!. The default cap keeps that at 10! states; callers
// may raise it explicitly (the error message carries the memory estimate).
inline constexpr int explorer_vertex_cap = default_vertex_cap;

struct FsComponent {
    Perm representative;  // lexicographically least bijection in the component
    uint64_t size;
};

struct ComponentSummary {
    std::string x_graph6;
    std::string y_graph6;
    std::vector<FsComponent> components;  // ordered by representative rank

    uint64_t count() const { return components.size(); }
    std::vector<uint64_t> sizes() const;  // ascending multiset
};

// Exactly the sigma' adjacent to sigma in FS(X,Y): for each X-edge {a,b} with
// {sigma(a), sigma(b)} in E(Y), the bijection with those two values swapped.
std::vector<std::pair<std::pair<int, int>, Perm>>
friendly_neighbors(const Graph& x, const Graph& y, const Perm& sigma);

// Exhaustive component structure of FS(X,Y): union-find over all n! states,
// each undirected FS-edge processed once.
ComponentSummary component_count(const Graph& x, const Graph& y,
                                 int cap = explorer_vertex_cap);

bool same_component(const Graph& x, const Graph& y, const Perm& from,
                    const Perm& to, int cap = explorer_vertex_cap);

struct SwapSequence {
    std::vector<std::pair<int, int>> edges;  // X-edges, applied in order
};

// Shortest friendly-swap sequence from->to (BFS), replay-verified before
// return; nullopt when the two lie in different components.
std::optional<SwapSequence> swap_path(const Graph& x, const Graph& y,
                                      const Perm& from, const Perm& to,
                                      int cap = explorer_vertex_cap);

// True iff (u v) o sigma lies in sigma's component. u, v are Y-vertices.
bool exchangeable(const Graph& x, const Graph& y, int u, int v,
                  const Perm& sigma, int cap = explorer_vertex_cap);

struct ExchangeCounterexample {
    Perm sigma;
    int u, v;
};

// Checks, for every ytilde-edge {u,v} and every sigma whose preimages of u,v
// are X-adjacent, that u,v are exchangeable from sigma in FS(X,Y); requires
// E(Y) subseteq E(Ytilde) on the same vertex set. On pass, FS(X,Y) and
// FS(X,Ytilde) must have identical components (verified; a violation throws).
// Returns the first counterexample found, or nullopt for pass.
std::optional<ExchangeCounterexample>
verify_exchange_criterion(const Graph& x, const Graph& y, const Graph& ytilde,
                          int cap = explorer_vertex_cap);

}  // namespace fslab
