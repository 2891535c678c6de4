#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fslab/graph.hpp"

namespace fslab {

inline constexpr std::size_t default_closure_cap = 10'000'000;

// A permutation of 0..m-1, stored as its image array. Also used as the state
// of FS(X,Y): images[x] is the Y-vertex assigned to X-vertex x.
class Perm {
public:
    explicit Perm(std::vector<uint8_t> images);
    static Perm identity(int m);
    static Perm parse(std::string_view csv);  // "2,0,1,3"

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<uint8_t>& images() const { return img_; }

    Perm compose(const Perm& q) const;  // (p.compose(q))(i) = p(q(i))
    Perm inverse() const;
    int sign() const;                   // +1 even, -1 odd
    std::string to_string() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<uint8_t> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

uint64_t factorial(int n);  // n <= 20

// Lehmer-code rank: rank order equals lexicographic order of image arrays,
// identity has rank 0. Inverse of perm_unrank.
uint64_t perm_rank(const Perm& p);
Perm perm_unrank(int n, uint64_t rank);

// All elements of the subgroup generated by gens (BFS over right products).
// Throws when the element count would exceed cap.
std::vector<Perm> group_closure(int degree, const std::vector<Perm>& gens,
                                std::size_t cap = default_closure_cap);
uint64_t closure_order(int degree, const std::vector<Perm>& gens,
                       std::size_t cap = default_closure_cap);

// Generator pair on k+ell points (first block = the S_k factor):
// alpha = cycle on block-1 positions 1..k-1 fixing 0, paired with the inverse
// full cycle on block 2; beta = inverse full cycle on block 1, paired with the
// cycle on block-2 positions 1..ell-1 fixing position 0.
Perm alpha_generator(int k, int ell);
Perm beta_generator(int k, int ell);

// Order of <alpha, beta>. For most k, ell >= 2 this is k!*ell! when k+ell is
// even and k!*ell!/2 when odd, but NOT always: for {k,ell} = {3,4} the second
// block collapses to the Klein four-group and the true order is 24.
uint64_t alpha_beta_order(int k, int ell);

// Order of the subgroup generated by all pairs (full cycle on class i, inverse
// full cycle on class j), acting on the partition's vertex blocks. Computes
// the closed form prod(k_i)/gcd and an independent BFS closure; throws if the
// two disagree.
uint64_t cycle_subgroup_order(const Partition& p);

// gcd(k_1..k_t) * prod (k_i - 1)!: the exact component count of FS(C_n, K_p).
uint64_t cycle_component_formula(const Partition& p);

}  // namespace fslab
