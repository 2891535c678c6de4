#include "fslab/explorer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fslab {

namespace {

void check_pair(const Graph& x, const Graph& y, int cap) {
    if (x.vertex_count() != y.vertex_count())
        throw std::invalid_argument("FS(X,Y) needs |V(X)| = |V(Y)|");
    int n = x.vertex_count();
    if (n > cap) {
        uint64_t states = factorial(std::min(n, 20));
        throw std::runtime_error(
            "FS state space n! = " + std::to_string(states) + " exceeds vertex cap " +
            std::to_string(cap) + " (~" + std::to_string(states * 8 / (1 << 20)) +
            " MiB of flat arrays); raise the cap explicitly to proceed");
    }
    if (n > 12)
        throw std::runtime_error("exhaustive exploration is limited to n <= 12 "
                                 "(13! states overflow 32-bit rank indexing)");
}

// Rank of an image array among all permutations of 0..n-1, lex order.
uint64_t rank_of(const uint8_t* img, int n, const uint64_t* fact) {
    uint64_t rank = 0, seen = 0;
    for (int i = 0; i < n; ++i) {
        int v = img[i];
        rank += (v - std::popcount(seen & ((uint64_t{1} << v) - 1))) * fact[n - 1 - i];
        seen |= uint64_t{1} << v;
    }
    return rank;
}

struct UnionFind {
    std::vector<int32_t> parent;
    std::vector<int32_t> size;

    explicit UnionFind(uint64_t n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), int32_t{0});
    }
    int32_t find(int32_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

// Component roots for every state of FS(X,Y), indexed by Lehmer rank. After
// this, uf.find(r) is the same value for two ranks iff they are connected.
UnionFind fs_union(const Graph& x, const Graph& y) {
    int n = x.vertex_count();
    uint64_t fact[21];
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    UnionFind uf(fact[n]);
    auto edges = x.edges();
    std::vector<uint8_t> img(n);
    std::iota(img.begin(), img.end(), uint8_t{0});
    uint64_t r = 0;
    do {
        for (auto [a, b] : edges) {
            if (!y.has_edge(img[a], img[b])) continue;
            std::swap(img[a], img[b]);
            uint64_t r2 = rank_of(img.data(), n, fact);
            std::swap(img[a], img[b]);
            if (r2 > r) uf.unite(static_cast<int32_t>(r), static_cast<int32_t>(r2));
        }
        ++r;
    } while (std::next_permutation(img.begin(), img.end()));
    return uf;
}

}  // namespace

std::vector<uint64_t> ComponentSummary::sizes() const {
    std::vector<uint64_t> out;
    out.reserve(components.size());
    for (const FsComponent& c : components) out.push_back(c.size);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::pair<int, int>, Perm>>
friendly_neighbors(const Graph& x, const Graph& y, const Perm& sigma) {
    if (x.vertex_count() != y.vertex_count())
        throw std::invalid_argument("FS(X,Y) needs |V(X)| = |V(Y)|");
    if (sigma.degree() != x.vertex_count())
        throw std::invalid_argument("bijection degree must match |V(X)|");
    std::vector<std::pair<std::pair<int, int>, Perm>> out;
    for (auto [a, b] : x.edges()) {
        if (!y.has_edge(sigma[a], sigma[b])) continue;
        std::vector<uint8_t> img = sigma.images();
        std::swap(img[a], img[b]);
        out.emplace_back(std::pair{a, b}, Perm(std::move(img)));
    }
    return out;
}

ComponentSummary component_count(const Graph& x, const Graph& y, int cap) {
    check_pair(x, y, cap);
    int n = x.vertex_count();
    UnionFind uf = fs_union(x, y);
    uint64_t total = uf.parent.size();
    // root rank -> (least member rank, size); roots found in rank order, so
    // the first member seen for a root is its least.
    std::map<int32_t, std::pair<uint64_t, uint64_t>> comps;
    for (uint64_t r = 0; r < total; ++r) {
        int32_t root = uf.find(static_cast<int32_t>(r));
        auto [it, fresh] = comps.try_emplace(root, r, 0);
        ++it->second.second;
    }
    std::vector<std::pair<uint64_t, uint64_t>> ordered;
    for (auto& [root, rep_size] : comps) ordered.push_back(rep_size);
    std::sort(ordered.begin(), ordered.end());
    ComponentSummary out;
    out.x_graph6 = encode_graph6(x);
    out.y_graph6 = encode_graph6(y);
    for (auto [rep, size] : ordered)
        out.components.push_back(FsComponent{perm_unrank(n, rep), size});
    return out;
}

bool same_component(const Graph& x, const Graph& y, const Perm& from, const Perm& to, int cap) {
    check_pair(x, y, cap);
    int n = x.vertex_count();
    if (from.degree() != n || to.degree() != n)
        throw std::invalid_argument("bijection degree must match |V(X)|");
    if (from == to) return true;
    uint64_t fact[21];
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    uint64_t goal = rank_of(to.images().data(), n, fact);
    std::vector<char> seen(fact[n], 0);
    std::vector<uint64_t> queue{rank_of(from.images().data(), n, fact)};
    seen[queue[0]] = 1;
    auto edges = x.edges();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Perm cur = perm_unrank(n, queue[head]);
        std::vector<uint8_t> img = cur.images();
        for (auto [a, b] : edges) {
            if (!y.has_edge(img[a], img[b])) continue;
            std::swap(img[a], img[b]);
            uint64_t r2 = rank_of(img.data(), n, fact);
            std::swap(img[a], img[b]);
            if (r2 == goal) return true;
            if (!seen[r2]) {
                seen[r2] = 1;
                queue.push_back(r2);
            }
        }
    }
    return false;
}

std::optional<SwapSequence> swap_path(const Graph& x, const Graph& y, const Perm& from,
                                      const Perm& to, int cap) {
    check_pair(x, y, cap);
    int n = x.vertex_count();
    if (from.degree() != n || to.degree() != n)
        throw std::invalid_argument("bijection degree must match |V(X)|");
    if (from == to) return SwapSequence{};
    uint64_t fact[21];
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    uint64_t start = rank_of(from.images().data(), n, fact);
    uint64_t goal = rank_of(to.images().data(), n, fact);
    std::vector<int32_t> parent(fact[n], -1);
    std::vector<int16_t> via(fact[n], -1);
    auto edges = x.edges();
    std::vector<uint64_t> queue{start};
    parent[start] = static_cast<int32_t>(start);
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        uint64_t r = queue[head];
        std::vector<uint8_t> img = perm_unrank(n, r).images();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if (!y.has_edge(img[a], img[b])) continue;
            std::swap(img[a], img[b]);
            uint64_t r2 = rank_of(img.data(), n, fact);
            std::swap(img[a], img[b]);
            if (parent[r2] >= 0) continue;
            parent[r2] = static_cast<int32_t>(r);
            via[r2] = static_cast<int16_t>(e);
            if (r2 == goal) {
                found = true;
                break;
            }
            queue.push_back(r2);
        }
    }
    if (!found) return std::nullopt;
    SwapSequence seq;
    for (uint64_t r = goal; r != start; r = parent[r]) seq.edges.push_back(edges[via[r]]);
    std::reverse(seq.edges.begin(), seq.edges.end());
    // replay: every step must be a friendly swap and the walk must land on `to`
    std::vector<uint8_t> img = from.images();
    for (auto [a, b] : seq.edges) {
        if (!x.has_edge(a, b) || !y.has_edge(img[a], img[b]))
            throw std::logic_error("swap path replay hit a non-friendly step");
        std::swap(img[a], img[b]);
    }
    if (Perm(std::move(img)) != to) throw std::logic_error("swap path replay missed the target");
    return seq;
}

bool exchangeable(const Graph& x, const Graph& y, int u, int v, const Perm& sigma, int cap) {
    int n = x.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw std::invalid_argument("exchangeable needs distinct Y-vertices u, v");
    std::vector<uint8_t> img = sigma.images();
    for (uint8_t& w : img) {
        if (w == u)
            w = static_cast<uint8_t>(v);
        else if (w == v)
            w = static_cast<uint8_t>(u);
    }
    return same_component(x, y, sigma, Perm(std::move(img)), cap);
}

std::optional<ExchangeCounterexample>
verify_exchange_criterion(const Graph& x, const Graph& y, const Graph& ytilde, int cap) {
    check_pair(x, y, cap);
    int n = x.vertex_count();
    if (ytilde.vertex_count() != n)
        throw std::invalid_argument("Y and Ytilde must share a vertex set");
    for (auto [u, v] : y.edges())
        if (!ytilde.has_edge(u, v))
            throw std::invalid_argument("E(Y) must be a subset of E(Ytilde)");
    // Edges already in Y are exchangeable by a single friendly swap whenever
    // the preimages are X-adjacent; only the added edges need checking.
    std::vector<std::pair<int, int>> added;
    for (auto [u, v] : ytilde.edges())
        if (!y.has_edge(u, v)) added.emplace_back(u, v);

    uint64_t fact[21];
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    UnionFind uf = fs_union(x, y);

    std::vector<uint8_t> img(n), pos(n);
    std::iota(img.begin(), img.end(), uint8_t{0});
    uint64_t r = 0;
    do {
        for (int i = 0; i < n; ++i) pos[img[i]] = static_cast<uint8_t>(i);
        for (auto [u, v] : added) {
            int a = pos[u], b = pos[v];
            if (!x.has_edge(a, b)) continue;
            std::swap(img[a], img[b]);
            uint64_t r2 = rank_of(img.data(), n, fact);
            std::swap(img[a], img[b]);
            if (uf.find(static_cast<int32_t>(r)) != uf.find(static_cast<int32_t>(r2)))
                return ExchangeCounterexample{perm_unrank(n, r), u, v};
        }
        ++r;
    } while (std::next_permutation(img.begin(), img.end()));

    // Criterion passed: the component structures of FS(X,Y) and FS(X,Ytilde)
    // must coincide exactly. Check both directions via root relabeling.
    UnionFind uf2 = fs_union(x, ytilde);
    uint64_t total = fact[n];
    std::map<int32_t, int32_t> fwd, back;
    for (uint64_t s = 0; s < total; ++s) {
        int32_t r1 = uf.find(static_cast<int32_t>(s));
        int32_t r2 = uf2.find(static_cast<int32_t>(s));
        auto [f, fresh_f] = fwd.try_emplace(r1, r2);
        auto [b, fresh_b] = back.try_emplace(r2, r1);
        if (f->second != r2 || b->second != r1)
            throw std::logic_error(
                "exchange criterion passed but component structures differ at state rank " +
                std::to_string(s));
    }
    return std::nullopt;
}

}  // namespace fslab
