#include "fslab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace fslab {

namespace {

int ctz64(uint64_t m) { return std::countr_zero(m); }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(std::max(n, 0), 0) {
    if (n < 1 || n > max_vertices)
        throw std::invalid_argument("graph order must be in 1.." +
                                    std::to_string(max_vertices) + ", got " + std::to_string(n));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops not allowed");
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (uint64_t m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
            out.emplace_back(u, ctz64(m));
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition needs at least one class");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition classes must be positive");
        if (i > 0 && parts_[i - 1] > parts_[i])
            throw std::invalid_argument("partition classes must be ascending (canonical labeling)");
    }
    offsets_.resize(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        offsets_[i] = n_;
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view csv) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty partition entry");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("partition entries must be decimal integers");
            value = value * 10 + (c - '0');
            if (value > 1'000'000) throw std::invalid_argument("partition entry too large");
        }
        parts.push_back(value);
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return Partition(std::move(parts));
}

int Partition::class_of(int vertex) const {
    if (vertex < 0 || vertex >= n_) throw std::invalid_argument("vertex outside partition range");
    int cls = 0;
    while (cls + 1 < t() && vertex >= offsets_[cls + 1]) ++cls;
    return cls;
}

long long Partition::gcd_parts() const {
    long long g = 0;
    for (int k : parts_) g = std::gcd(g, static_cast<long long>(k));
    return g;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string_view spider_name(SpiderException e) {
    switch (e) {
        case SpiderException::none: return "none";
        case SpiderException::t6: return "T6";
        case SpiderException::t7: return "T7";
        case SpiderException::t8: return "T8";
    }
    return "none";
}

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view line, int max_n) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty input");
    unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126)
        throw std::invalid_argument("graph6: long form (byte 0 is '~') not supported; n over cap");
    if (header < 63 || header > 125)
        throw std::invalid_argument("graph6: invalid header at byte 0");
    int n = header - 63;
    if (n < 1) throw std::invalid_argument("graph6: order 0 not supported (byte 0)");
    if (n > max_n)
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(max_n) + " (byte 0)");
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes)
        throw std::invalid_argument("graph6: body length " + std::to_string(line.size() - 1) +
                                    ", expected " + std::to_string(nbytes) + " bytes");
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t byte = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(line[byte]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: invalid body character at byte " +
                                            std::to_string(byte));
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    // trailing padding bits must be zero
    for (; bit < nbytes * 6; ++bit) {
        std::size_t byte = 1 + bit / 6;
        unsigned char c = static_cast<unsigned char>(line[byte]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: invalid body character at byte " +
                                        std::to_string(byte));
        if ((c - 63) >> (5 - bit % 6) & 1)
            throw std::invalid_argument("graph6: nonzero padding at byte " + std::to_string(byte));
    }
    return g;
}

namespace {

// Shared by encode_graph6 and canonical_graph6: pack the upper-triangle bit
// stream (column-major) into printable bytes.
std::string pack_graph6(int n, const std::vector<bool>& bits) {
    std::string out(1, static_cast<char>(n + 63));
    std::size_t nbytes = (bits.size() + 5) / 6;
    for (std::size_t byte = 0; byte < nbytes; ++byte) {
        int val = 0;
        for (int k = 0; k < 6; ++k) {
            std::size_t bit = byte * 6 + k;
            if (bit < bits.size() && bits[bit]) val |= 1 << (5 - k);
        }
        out += static_cast<char>(val + 63);
    }
    return out;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    return pack_graph6(n, bits);
}

// ---------------------------------------------------------------------------
// constructions

Graph complete_multipartite(const Partition& p) {
    Graph g(p.n());
    for (int u = 0; u < p.n(); ++u)
        for (int v = u + 1; v < p.n(); ++v)
            if (p.class_of(u) != p.class_of(v)) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: classes must be nonempty");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph theta0_graph() {
    Graph g(7);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
    g.add_edge(0, 6);
    g.add_edge(3, 6);
    return g;
}

Graph stopwatch_graph(int n) {
    if (n < 4) throw std::invalid_argument("stopwatch needs n >= 4");
    Graph g(n);
    for (int i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 1);
    g.add_edge(0, 1);
    return g;
}

Graph snake_tongue_graph(int ell) {
    if (ell < 2) throw std::invalid_argument("snake tongue needs ell >= 2");
    Graph g(ell + 2);
    for (int i = 0; i + 1 < ell; ++i) g.add_edge(i, i + 1);
    g.add_edge(ell - 1, ell);
    g.add_edge(ell - 1, ell + 1);
    return g;
}

Graph book_graph(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("book graph needs 1 <= k < n");
    std::vector<int> parts(k, 1);
    parts.push_back(n - k);
    return complete_multipartite(Partition(std::move(parts)));
}

Graph bipartite_plus_edge_graph(int k, int n) {
    if (k < 2 || k > n - k)
        throw std::invalid_argument("bipartite_plus_edge needs 2 <= k <= n-k");
    Graph g = complete_bipartite(k, n - k);
    g.add_edge(0, 1);
    return g;
}

// ---------------------------------------------------------------------------
// structure

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t m = frontier; m; m &= m - 1) next |= g.neighbor_mask(ctz64(m));
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
                int v = ctz64(m);
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

struct Lowlink {
    std::vector<int> cut_vertices;                // sorted
    std::vector<std::pair<int, int>> cut_edges;   // u < v
};

Lowlink lowlink_scan(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    Lowlink out;
    int timer = 0;
    auto dfs = [&](auto&& self, int u, int parent) -> void {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
            int v = ctz64(m);
            if (v == parent) continue;
            if (disc[v] >= 0) {
                low[u] = std::min(low[u], disc[v]);
                continue;
            }
            ++children;
            self(self, v, u);
            low[u] = std::min(low[u], low[v]);
            if (low[v] > disc[u]) out.cut_edges.emplace_back(std::min(u, v), std::max(u, v));
            if (parent >= 0 && low[v] >= disc[u]) cut[u] = 1;
        }
        if (parent < 0 && children >= 2) cut[u] = 1;
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] < 0) dfs(dfs, s, -1);
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.cut_vertices.push_back(v);
    std::sort(out.cut_edges.begin(), out.cut_edges.end());
    return out;
}

SpiderException spider_exception(const Graph& g) {
    int n = g.vertex_count();
    if (n < 6 || n > 8) return SpiderException::none;
    if (g.edge_count() != n - 1 || !is_connected(g)) return SpiderException::none;
    int center = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d > 3) return SpiderException::none;
        if (d == 3) {
            if (center >= 0) return SpiderException::none;
            center = v;
        }
    }
    if (center < 0) return SpiderException::none;
    std::vector<int> legs;
    for (uint64_t m = g.neighbor_mask(center); m; m &= m - 1) {
        int prev = center, cur = ctz64(m), len = 1;
        while (g.degree(cur) == 2) {
            int next = ctz64(g.neighbor_mask(cur) & ~(uint64_t{1} << prev));
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end(), std::greater<>());
    if (legs == std::vector<int>{2, 2, 1}) return SpiderException::t6;
    if (legs == std::vector<int>{2, 2, 2}) return SpiderException::t7;
    if (legs == std::vector<int>{3, 2, 2}) return SpiderException::t8;
    return SpiderException::none;
}

}  // namespace

std::vector<int> find_cut_vertices(const Graph& g) { return lowlink_scan(g).cut_vertices; }

std::vector<std::pair<int, int>> find_cut_edges(const Graph& g) { return lowlink_scan(g).cut_edges; }

int max_bridge_length(const Graph& g) {
    Lowlink ll = lowlink_scan(g);
    if (ll.cut_vertices.empty()) return 0;
    int n = g.vertex_count();
    // Chainable cut-edges: both endpoints of degree >= 2 (a cut-edge ending in
    // a leaf can never lie on a bridge path).
    std::vector<uint64_t> chain_adj(n, 0);
    bool any = false;
    for (auto [u, v] : ll.cut_edges) {
        if (g.degree(u) >= 2 && g.degree(v) >= 2) {
            chain_adj[u] |= uint64_t{1} << v;
            chain_adj[v] |= uint64_t{1} << u;
            any = true;
        }
    }
    if (!any) return 1;
    // From each chainable edge, extend through degree-2 vertices whose other
    // incident edge is also chainable; the continuation is forced, and cut
    // edges form a forest, so this terminates. Interior vertices get degree
    // exactly 2 by construction; endpoints have degree >= 2.
    auto extend = [&](int prev, int cur) {
        int steps = 0;
        while (g.degree(cur) == 2) {
            int other = ctz64(g.neighbor_mask(cur) & ~(uint64_t{1} << prev));
            if (!(chain_adj[cur] >> other & 1)) break;
            prev = cur;
            cur = other;
            ++steps;
        }
        return steps;
    };
    int best = 1;
    for (int u = 0; u < n; ++u)
        for (uint64_t m = chain_adj[u] >> (u + 1) << (u + 1); m; m &= m - 1) {
            int v = ctz64(m);
            best = std::max(best, 2 + extend(v, u) + extend(u, v));
        }
    return best;
}

StructuralProfile classify(const Graph& g) {
    StructuralProfile p;
    int n = g.vertex_count();
    p.connected = is_connected(g);
    p.bipartite = is_bipartite(g);
    int max_deg = 0;
    bool all_deg2 = true;
    for (int v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, g.degree(v));
        all_deg2 = all_deg2 && g.degree(v) == 2;
    }
    p.is_cycle = p.connected && n >= 3 && all_deg2;
    p.is_tree = p.connected && g.edge_count() == n - 1;
    p.is_path = p.is_tree && max_deg <= 2;
    p.is_theta0 = n == 7 && g.edge_count() == 8 && is_isomorphic(g, theta0_graph());
    p.exception_spider = spider_exception(g);
    p.cut_vertices = find_cut_vertices(g);
    p.max_bridge_length = max_bridge_length(g);
    return p;
}

// ---------------------------------------------------------------------------
// vertex connectivity: split each vertex into in/out with unit capacity and
// run BFS max-flow between every non-adjacent pair.

namespace {

int unit_vertex_flow(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    int nn = 2 * n;  // node v: in = v, out = v + n
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[v][v + n] = 1;
    for (auto [u, v] : g.edges()) {
        cap[u + n][v] = n;
        cap[v + n][u] = n;
    }
    int source = s + n, sink = t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(nn, -1);
        std::vector<int> queue{source};
        prev[source] = source;
        for (std::size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < nn; ++v)
                if (prev[v] < 0 && cap[u][v] > 0) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[sink] < 0) return flow;
        for (int v = sink; v != source; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs n >= 2");
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    if (!is_connected(g)) return 0;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, unit_vertex_flow(g, s, t));
    return best;
}

// ---------------------------------------------------------------------------
// isomorphism and canonical form

bool is_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // Map vertices of a in descending-degree order; candidates must match on
    // degree and on adjacency to everything already mapped.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return da[x] > da[y]; });
    std::vector<int> image(n, -1);
    uint64_t used = 0;
    auto dfs = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int va = order[k];
        for (int vb = 0; vb < n; ++vb) {
            if (used >> vb & 1 || db[vb] != da[va]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
                ok = a.has_edge(va, order[j]) == b.has_edge(vb, image[order[j]]);
            if (!ok) continue;
            image[va] = vb;
            used |= uint64_t{1} << vb;
            if (self(self, k + 1)) return true;
            used &= ~(uint64_t{1} << vb);
            image[va] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

std::string canonical_graph6(const Graph& g) {
    int n = g.vertex_count();
    // Column j (j >= 1) of an ordering holds bits (0,j)..(j-1,j), bit (0,j)
    // most significant; minimizing the column sequence lexicographically
    // minimizes the graph6 body. Branch and bound over vertex placements.
    std::vector<uint64_t> best(std::max(n - 1, 0));
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    auto columns_of = [&](const std::vector<int>& perm) {
        std::vector<uint64_t> cols(std::max(n - 1, 0), 0);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g.has_edge(perm[i], perm[j])) cols[j - 1] |= uint64_t{1} << (j - 1 - i);
        return cols;
    };
    best = columns_of(ident);
    std::vector<int> perm(n, -1);
    uint64_t used = 0;
    // Invariant: on entry at `depth`, perm[0..depth-1] realizes exactly
    // best[0..depth-2]. A strictly smaller column improves best in place and
    // invalidates the tail; recursion always reaches depth n (any vertex can
    // extend a prefix), so sentinel entries are always overwritten.
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) return;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (depth > 0) {
                uint64_t col = 0;
                for (int i = 0; i < depth; ++i)
                    if (g.has_edge(perm[i], v)) col |= uint64_t{1} << (depth - 1 - i);
                if (col > best[depth - 1]) continue;
                if (col < best[depth - 1]) {
                    best[depth - 1] = col;
                    std::fill(best.begin() + depth, best.end(), ~uint64_t{0});
                }
            }
            perm[depth] = v;
            used |= uint64_t{1} << v;
            self(self, depth + 1);
            used &= ~(uint64_t{1} << v);
        }
    };
    dfs(dfs, 0);
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(best[j - 1] >> (j - 1 - i) & 1);
    return pack_graph6(n, bits);
}

}  // namespace fslab
