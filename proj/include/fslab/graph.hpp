#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fslab {

// Default validation cap for graph ingestion; the explorer's n! state space is
// the real constraint (10! = 3,628,800 states). Override explicitly for larger n.
inline constexpr int default_vertex_cap = 10;

// Simple undirected graph on 0..n-1, adjacency kept as 64-bit masks.
// No self-loops; edges are symmetric by construction.
class Graph {
public:
    static constexpr int max_vertices = 62;  // graph6 short form bound

    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u] >> v & 1; }
    uint64_t neighbor_mask(int v) const { return adj_[v]; }
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<uint64_t> adj_;
};

// Ascending class sizes k_1 <= ... <= k_t; class i occupies the consecutive
// vertex block offset(i) .. offset(i)+part(i)-1. All oracles and the explorer
// assume this labeling; callers with other labelings must relabel first.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    static Partition parse(std::string_view csv);  // "1,2,3"

    int n() const { return n_; }
    int t() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[i]; }
    int offset(int i) const { return offsets_[i]; }
    int class_of(int vertex) const;
    const std::vector<int>& parts() const { return parts_; }
    long long gcd_parts() const;
    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    std::vector<int> offsets_;
    int n_ = 0;
};

enum class SpiderException { none, t6, t7, t8 };

std::string_view spider_name(SpiderException e);  // "none"/"T6"/"T7"/"T8"

struct StructuralProfile {
    bool connected = false;
    bool bipartite = false;
    bool is_cycle = false;
    bool is_tree = false;
    bool is_path = false;
    bool is_theta0 = false;
    SpiderException exception_spider = SpiderException::none;
    int max_bridge_length = 0;       // 0: no cut vertex; 1: cut vertex, no 2-bridge
    std::vector<int> cut_vertices;   // sorted
};

// graph6 short form: header byte n+63, then upper-triangle bits in column-major
// order (0,1),(0,2),(1,2),(0,3),... packed 6 per byte (MSB first), offset 63.
Graph parse_graph6(std::string_view line, int max_n = default_vertex_cap);
std::string encode_graph6(const Graph& g);

Graph complete_multipartite(const Partition& p);
Graph complete_bipartite(int a, int b);  // classes {0..a-1}, {a..a+b-1}
Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);    // n >= 1
Graph theta0_graph();       // 6-cycle 0..5 plus vertex 6 adjacent to 0 and 3
Graph stopwatch_graph(int n);      // (n-1)-cycle on 1..n-1, pendant 0-1; n >= 4
Graph snake_tongue_graph(int ell); // path 0..ell-1 plus two leaves on ell-1; ell >= 2
Graph book_graph(int k, int n);          // K_{1,...,1,n-k} with k ones; 1 <= k < n
Graph bipartite_plus_edge_graph(int k, int n);  // K_{k,n-k} plus edge {0,1}; 2 <= k <= n-k

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<int> find_cut_vertices(const Graph& g);
std::vector<std::pair<int, int>> find_cut_edges(const Graph& g);

// Longest path v_1..v_k whose edges are all cut-edges, interior degrees exactly
// 2, endpoints not of degree 1; a lone cut vertex counts as length 1, a
// 2-connected graph as 0. Such paths nest, so "contains an m-bridge" is
// max_bridge_length(g) >= m.
int max_bridge_length(const Graph& g);

StructuralProfile classify(const Graph& g);

// Exact minimum vertex cut via max-flow on the split-vertex network; n-1 for
// complete graphs by convention. Requires n >= 2.
int vertex_connectivity(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// graph6 string of the lexicographically least relabeling (branch-and-bound
// over placements); equal strings <=> isomorphic. Intended for small n.
std::string canonical_graph6(const Graph& g);

}  // namespace fslab
