#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fslab/explorer.hpp"
#include "fslab/graph.hpp"
#include "fslab/oracle.hpp"

namespace fslab {

// One representative per isomorphism class of connected graphs on n vertices,
// built by attaching a new vertex to every subset of each (n-1)-graph and
// deduplicating by canonical form. Builtin limit n <= 7 (1,1,2,6,21,112,853
// classes); beyond that, ingest graph6 files. Deterministic order.
std::vector<Graph> enumerate_connected_graphs(int n);

// Ascending partitions of n with at least min_t parts, lexicographic order.
std::vector<Partition> partitions_of(int n, int min_t);

struct SweepConfig {
    int n_min = 4;
    int n_max = 4;
    int t_min = 2;
    int t_max = 0;    // 0 = unbounded
    int k1 = 0;       // 0 = unconstrained, else require k_1 == k1
    int kt_max = 0;   // 0 = unconstrained, else require k_t <= kt_max
    std::string graphs = "builtin";      // "builtin" or a graph6 file path
    std::string filter = "all";          // all | cycles | trees
    int parallelism = 1;
    std::string output;                  // empty = stdout
    std::string format = "jsonl";        // jsonl | csv
    int max_n = explorer_vertex_cap;

    static SweepConfig parse_file(const std::string& path);
    static SweepConfig parse_text(std::string_view text);  // key=value or JSON
};

struct Report {
    std::vector<nlohmann::ordered_json> records;
    nlohmann::ordered_json summary;

    uint64_t mismatches() const;
    std::string to_jsonl() const;  // one record per line + trailing summary
    std::string to_csv() const;
    std::string render(std::string_view format) const;
};

nlohmann::ordered_json profile_json(const StructuralProfile& prof);
nlohmann::ordered_json prediction_json(const Prediction& pred);
nlohmann::ordered_json summary_json(const ComponentSummary& summary);

bool prediction_matches(const Prediction& pred, uint64_t brute_count);

// For each (X, partition) instance: profile, prediction, brute-force count,
// match flag. Record order is fixed by (n, graph, partition) regardless of
// parallelism; per-instance cap violations are recorded, not fatal.
Report run_sweep(const SweepConfig& cfg);

}  // namespace fslab
