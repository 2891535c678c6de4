#include "fslab/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fslab {

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("builtin enumeration covers 1 <= n <= 7; supply a graph6 "
                                    "file for larger orders");
    static std::mutex mtx;
    static std::map<int, std::vector<std::string>> cache;  // canonical graph6, sorted
    std::unique_lock lock(mtx);
    if (!cache.count(n)) {
        if (!cache.count(1)) cache[1] = {encode_graph6(Graph(1))};
        for (int m = 2; m <= n; ++m) {
            if (cache.count(m)) continue;
            // Every connected graph has a non-cut vertex; removing it leaves a
            // connected graph on m-1 vertices, so attaching a fresh vertex to
            // every nonempty subset of every (m-1)-class reaches every class.
            std::set<std::string> forms;
            for (const std::string& g6 : cache[m - 1]) {
                Graph base = parse_graph6(g6, m - 1);
                for (uint64_t mask = 1; mask < (uint64_t{1} << (m - 1)); ++mask) {
                    Graph g(m);
                    for (auto [u, v] : base.edges()) g.add_edge(u, v);
                    for (int v = 0; v < m - 1; ++v)
                        if (mask >> v & 1) g.add_edge(v, m - 1);
                    forms.insert(canonical_graph6(g));
                }
            }
            cache[m] = std::vector<std::string>(forms.begin(), forms.end());
        }
    }
    std::vector<Graph> out;
    out.reserve(cache[n].size());
    for (const std::string& g6 : cache[n]) out.push_back(parse_graph6(g6, n));
    return out;
}

std::vector<Partition> partitions_of(int n, int min_t) {
    if (n < 1 || min_t < 1) throw std::invalid_argument("partitions_of needs n >= 1, min_t >= 1");
    std::vector<Partition> out;
    std::vector<int> parts;
    auto dfs = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            if (static_cast<int>(parts.size()) >= min_t) out.push_back(Partition(parts));
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    dfs(dfs, n, 1);
    return out;
}

namespace {

int parse_int_value(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    int parsed = 0;
    try {
        parsed = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': integer expected, got '" + value +
                                    "'");
    }
    if (used != value.size())
        throw std::invalid_argument("config key '" + key + "': trailing junk in '" + value + "'");
    return parsed;
}

void apply_key(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n_min") cfg.n_min = parse_int_value(key, value);
    else if (key == "n_max") cfg.n_max = parse_int_value(key, value);
    else if (key == "t_min") cfg.t_min = parse_int_value(key, value);
    else if (key == "t_max") cfg.t_max = parse_int_value(key, value);
    else if (key == "k1") cfg.k1 = parse_int_value(key, value);
    else if (key == "kt_max") cfg.kt_max = parse_int_value(key, value);
    else if (key == "graphs") cfg.graphs = value;
    else if (key == "filter") cfg.filter = value;
    else if (key == "parallelism") cfg.parallelism = parse_int_value(key, value);
    else if (key == "output") cfg.output = value;
    else if (key == "format") cfg.format = value;
    else if (key == "max_n") cfg.max_n = parse_int_value(key, value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.n_min < 4) throw std::invalid_argument("config: n_min must be >= 4");
    if (cfg.n_max < cfg.n_min) throw std::invalid_argument("config: n_max must be >= n_min");
    if (cfg.t_min < 2) throw std::invalid_argument("config: t_min must be >= 2");
    if (cfg.parallelism < 1) throw std::invalid_argument("config: parallelism must be >= 1");
    if (cfg.format != "jsonl" && cfg.format != "csv")
        throw std::invalid_argument("config: format must be jsonl or csv");
    if (cfg.filter != "all" && cfg.filter != "cycles" && cfg.filter != "trees")
        throw std::invalid_argument("config: filter must be all, cycles, or trees");
    if (cfg.max_n < 4) throw std::invalid_argument("config: max_n must be >= 4");
}

std::string trim(std::string_view s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    return std::string(s.substr(a, b - a + 1));
}

}  // namespace

SweepConfig SweepConfig::parse_text(std::string_view text) {
    SweepConfig cfg;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
        }
        for (auto& [key, value] : doc.items()) {
            if (value.is_string())
                apply_key(cfg, key, value.get<std::string>());
            else if (value.is_number_integer())
                apply_key(cfg, key, std::to_string(value.get<long long>()));
            else
                throw std::invalid_argument("config key '" + key +
                                            "': only integers and strings are accepted");
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string line = trim(text.substr(pos, eol - pos));
            pos = eol + 1;
            if (line.empty() || line[0] == '#') continue;
            std::size_t sep = line.find('=');
            if (sep == std::string::npos) sep = line.find(':');
            if (sep == std::string::npos)
                throw std::invalid_argument("config line missing '=' or ':': " + line);
            apply_key(cfg, trim(std::string_view(line).substr(0, sep)),
                      trim(std::string_view(line).substr(sep + 1)));
        }
    }
    validate_config(cfg);
    return cfg;
}

SweepConfig SweepConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

nlohmann::ordered_json profile_json(const StructuralProfile& prof) {
    return nlohmann::ordered_json{
        {"connected", prof.connected},
        {"bipartite", prof.bipartite},
        {"cycle", prof.is_cycle},
        {"tree", prof.is_tree},
        {"path", prof.is_path},
        {"theta0", prof.is_theta0},
        {"exception", std::string(spider_name(prof.exception_spider))},
        {"max_bridge_length", prof.max_bridge_length},
        {"cut_vertices", prof.cut_vertices},
    };
}

nlohmann::ordered_json prediction_json(const Prediction& pred) {
    nlohmann::ordered_json out{
        {"verdict", std::string(verdict_name(pred.verdict))},
        {"case", pred.case_tag},
        {"reasons", pred.reasons},
    };
    if (pred.verdict == Verdict::count || pred.verdict == Verdict::two_components ||
        pred.verdict == Verdict::six_components)
        out["count"] = pred.count;
    return out;
}

nlohmann::ordered_json summary_json(const ComponentSummary& summary) {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const FsComponent& c : summary.components)
        comps.push_back(nlohmann::ordered_json{{"representative", c.representative.to_string()},
                                               {"size", c.size}});
    return nlohmann::ordered_json{
        {"x", summary.x_graph6},
        {"y", summary.y_graph6},
        {"count", summary.count()},
        {"component_sizes", summary.sizes()},
        {"components", std::move(comps)},
    };
}

bool prediction_matches(const Prediction& pred, uint64_t brute_count) {
    switch (pred.verdict) {
        case Verdict::connected: return brute_count == 1;
        case Verdict::disconnected: return brute_count >= 2;
        case Verdict::count: return brute_count == pred.count;
        case Verdict::two_components: return brute_count == 2;
        case Verdict::six_components: return brute_count == 6;
        case Verdict::more_than_two: return brute_count > 2;
        case Verdict::unknown: return true;  // no claim, nothing to contradict
    }
    return false;
}

uint64_t Report::mismatches() const {
    uint64_t count = 0;
    for (const auto& rec : records)
        if (rec.contains("match") && rec["match"] == false) ++count;
    return count;
}

std::string Report::to_jsonl() const {
    std::string out;
    for (const auto& rec : records) {
        out += rec.dump();
        out += '\n';
    }
    out += summary.dump();
    out += '\n';
    return out;
}

namespace {

std::string join_plus(const nlohmann::ordered_json& arr) {
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) out += '+';
        out += v.dump();
    }
    return out;
}

}  // namespace

std::string Report::to_csv() const {
    // graph6 bytes are in [63,126] and partitions are '+'-joined, so no field
    // ever contains a comma or quote.
    std::string out = "graph6,partition,n,verdict,case,brute_count,component_sizes,match,error\n";
    for (const auto& rec : records) {
        std::string partition = rec.value("partition", "");
        for (char& c : partition)
            if (c == ',') c = '+';
        out += rec.value("graph6", "");
        out += ',' + partition;
        out += ',' + rec["n"].dump();
        if (rec.contains("prediction")) {
            out += ',' + rec["prediction"]["verdict"].get<std::string>();
            out += ',' + rec["prediction"]["case"].get<std::string>();
        } else {
            out += ",,";
        }
        out += ',' + (rec.contains("brute_count") ? rec["brute_count"].dump() : std::string());
        out += ',' + (rec.contains("component_sizes") ? join_plus(rec["component_sizes"])
                                                      : std::string());
        out += ',' + (rec.contains("match") ? rec["match"].dump() : std::string());
        out += ',' + rec.value("error", "");
        out += '\n';
    }
    return out;
}

std::string Report::render(std::string_view format) const {
    if (format == "jsonl") return to_jsonl();
    if (format == "csv") return to_csv();
    throw std::invalid_argument("unknown report format: " + std::string(format));
}

Report run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    auto started = std::chrono::steady_clock::now();

    // Graph pool per n.
    std::map<int, std::vector<Graph>> pool;
    if (cfg.graphs == "builtin") {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) pool[n] = enumerate_connected_graphs(n);
    } else {
        std::ifstream in(cfg.graphs);
        if (!in) throw std::runtime_error("cannot open graphs file: " + cfg.graphs);
        std::string line;
        while (std::getline(in, line)) {
            if (trim(line).empty()) continue;
            Graph g = parse_graph6(line, Graph::max_vertices);
            int n = g.vertex_count();
            if (n >= cfg.n_min && n <= cfg.n_max) pool[n].push_back(std::move(g));
        }
    }

    std::vector<std::pair<Graph, Partition>> instances;
    for (auto& [n, graphs] : pool) {
        std::vector<Partition> parts;
        for (Partition& p : partitions_of(n, cfg.t_min)) {
            if (cfg.t_max > 0 && p.t() > cfg.t_max) continue;
            if (cfg.k1 > 0 && p.part(0) != cfg.k1) continue;
            if (cfg.kt_max > 0 && p.part(p.t() - 1) > cfg.kt_max) continue;
            parts.push_back(std::move(p));
        }
        for (const Graph& g : graphs) {
            if (cfg.filter == "cycles" && !classify(g).is_cycle) continue;
            if (cfg.filter == "trees" && !classify(g).is_tree) continue;
            for (const Partition& p : parts) instances.emplace_back(g, p);
        }
    }

    std::vector<nlohmann::ordered_json> records(instances.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<uint64_t> mismatch_count{0}, exception_count{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= instances.size()) return;
            const auto& [x, p] = instances[i];
            nlohmann::ordered_json rec{
                {"graph6", encode_graph6(x)},
                {"partition", p.to_string()},
                {"n", p.n()},
            };
            try {
                StructuralProfile prof = classify(x);
                Prediction pred = predict(x, p);
                ComponentSummary brute = component_count(x, complete_multipartite(p), cfg.max_n);
                bool match = prediction_matches(pred, brute.count());
                rec["profile"] = profile_json(prof);
                rec["prediction"] = prediction_json(pred);
                rec["brute_count"] = brute.count();
                rec["component_sizes"] = brute.sizes();
                rec["match"] = match;
                if (!match) mismatch_count.fetch_add(1);
            } catch (const std::exception& e) {
                rec["error"] = e.what();
                exception_count.fetch_add(1);
            }
            records[i] = std::move(rec);
        }
    };
    int nthreads = std::max(1, std::min<int>(cfg.parallelism, instances.size()));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }

    Report report;
    report.records = std::move(records);
    report.summary = nlohmann::ordered_json{
        {"summary", nlohmann::ordered_json{{"instances", instances.size()},
                                           {"mismatches", mismatch_count.load()},
                                           {"exception_hits", exception_count.load()}}}};
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    // Timing goes to stderr so report bytes stay identical across runs.
    std::cerr << "sweep: " << instances.size() << " instances in " << elapsed << " ms\n";
    return report;
}

}  // namespace fslab
