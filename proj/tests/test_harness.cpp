#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "fslab/harness.hpp"

using namespace fslab;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("fslab_test_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("connected graph enumeration") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto graphs = enumerate_connected_graphs(n);
        CHECK(graphs.size() == static_cast<std::size_t>(expected[n]));
        for (const Graph& g : graphs) {
            CHECK(g.vertex_count() == n);
            CHECK(is_connected(g));
        }
    }
    CHECK_THROWS_AS(enumerate_connected_graphs(8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), std::invalid_argument);

    // representatives are pairwise non-isomorphic (full check at n = 4)
    auto four = enumerate_connected_graphs(4);
    for (std::size_t i = 0; i < four.size(); ++i)
        for (std::size_t j = i + 1; j < four.size(); ++j)
            CHECK(!is_isomorphic(four[i], four[j]));
}

TEST_CASE("partition enumeration") {
    auto p42 = partitions_of(4, 2);
    REQUIRE(p42.size() == 4);
    CHECK(p42[0].to_string() == "1,1,1,1");
    CHECK(p42[1].to_string() == "1,1,2");
    CHECK(p42[2].to_string() == "1,3");
    CHECK(p42[3].to_string() == "2,2");
    CHECK(partitions_of(5, 2).size() == 6);
    auto p44 = partitions_of(4, 4);
    REQUIRE(p44.size() == 1);
    CHECK(p44[0].to_string() == "1,1,1,1");
    CHECK_THROWS_AS(partitions_of(0, 2), std::invalid_argument);
}

TEST_CASE("sweep config parsing") {
    SweepConfig kv = SweepConfig::parse_text(
        "# comment line\n"
        "n_min = 4\n"
        "n_max: 5\n"
        "filter = cycles\n"
        "parallelism = 2\n"
        "format = csv\n");
    CHECK(kv.n_min == 4);
    CHECK(kv.n_max == 5);
    CHECK(kv.filter == "cycles");
    CHECK(kv.parallelism == 2);
    CHECK(kv.format == "csv");
    CHECK(kv.graphs == "builtin");

    SweepConfig js = SweepConfig::parse_text(
        R"({"n_min": 4, "n_max": 5, "filter": "cycles", "parallelism": 2, "format": "csv"})");
    CHECK(js.n_min == kv.n_min);
    CHECK(js.n_max == kv.n_max);
    CHECK(js.filter == kv.filter);
    CHECK(js.parallelism == kv.parallelism);
    CHECK(js.format == kv.format);

    CHECK_THROWS_AS(SweepConfig::parse_text("bogus_key = 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("n_min = x\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("n_min\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("n_min = 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("n_min = 5\nn_max = 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("format = xml\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("filter = stars\n"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text(R"({"n_min": [4]})"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_text("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig::parse_file("no_such_file.cfg"), std::runtime_error);
}

TEST_CASE("prediction match rules") {
    Prediction p;
    p.verdict = Verdict::connected;
    CHECK(prediction_matches(p, 1));
    CHECK(!prediction_matches(p, 2));
    p.verdict = Verdict::disconnected;
    CHECK(prediction_matches(p, 2));
    CHECK(!prediction_matches(p, 1));
    p.verdict = Verdict::count;
    p.count = 6;
    CHECK(prediction_matches(p, 6));
    CHECK(!prediction_matches(p, 5));
    p.verdict = Verdict::more_than_two;
    CHECK(prediction_matches(p, 3));
    CHECK(!prediction_matches(p, 2));
    p.verdict = Verdict::unknown;
    CHECK(prediction_matches(p, 17));  // no claim made
}

TEST_CASE("sweep over cycles") {
    SweepConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 5;
    cfg.filter = "cycles";
    Report report = run_sweep(cfg);
    // one cycle per n; 4 partitions for n=4, 6 for n=5
    CHECK(report.records.size() == 10);
    CHECK(report.mismatches() == 0);
    CHECK(report.summary["summary"]["instances"] == 10);
    CHECK(report.summary["summary"]["mismatches"] == 0);
    CHECK(report.summary["summary"]["exception_hits"] == 0);
    for (const auto& rec : report.records) {
        CHECK(rec["match"] == true);
        CHECK(rec["prediction"]["case"] == "cycle-count");
        CHECK(rec["prediction"]["count"] == rec["brute_count"]);
        CHECK(rec["brute_count"].get<uint64_t>() >= 1);
    }

    std::string jsonl = report.to_jsonl();
    CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 11);  // records + summary
    std::string csv = report.to_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + records
    CHECK(csv.find("graph6,partition,n,") == 0);
    CHECK(csv.find("2+2") != std::string::npos);  // partition joined with '+'
}

TEST_CASE("sweep determinism across parallelism") {
    SweepConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 4;
    Report serial = run_sweep(cfg);
    cfg.parallelism = 3;
    Report parallel = run_sweep(cfg);
    CHECK(serial.to_jsonl() == parallel.to_jsonl());
    CHECK(serial.to_csv() == parallel.to_csv());
    CHECK(serial.records.size() == 24);  // 6 graphs x 4 partitions
    CHECK(serial.mismatches() == 0);
}

TEST_CASE("sweep over trees matches brute force") {
    SweepConfig cfg;
    cfg.n_min = 5;
    cfg.n_max = 5;
    cfg.filter = "trees";
    Report report = run_sweep(cfg);
    CHECK(report.records.size() == 3 * 6);  // 3 trees on 5 vertices
    CHECK(report.mismatches() == 0);
}

TEST_CASE("sweep from a graph6 file") {
    TempFile graphs("graphs.g6", "Cl\nCh\n\n");
    SweepConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 4;
    cfg.graphs = graphs.path;
    Report report = run_sweep(cfg);
    CHECK(report.records.size() == 8);  // 2 graphs x 4 partitions
    CHECK(report.mismatches() == 0);

    cfg.graphs = "missing.g6";
    CHECK_THROWS_AS(run_sweep(cfg), std::runtime_error);
}

TEST_CASE("sweep records per-instance cap errors without aborting") {
    TempFile graphs("big.g6", encode_graph6(path_graph(11)) + "\n" + "Cl\n");
    SweepConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 11;
    cfg.graphs = graphs.path;
    cfg.k1 = 5;  // keeps the 11-vertex graph to the single partition (5,6)
    Report report = run_sweep(cfg);
    REQUIRE(report.records.size() == 1);  // n=4 has no partition with k1=5
    CHECK(report.records[0].contains("error"));
    CHECK(report.summary["summary"]["exception_hits"] == 1);
    CHECK(report.mismatches() == 0);
}

TEST_CASE("report json helpers") {
    StructuralProfile prof = classify(theta0_graph());
    auto pj = profile_json(prof);
    CHECK(pj["theta0"] == true);
    CHECK(pj["cut_vertices"].empty());
    CHECK(pj["exception"] == "none");

    Prediction pred = predict(cycle_graph(4), Partition::parse("2,2"));
    auto prj = prediction_json(pred);
    CHECK(prj["verdict"] == "count");
    CHECK(prj["count"] == 2);

    auto sj = summary_json(component_count(cycle_graph(4), complete_bipartite(2, 2)));
    CHECK(sj["count"] == 2);
    CHECK(sj["component_sizes"] == std::vector<uint64_t>{12, 12});
    CHECK(sj["components"][0]["representative"] == "0,1,2,3");
}
