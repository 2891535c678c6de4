#include <doctest.h>

#include <algorithm>
#include <random>

#include "fslab/explorer.hpp"
#include "fslab/oracle.hpp"

using namespace fslab;

namespace {

Graph spider(const std::vector<int>& legs) {
    int n = 1;
    for (int l : legs) n += l;
    Graph g(n);
    int next = 1;
    for (int l : legs) {
        int prev = 0;
        for (int i = 0; i < l; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

bool has_reason(const Prediction& p, const char* needle) {
    for (const std::string& r : p.reasons)
        if (r.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("predict dispatch cases") {
    // star target: theta_0 blocks connectivity despite being 2-connected
    Prediction theta = predict(theta0_graph(), Partition::parse("1,6"));
    CHECK(theta.verdict == Verdict::disconnected);
    CHECK(theta.case_tag == "star-target");
    CHECK(has_reason(theta, "theta_0"));

    Prediction k4 = predict(complete_graph(4), Partition::parse("2,2"));
    CHECK(k4.verdict == Verdict::connected);
    CHECK(k4.case_tag == "two-class-target");
    CHECK(k4.reasons.empty());

    Prediction c6 = predict(cycle_graph(6), Partition::parse("1,2,3"));
    CHECK(c6.verdict == Verdict::count);
    CHECK(c6.count == 2);
    CHECK(c6.case_tag == "cycle-count");

    Prediction star = predict(complete_bipartite(1, 4), Partition::parse("1,1,1,2"));
    CHECK(star.verdict == Verdict::connected);
    CHECK(star.case_tag == "narrow-multipartite");

    Prediction p5 = predict(path_graph(5), Partition::parse("1,1,1,2"));
    CHECK(p5.verdict == Verdict::disconnected);
    CHECK(has_reason(p5, "path"));

    // singleton classes everywhere: complete target, X connectivity decides
    CHECK(predict(path_graph(5), Partition::parse("1,1,1,1,1")).verdict == Verdict::connected);
    CHECK(predict(path_graph(5), Partition::parse("1,1,1,1,1")).case_tag == "complete-target");
    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(predict(split, Partition::parse("1,1,1,1")).verdict == Verdict::disconnected);

    // wide multipartite: bridge comparison against n - k_t
    Prediction p6 = predict(path_graph(6), Partition::parse("2,2,2"));
    CHECK(p6.case_tag == "wide-multipartite");
    CHECK(p6.verdict == Verdict::disconnected);  // bridge length 4 >= 6-2
    Prediction star6 = predict(complete_bipartite(1, 5), Partition::parse("2,2,2"));
    CHECK(star6.verdict == Verdict::connected);

    Prediction p4 = predict(path_graph(4), Partition::parse("2,2"));
    CHECK(p4.verdict == Verdict::disconnected);
    CHECK(has_reason(p4, "bipartite"));
    CHECK(has_reason(p4, "bridge"));

    CHECK_THROWS_AS(predict(path_graph(3), Partition::parse("1,2")), std::invalid_argument);
    CHECK_THROWS_AS(predict(path_graph(4), Partition::parse("2,3")), std::invalid_argument);
    CHECK_THROWS_AS(predict(path_graph(4), Partition::parse("4")), std::invalid_argument);
}

TEST_CASE("predict two components") {
    Prediction ok = predict_two_components(complete_bipartite(2, 3), 2);
    CHECK(ok.verdict == Verdict::two_components);
    CHECK(ok.case_tag == "two-components");

    Prediction t6 = predict_two_components(spider({2, 2, 1}), 3);
    CHECK(t6.verdict == Verdict::six_components);
    CHECK(t6.case_tag == "exception-spider");

    Prediction bridged = predict_two_components(path_graph(6), 2);
    CHECK(bridged.verdict == Verdict::more_than_two);
    CHECK(bridged.case_tag == "bridge-blocked");

    // spiders below/above their exceptional k follow the generic cases
    CHECK(predict_two_components(spider({2, 2, 1}), 2).verdict == Verdict::more_than_two);
    CHECK(predict_two_components(spider({3, 2, 2}), 4).verdict == Verdict::six_components);
    CHECK(predict_two_components(spider({3, 2, 2}), 3).verdict == Verdict::more_than_two);

    // hypothesis violations: unknown with reasons
    CHECK(predict_two_components(complete_graph(5), 2).verdict == Verdict::unknown);
    CHECK(predict_two_components(cycle_graph(6), 2).verdict == Verdict::unknown);
    CHECK(predict_two_components(path_graph(4), 2).verdict == Verdict::unknown);
    CHECK(predict_two_components(complete_bipartite(2, 3), 1).verdict == Verdict::unknown);
    CHECK(predict_two_components(complete_bipartite(2, 3), 3).verdict == Verdict::unknown);
    CHECK(!predict_two_components(complete_graph(5), 2).reasons.empty());
    CHECK(predict_two_components(complete_graph(5), 2).case_tag == "outside-hypotheses");
}

TEST_CASE("exceptional k table") {
    CHECK(exceptional_k(SpiderException::t6) == 3);
    CHECK(exceptional_k(SpiderException::t7) == 3);
    CHECK(exceptional_k(SpiderException::t8) == 4);
    CHECK_THROWS_AS(exceptional_k(SpiderException::none), std::invalid_argument);
}

TEST_CASE("kappa") {
    CHECK(kappa(cycle_graph(6)) == 4);
    CHECK(kappa(cycle_graph(4)) == 2);
    CHECK(kappa(complete_bipartite(3, 3)) == 2);
    CHECK(kappa(complete_bipartite(2, 3)) == 2);
    CHECK(kappa(theta0_graph()) == 2);
    CHECK(kappa(path_graph(5)) == 4);
    CHECK(kappa(complete_graph(5)) == 1);
    CHECK(kappa(complete_bipartite(1, 4)) == 2);
    CHECK(!kappa(Graph(4)).has_value());
    CHECK_THROWS_AS(kappa(path_graph(3)), std::invalid_argument);
}

TEST_CASE("parity classifier") {
    CHECK(parity_class(Perm::identity(5), 2, 2) == 0);       // 0 + |{0,1}| = 2
    CHECK(parity_class(Perm::parse("1,0,2,3,4"), 2, 2) == 1);  // 1 + 2 = 3
    CHECK(parity_class(Perm::parse("2,3,0,1,4"), 2, 2) == 0);  // even, 0 crossings
    CHECK_THROWS_AS(parity_class(Perm::identity(5), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(parity_class(Perm::identity(5), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(parity_class(Perm::identity(4), 2, 2), std::invalid_argument);

    // invariance along every friendly swap of FS(K_{k,n-k}, K_{l,n-l})
    for (int n : {5, 6}) {
        for (int k = 2; k <= 3; ++k) {
            for (int ell = 2; ell <= 3; ++ell) {
                Graph x = complete_bipartite(k, n - k);
                Graph y = complete_bipartite(ell, n - ell);
                for (uint64_t r = 0; r < factorial(n); ++r) {
                    Perm sigma = perm_unrank(n, r);
                    int bit = parity_class(sigma, k, ell);
                    for (const auto& [edge, tau] : friendly_neighbors(x, y, sigma))
                        CHECK(parity_class(tau, k, ell) == bit);
                }
            }
        }
    }
}
