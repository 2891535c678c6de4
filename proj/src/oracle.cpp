#include "fslab/oracle.hpp"

#include <stdexcept>

namespace fslab {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::connected: return "connected";
        case Verdict::disconnected: return "disconnected";
        case Verdict::count: return "count";
        case Verdict::two_components: return "two-components";
        case Verdict::six_components: return "six-components";
        case Verdict::more_than_two: return "more-than-two";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

Prediction settle(std::string case_tag, std::vector<std::string> reasons) {
    Prediction out;
    out.case_tag = std::move(case_tag);
    out.reasons = std::move(reasons);
    out.verdict = out.reasons.empty() ? Verdict::connected : Verdict::disconnected;
    return out;
}

}  // namespace

Prediction predict(const Graph& x, const Partition& p) {
    if (p.t() < 2) throw std::invalid_argument("prediction needs a partition with t >= 2");
    if (p.n() < 4) throw std::invalid_argument("prediction needs n >= 4");
    if (x.vertex_count() != p.n())
        throw std::invalid_argument("|V(X)| must equal the partition total");
    StructuralProfile prof = classify(x);
    int n = p.n();
    int k1 = p.part(0);
    int kt = p.part(p.t() - 1);

    if (prof.is_cycle) {
        Prediction out;
        out.verdict = Verdict::count;
        out.count = cycle_component_formula(p);
        out.case_tag = "cycle-count";
        return out;
    }

    std::vector<std::string> reasons;
    if (!prof.connected) reasons.push_back("X is disconnected");

    if (kt == 1) {  // every class a singleton: the target is complete
        return settle("complete-target", std::move(reasons));
    }
    if (kt == n - 1) {  // partition (1, n-1): the target is a star
        if (prof.bipartite) reasons.push_back("X is bipartite");
        if (prof.is_theta0) reasons.push_back("X is the theta_0 graph");
        if (!prof.cut_vertices.empty()) reasons.push_back("X has a cut vertex");
        return settle("star-target", std::move(reasons));
    }
    if (p.t() == 2) {  // k1 >= 2 here, since kt <= n-2 forces k1 = n-kt >= 2
        if (prof.bipartite) reasons.push_back("X is bipartite");
        if (prof.max_bridge_length >= k1)
            reasons.push_back("X contains a bridge of length " +
                              std::to_string(prof.max_bridge_length) + " >= k_1 = " +
                              std::to_string(k1));
        return settle("two-class-target", std::move(reasons));
    }
    if (kt > 2 || p.gcd_parts() > 1) {
        if (prof.max_bridge_length >= n - kt)
            reasons.push_back("X contains a bridge of length " +
                              std::to_string(prof.max_bridge_length) + " >= n - k_t = " +
                              std::to_string(n - kt));
        return settle("wide-multipartite", std::move(reasons));
    }
    // remaining shape: t > 2, k_1 = 1, k_t = 2
    if (prof.is_path) reasons.push_back("X is a path");
    return settle("narrow-multipartite", std::move(reasons));
}

Prediction predict_two_components(const Graph& x, int k) {
    Prediction out;
    int n = x.vertex_count();
    StructuralProfile prof = classify(x);
    std::vector<std::string>& reasons = out.reasons;
    if (n < 5) reasons.push_back("n must be at least 5");
    if (2 * k < 4) reasons.push_back("k must be at least 2");
    if (2 * k > n) reasons.push_back("k must satisfy 2k <= n");
    if (!prof.connected) reasons.push_back("X is disconnected");
    if (!prof.bipartite) reasons.push_back("X is not bipartite");
    if (prof.is_cycle) reasons.push_back("X is a cycle");
    if (!reasons.empty()) {
        out.verdict = Verdict::unknown;
        out.case_tag = "outside-hypotheses";
        return out;
    }
    if (prof.max_bridge_length >= k) {
        out.verdict = Verdict::more_than_two;
        out.case_tag = "bridge-blocked";
        out.reasons.push_back("X contains a bridge of length " +
                              std::to_string(prof.max_bridge_length) + " >= k = " +
                              std::to_string(k));
        return out;
    }
    if (prof.exception_spider != SpiderException::none &&
        k == exceptional_k(prof.exception_spider)) {
        out.verdict = Verdict::six_components;
        out.count = 6;
        out.case_tag = "exception-spider";
        return out;
    }
    out.verdict = Verdict::two_components;
    out.count = 2;
    out.case_tag = "two-components";
    return out;
}

int exceptional_k(SpiderException e) {
    // Values re-derived by the exhaustive sweep in the acceptance suite: the
    // unique admissible k where the component count is exactly 6.
    switch (e) {
        case SpiderException::t6: return 3;
        case SpiderException::t7: return 3;
        case SpiderException::t8: return 4;
        case SpiderException::none: break;
    }
    throw std::invalid_argument("no exceptional k: graph is not one of the three spiders");
}

std::optional<int> kappa(const Graph& x) {
    int n = x.vertex_count();
    if (n < 4) throw std::invalid_argument("kappa needs n >= 4");
    StructuralProfile prof = classify(x);
    if (!prof.connected) return std::nullopt;
    if (prof.is_cycle) return n - 2;
    if (prof.is_theta0) return 2;
    if (prof.bipartite && prof.cut_vertices.empty()) return 2;
    return prof.max_bridge_length + 1;
}

int parity_class(const Perm& sigma, int k, int ell) {
    int n = sigma.degree();
    if (n < 5) throw std::invalid_argument("parity_class needs n >= 5");
    if (k < 2 || k > n - 2 || ell < 2 || ell > n - 2)
        throw std::invalid_argument("parity_class needs 2 <= k, ell <= n-2");
    int crossings = 0;
    for (int i = 0; i < k; ++i)
        if (sigma[i] < ell) ++crossings;
    int sign_bit = sigma.sign() < 0 ? 1 : 0;
    return (sign_bit + crossings) & 1;
}

}  // namespace fslab
