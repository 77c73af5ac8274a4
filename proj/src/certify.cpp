#include "regbound/certify.hpp"

#include "regbound/errors.hpp"

#include <stdexcept>

namespace regbound {

namespace {

long long moore_sum(int k, int terms) {
    if (k < 2) throw std::invalid_argument("degree k must be >= 2");
    if (terms < 1) throw std::invalid_argument("number of terms must be >= 1");
    long long sum = 0;
    long long power = 1;
    for (int j = 0; j < terms; ++j) {
        if (__builtin_add_overflow(sum, power, &sum)) throw NumericError("Moore sum overflows 64 bits");
        if (j + 1 < terms && __builtin_mul_overflow(power, k - 1, &power))
            throw NumericError("Moore sum overflows 64 bits");
    }
    long long out;
    if (__builtin_mul_overflow(sum, k, &out) || __builtin_add_overflow(out, 1, &out))
        throw NumericError("Moore sum overflows 64 bits");
    return out;
}

std::string failed_condition(const CertificateConditions& c) {
    if (!c.f_at_k_positive.holds) return "f(k) > 0";
    if (!c.f_at_taus_nonpositive.holds) return "f(tau_i) <= 0";
    if (!c.f0_positive.holds) return "f_0 > 0";
    return "f_i >= 0";
}

}  // namespace

long long moore_bound(int k, int d) { return moore_sum(k, d); }

long long tutte_bound(int k, int e) { return moore_sum(k, e); }

IntersectionArray moore_polygon_array(int k, int d, int c) {
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    if (d < 1) throw std::invalid_argument("Moore polygon needs d >= 1");
    if (c < 1 || c > k) throw std::invalid_argument("Moore polygon parameter c must lie in [1, k]");
    if (d == 1 && c != 1) throw std::invalid_argument("diameter-1 array requires c = 1");
    std::vector<int> b(d, k - 1);
    b[0] = k;
    std::vector<int> cs(d, 1);
    cs[d - 1] = c;
    return make_intersection_array(std::move(b), std::move(cs));
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Certified: return "certified";
        case Verdict::NotApplicable: return "not-applicable";
        case Verdict::Failed: return "failed";
    }
    return "unknown";
}

CertificationReport certify(const Graph& g, const CertifyOptions& options) {
    CertificationReport rep;
    rep.v = g.vertex_count();
    auto not_applicable = [&](std::string why) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = std::move(why);
        return rep;
    };
    if (rep.v == 0) return not_applicable("empty graph");
    rep.k = regularity(g);
    if (!rep.k) return not_applicable("not regular");
    if (!is_connected(g)) return not_applicable("not connected");
    if (*rep.k < 2) return not_applicable("degree below 2 (acyclic)");
    if (rep.v > kMaxSpectralVertices) return not_applicable("exceeds the 512-vertex spectral cap");

    const int k = *rep.k;
    rep.girth = girth_bfs(g);
    rep.diameter = diameter(g);
    rep.spectrum = spectrum(g, options.cluster_tol);
    const int d = rep.spectrum->d();
    rep.d = d;
    const int girth = *rep.girth;

    rep.moore_bound = moore_bound(k, d);
    if (girth % 2 == 1) rep.tutte_bound = tutte_bound(k, (girth - 1) / 2);
    rep.is_moore = rep.v == *rep.moore_bound;
    rep.distance_regular = is_distance_regular(g);

    const auto taus = rep.spectrum->nontrivial();
    if (const auto exact = exact_integers(taus)) {
        const auto cert = certificate_from_spectrum<Rational>(k, *exact, options.slack_tol);
        rep.lp = summarize(cert);
        if (cert.valid()) {
            const auto t = attainment_check(g, cert, options.slack_tol, options.cluster_tol);
            rep.tight = t.tight && t.bound_matches_v;
        }
    } else {
        const auto cert = certificate_from_spectrum<double>(k, taus, options.slack_tol);
        rep.lp = summarize(cert);
        if (cert.valid()) {
            const auto t = attainment_check(g, cert, options.slack_tol, options.cluster_tol);
            rep.tight = t.tight && t.bound_matches_v;
        }
    }

    if (girth >= 2 * d - 1) {
        if (!rep.distance_regular)
            rep.discrepancies.push_back("girth >= 2d-1 but the graph is not distance-regular");
        if (*rep.diameter != d)
            rep.discrepancies.push_back("girth >= 2d-1 but diameter " + std::to_string(*rep.diameter) +
                                        " != d = " + std::to_string(d));
    }
    if (girth >= 2 * d && rep.distance_regular) {
        const int c = rep.distance_regular->c.back();
        rep.moore_polygon_c = c;
        if (c < 1 || c > k || d != rep.distance_regular->diameter() ||
            *rep.distance_regular != moore_polygon_array(k, d, c))
            rep.discrepancies.push_back("intersection array is not a Moore polygon array");
    }

    if (!rep.discrepancies.empty()) {
        rep.verdict = Verdict::Failed;
        rep.reason = rep.discrepancies.front();
    } else if (girth < 2 * d) {
        rep.verdict = Verdict::NotApplicable;
        rep.reason = "girth " + std::to_string(girth) + " < 2d = " + std::to_string(2 * d);
    } else if (!rep.lp->valid) {
        rep.verdict = Verdict::Failed;
        rep.reason = "certificate condition " + failed_condition(rep.lp->conditions) + " fails";
    } else if (!rep.tight) {
        rep.verdict = Verdict::Failed;
        rep.reason = "LP bound not attained";
    } else {
        rep.verdict = Verdict::Certified;
        rep.reason = "girth " + std::to_string(girth) + " >= 2d = " + std::to_string(2 * d) +
                     " and the LP bound equals v";
    }
    return rep;
}

}  // namespace regbound
