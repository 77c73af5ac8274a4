#include "doctest.h"

#include "regbound/errors.hpp"
#include "regbound/families.hpp"
#include "regbound/lpbound.hpp"
#include "regbound/metrics.hpp"

#include <cmath>

using namespace regbound;

namespace {

using RVec = std::vector<Rational>;

std::vector<double> nontrivial(const ExpectedProfile& p) {
    std::vector<double> out;
    for (std::size_t i = 1; i < p.spectrum.size(); ++i) out.push_back(p.spectrum[i].value);
    return out;
}

// Dual feasibility of f_1..f_u (with f_0 = 1) checked directly.
bool dual_feasible(int k, const std::vector<double>& taus, const std::vector<double>& f, double tol) {
    for (double t : taus) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) lhs -= f[j] * eval_F(k, static_cast<int>(j) + 1, t);
        if (lhs < 1.0 - tol) return false;
    }
    return std::all_of(f.begin(), f.end(), [&](double x) { return x >= -tol; });
}

}  // namespace

TEST_CASE("check_certificate examples") {
    const RVec taus = {1, -2};
    const auto good = check_certificate<Rational>(3, taus, FBasisPolynomial<Rational>(3, {5, 5, 3, 1}));
    CHECK(good.valid());
    CHECK(good.f_at_k == 50);
    CHECK(good.f0 == 5);
    CHECK(*good.bound == 10);

    const auto constant = check_certificate<Rational>(3, taus, FBasisPolynomial<Rational>(3, {1}));
    CHECK(!constant.valid());
    CHECK(!constant.bound);
    CHECK(!constant.conditions.f_at_taus_nonpositive.holds);
    CHECK(constant.conditions.f_at_taus_nonpositive.worst == 1.0);
    CHECK(constant.conditions.f_at_k_positive.holds);
    CHECK(constant.conditions.f0_positive.holds);
    CHECK(constant.conditions.coeffs_nonnegative.holds);

    for (int k = 2; k <= 6; ++k) {
        const auto negative = check_certificate<Rational>(k, RVec{-1}, FBasisPolynomial<Rational>(k, {1, 2, -1, 3}));
        CHECK(!negative.valid());
        CHECK(!negative.conditions.coeffs_nonnegative.holds);
        CHECK(negative.conditions.coeffs_nonnegative.worst_index == 2);
        CHECK(negative.conditions.coeffs_nonnegative.worst == -1.0);
    }

    CHECK_THROWS_AS(check_certificate<Rational>(3, RVec{3}, FBasisPolynomial<Rational>(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(check_certificate<Rational>(3, taus, FBasisPolynomial<Rational>(4, {1})), std::invalid_argument);
}

TEST_CASE("floating tolerance applies to the non-strict conditions only") {
    const std::vector<double> taus = {1.0, -2.0};
    // f(1) = 5e-10 > 0 but inside the slack tolerance
    const auto near = check_certificate<double>(3, taus, FBasisPolynomial<double>(3, {5.0 + 5e-10, 5.0, 3.0, 1.0}));
    CHECK(near.valid());
    const auto far = check_certificate<double>(3, taus, FBasisPolynomial<double>(3, {5.0 + 1e-6, 5.0, 3.0, 1.0}));
    CHECK(!far.valid());
    CHECK(!far.conditions.f_at_taus_nonpositive.holds);
    // f_0 at the tolerance is not "positive"
    const auto tiny = check_certificate<double>(3, taus, FBasisPolynomial<double>(3, {1e-12, 0.0, 0.0, 0.0}));
    CHECK(!tiny.conditions.f0_positive.holds);
}

TEST_CASE("certificate_from_spectrum examples") {
    const auto pet = certificate_from_spectrum<Rational>(3, RVec{1, -2});
    CHECK(pet.f.coeffs() == RVec{5, 5, 3, 1});
    CHECK(*pet.bound == 10);

    const double r2 = std::sqrt(2.0);
    const auto heawood = certificate_from_spectrum<double>(3, std::vector<double>{r2, -r2, -3.0});
    REQUIRE(heawood.valid());
    CHECK(heawood.f.degree() == 5);
    CHECK(*heawood.bound == doctest::Approx(14.0).epsilon(1e-12));

    const auto degenerate = certificate_from_spectrum<Rational>(2, RVec{-2});
    CHECK(degenerate.f.coeffs() == RVec{2, 1});
    CHECK(*degenerate.bound == 2);

    CHECK_THROWS_AS(certificate_from_spectrum<Rational>(3, RVec{}), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_spectrum<Rational>(3, RVec{-2, 1}), std::invalid_argument);
}

TEST_CASE("LP examples") {
    const auto dual = lp_bound_dual<Rational>(3, RVec{1, -2}, 3);
    REQUIRE(dual.status == LPStatus::Optimal);
    CHECK(dual.objective == 10);

    const auto gq = lp_bound_dual<Rational>(3, RVec{2, 0, -2, -3}, 7);
    REQUIRE(gq.status == LPStatus::Optimal);
    CHECK(gq.objective == 30);

    for (int k = 2; k <= 8; ++k) {
        const auto edge = lp_bound_dual<Rational>(k, RVec{-k}, 1);
        REQUIRE(edge.status == LPStatus::Optimal);
        CHECK(edge.objective == 2);
    }

    const auto primal = lp_bound_primal<Rational>(3, RVec{1, -2}, 3);
    REQUIRE(primal.status == LPStatus::Optimal);
    CHECK(primal.objective == 10);
    CHECK(primal.variables == RVec{5, 4});

    const auto hs = lp_bound_primal<Rational>(7, RVec{2, -3}, 3);
    REQUIRE(hs.status == LPStatus::Optimal);
    CHECK(hs.objective == 50);
    CHECK(hs.variables == RVec{28, 21});
    CHECK(lp_bound_dual<Rational>(7, RVec{2, -3}, 3).objective == 50);

    CHECK_THROWS_AS(lp_bound_primal<Rational>(3, RVec{}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lp_bound_dual<Rational>(3, RVec{}, 3), std::invalid_argument);
    CHECK_THROWS_AS(lp_bound_dual<Rational>(3, RVec{1}, 0), std::invalid_argument);
    // No constraints: the multiplicities are free to grow.
    CHECK(lp_bound_primal<Rational>(3, RVec{1, -2}, 0).status == LPStatus::Unbounded);
}

TEST_CASE("spectrum above the tree bound leaves the dual infeasible") {
    // F_j(x) > 0 for x > 2 sqrt(k - 1), so no f >= 0 can push f(2.9) below zero.
    for (int u = 1; u <= 9; ++u) CHECK(lp_bound_dual<double>(3, std::vector<double>{2.9}, u).status == LPStatus::Infeasible);
    CHECK(!certificate_from_spectrum<double>(3, std::vector<double>{2.9}).valid());
}

TEST_CASE("weak duality, soundness and monotonicity on the family spectra") {
    for (const auto& spec : table2_specs()) {
        const auto profile = expected_profile(spec);
        const auto taus = nontrivial(profile);
        const int d = static_cast<int>(taus.size());
        const int k = profile.k;
        CAPTURE(to_string(spec));

        std::optional<double> previous;
        for (int u = std::max(1, d); u <= 2 * d + 2; ++u) {
            const auto dual = lp_bound_dual<double>(k, taus, u);
            const auto primal = lp_bound_primal<double>(k, taus, u);
            REQUIRE(dual.status == LPStatus::Optimal);
            REQUIRE(primal.status == LPStatus::Optimal);
            CHECK(primal.objective <= dual.objective + 1e-6);
            CHECK(dual.objective - primal.objective <= 1e-6 * std::max(1.0, dual.objective));
            CHECK(profile.v <= dual.objective + 1e-6);
            if (previous) CHECK(dual.objective <= *previous + 1e-6);
            previous = dual.objective;

            CHECK(dual_feasible(k, taus, dual.variables, 1e-9));
            for (double m : primal.variables) CHECK(m >= -1e-12);
        }

        // The extremal certificate, rescaled to f_0 = 1, is dual feasible at
        // u = 2d - 1 and meets the dual optimum.
        const auto cert = certificate_from_spectrum<double>(k, taus);
        REQUIRE(cert.valid());
        std::vector<double> scaled;
        for (int j = 1; j <= cert.f.degree(); ++j) scaled.push_back(cert.f.coeffs()[j] / cert.f0);
        CHECK(dual_feasible(k, taus, scaled, 1e-9));
        const auto dual = lp_bound_dual<double>(k, taus, default_lp_degree(d));
        CHECK(*cert.bound >= dual.objective - 1e-6);
        CHECK(std::abs(*cert.bound - dual.objective) <= 1e-6 * std::max(1.0, dual.objective));
    }
}

TEST_CASE("exact mode on integral spectra") {
    for (const auto& spec : table2_specs()) {
        const auto profile = expected_profile(spec);
        const auto ints = exact_integers(nontrivial(profile));
        if (!ints) continue;
        const int u = default_lp_degree(ints->size());
        const auto dual = lp_bound_dual<Rational>(profile.k, *ints, u);
        const auto primal = lp_bound_primal<Rational>(profile.k, *ints, u);
        CAPTURE(to_string(spec));
        CHECK(dual.objective == profile.v);
        CHECK(primal.objective == profile.v);
        CHECK(*certificate_from_spectrum<Rational>(profile.k, *ints).bound == profile.v);
    }
    CHECK(exact_integers(std::vector<double>{1.0, -2.0 + 1e-12}).has_value());
    CHECK(!exact_integers(std::vector<double>{1.0, 1.5}).has_value());
}

TEST_CASE("attainment") {
    const auto cert = certificate_from_spectrum<Rational>(3, RVec{1, -2});
    const auto rep = attainment_check(petersen_graph(), cert);
    CHECK(rep.tight);
    CHECK(rep.bound_matches_v);
    CHECK(rep.v == 10);
    CHECK(rep.bound == 10.0);
    REQUIRE(rep.traces.size() == 3);
    CHECK(rep.traces == std::vector<std::int64_t>{0, 0, 0});
    for (double value : rep.f_at_eigenvalues) CHECK(value == 0.0);

    CHECK_THROWS_AS(attainment_check(cycle_graph(6), cert), PreconditionError);

    const auto bip = certificate_from_spectrum<Rational>(3, RVec{0, -3});
    const auto rb = attainment_check(complete_bipartite_graph(3), bip);
    CHECK(rb.tight);
    CHECK(rb.v == 6);
    CHECK(rb.bound == 6.0);

    // Heawood against its own floating certificate
    const double r2 = std::sqrt(2.0);
    const auto heawood = certificate_from_spectrum<double>(3, std::vector<double>{r2, -r2, -3.0});
    const auto rh = attainment_check(incidence_pg2(2), heawood);
    CHECK(rh.tight);
    CHECK(rh.bound_matches_v);

    // The 3-prism realizes taus {1, 0, -2} but has a triangle: trace of F_3 is nonzero.
    std::vector<Edge> prism;
    for (int i = 0; i < 3; ++i) {
        prism.emplace_back(i, (i + 1) % 3);
        prism.emplace_back(3 + i, 3 + (i + 1) % 3);
        prism.emplace_back(i, 3 + i);
    }
    const auto pc = certificate_from_spectrum<Rational>(3, RVec{1, 0, -2});
    REQUIRE(pc.valid());
    CHECK(*pc.bound == Rational(150, 11));
    const auto rp = attainment_check(Graph(6, prism), pc);
    CHECK(!rp.tight);
    CHECK(!rp.bound_matches_v);

    const auto invalid = check_certificate<Rational>(3, RVec{1, -2}, FBasisPolynomial<Rational>(3, {1}));
    CHECK_THROWS_AS(attainment_check(petersen_graph(), invalid), PreconditionError);
}
