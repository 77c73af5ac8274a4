#pragma once

// Linear programming upper bound on the order of a connected k-regular graph
// whose nontrivial eigenvalues lie in a prescribed set {tau_1, ..., tau_d}.
//
// A polynomial f = sum f_i F_i^{(k)} with f(k) > 0, f(tau_i) <= 0,
// f_0 > 0 and f_i >= 0 (i >= 1) gives v <= f(k) / f_0.

#include "regbound/graph.hpp"
#include "regbound/orthopoly.hpp"
#include "regbound/scalar.hpp"
#include "regbound/simplex.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace regbound {

inline constexpr double kDefaultSlackTol = 1e-9;

// One of the four certificate conditions. `worst` is the tested quantity at
// its least favourable point: f(k), max_i f(tau_i), f_0, or min_{i>=1} f_i.
struct ConditionCheck {
    bool holds = false;
    double worst = 0.0;
    std::optional<int> worst_index;
};

struct CertificateConditions {
    ConditionCheck f_at_k_positive;
    ConditionCheck f_at_taus_nonpositive;
    ConditionCheck f0_positive;
    ConditionCheck coeffs_nonnegative;

    bool all() const {
        return f_at_k_positive.holds && f_at_taus_nonpositive.holds && f0_positive.holds &&
               coeffs_nonnegative.holds;
    }
};

template <Scalar T>
struct BoundCertificate {
    int k;
    FBasisPolynomial<T> f;
    T f_at_k;
    T f0;
    std::optional<T> bound;  // f(k) / f_0, present only when every condition holds
    CertificateConditions conditions;

    bool valid() const { return bound.has_value(); }
};

// Scalar-independent view of a certificate, for reports.
struct CertificateSummary {
    int k = 0;
    bool exact = false;
    bool valid = false;
    std::optional<double> bound;
    std::string bound_text;  // exact fraction in rational mode
    std::vector<double> f_coeffs;
    double f_at_k = 0.0;
    double f0 = 0.0;
    CertificateConditions conditions;
};

template <Scalar T>
CertificateSummary summarize(const BoundCertificate<T>& cert);

// taus are the nontrivial distinct eigenvalues, each < k. tol applies to the
// non-strict conditions (and as the positivity floor) in floating mode only.
template <Scalar T>
BoundCertificate<T> check_certificate(int k, std::span<const T> taus, const FBasisPolynomial<T>& f,
                                      double tol = kDefaultSlackTol);

// f(x) = (x - tau_1) prod_{i>=2} (x - tau_i)^2 expanded over F_i^{(k)} and
// checked. taus must be sorted descending.
template <Scalar T>
BoundCertificate<T> certificate_from_spectrum(int k, std::span<const T> taus, double tol = kDefaultSlackTol);

template <Scalar T>
struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    T objective = T(0);        // includes the constant 1
    std::vector<T> variables;  // f_1..f_u (dual) or m_1..m_d (primal)
};

// min 1 + sum_j f_j F_j(k)  s.t.  -sum_j f_j F_j(tau_i) >= 1,  f >= 0,  j = 1..u.
template <Scalar T>
LPSolution<T> lp_bound_dual(int k, std::span<const T> taus, int u);

// max 1 + sum_i m_i  s.t.  -sum_i m_i F_j(tau_i) <= F_j(k),  m >= 0,  j = 1..u.
template <Scalar T>
LPSolution<T> lp_bound_primal(int k, std::span<const T> taus, int u);

// Default LP degree 2d - 1.
inline int default_lp_degree(std::size_t d) { return static_cast<int>(2 * d) - 1; }

// Exact integer copies when every value lies within tol of an integer.
std::optional<std::vector<Rational>> exact_integers(std::span<const double> values, double tol = 1e-9);

struct TightnessReport {
    int v = 0;
    double bound = 0.0;
    std::vector<std::int64_t> traces;      // tr F_i(A), i = 1..deg f
    std::vector<double> trace_products;    // f_i tr F_i(A), i = 1..deg f
    std::vector<double> eigenvalues;       // nontrivial spectrum of the graph
    std::vector<double> f_at_eigenvalues;  // f(tau_i)
    bool tight = false;
    bool bound_matches_v = false;
};

// Checks the equality conditions of the bound on a concrete graph.
// Throws PreconditionError if the certificate is invalid, the graph is not
// connected and regular, or the degrees differ.
template <Scalar T>
TightnessReport attainment_check(const Graph& g, const BoundCertificate<T>& cert,
                                 double tol = kDefaultSlackTol, std::optional<double> cluster_tol = std::nullopt);

}  // namespace regbound
