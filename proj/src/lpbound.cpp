#include "regbound/lpbound.hpp"

#include "regbound/errors.hpp"
#include "regbound/metrics.hpp"
#include "regbound/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace regbound {

namespace {

template <Scalar T>
void require_taus(int k, std::span<const T> taus) {
    require_tree_degree(k);
    for (const T& t : taus)
        if (!(t < T(k))) throw std::invalid_argument("nontrivial eigenvalues must be < k");
}

template <Scalar T>
bool strictly_positive(const T& x, double tol) {
    if constexpr (std::same_as<T, Rational>) {
        (void)tol;
        return x > 0;
    } else {
        return x > tol;
    }
}

template <Scalar T>
bool at_most(const T& x, const T& limit, double tol) {
    if constexpr (std::same_as<T, Rational>) {
        (void)tol;
        return x <= limit;
    } else {
        return x <= limit + tol;
    }
}

}  // namespace

template <Scalar T>
CertificateSummary summarize(const BoundCertificate<T>& cert) {
    CertificateSummary s;
    s.k = cert.k;
    s.exact = std::same_as<T, Rational>;
    s.valid = cert.valid();
    if (cert.bound) {
        s.bound = to_double(*cert.bound);
        if constexpr (std::same_as<T, Rational>) s.bound_text = to_string(*cert.bound);
    }
    for (const T& c : cert.f.coeffs()) s.f_coeffs.push_back(to_double(c));
    s.f_at_k = to_double(cert.f_at_k);
    s.f0 = to_double(cert.f0);
    s.conditions = cert.conditions;
    return s;
}

template <Scalar T>
BoundCertificate<T> check_certificate(int k, std::span<const T> taus, const FBasisPolynomial<T>& f, double tol) {
    require_taus(k, taus);
    if (f.k() != k) throw std::invalid_argument("certificate polynomial uses a different k");

    BoundCertificate<T> cert{k, f, f(T(k)), f.coeff(0), std::nullopt, {}};
    auto& c = cert.conditions;

    c.f_at_k_positive = {strictly_positive(cert.f_at_k, tol), to_double(cert.f_at_k), std::nullopt};

    c.f_at_taus_nonpositive.holds = true;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const T value = f(taus[i]);
        const double vd = to_double(value);
        if (!c.f_at_taus_nonpositive.worst_index || vd > c.f_at_taus_nonpositive.worst) {
            c.f_at_taus_nonpositive.worst = vd;
            c.f_at_taus_nonpositive.worst_index = static_cast<int>(i) + 1;
        }
        if (!at_most(value, T(0), tol)) c.f_at_taus_nonpositive.holds = false;
    }

    c.f0_positive = {strictly_positive(cert.f0, tol), to_double(cert.f0), 0};

    c.coeffs_nonnegative.holds = true;
    for (int i = 1; i <= f.degree(); ++i) {
        const T& fi = f.coeffs()[i];
        const double fd = to_double(fi);
        if (!c.coeffs_nonnegative.worst_index || fd < c.coeffs_nonnegative.worst) {
            c.coeffs_nonnegative.worst = fd;
            c.coeffs_nonnegative.worst_index = i;
        }
        if (!at_most(T(-fi), T(0), tol)) c.coeffs_nonnegative.holds = false;
    }

    if (c.all()) cert.bound = T(cert.f_at_k / cert.f0);
    return cert;
}

template <Scalar T>
BoundCertificate<T> certificate_from_spectrum(int k, std::span<const T> taus, double tol) {
    if (taus.empty()) throw std::invalid_argument("certificate_from_spectrum: no nontrivial eigenvalues");
    require_taus(k, taus);
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] < taus[i - 1])) throw std::invalid_argument("eigenvalues must be strictly decreasing");
    MonomialPolynomial<T> p = MonomialPolynomial<T>::linear_factor(taus[0]);
    for (std::size_t i = 1; i < taus.size(); ++i) {
        const auto factor = MonomialPolynomial<T>::linear_factor(taus[i]);
        p = p * factor * factor;
    }
    return check_certificate(k, taus, to_F_basis(k, p), tol);
}

template <Scalar T>
LPSolution<T> lp_bound_dual(int k, std::span<const T> taus, int u) {
    if (taus.empty()) throw std::invalid_argument("lp_bound_dual: no nontrivial eigenvalues");
    if (u < 1 || u > kMaxPolyDegree) throw std::invalid_argument("lp_bound_dual: degree u must be in [1, 64]");
    require_taus(k, taus);

    LinearProgram<T> lp;
    lp.objective.resize(u);
    for (int j = 1; j <= u; ++j) lp.objective[j - 1] = -eval_F(k, j, T(k));
    for (const T& t : taus) {
        std::vector<T> row(u);
        for (int j = 1; j <= u; ++j) row[j - 1] = -eval_F(k, j, t);
        lp.rows.push_back(std::move(row));
        lp.relations.push_back(Relation::GreaterEqual);
        lp.rhs.push_back(T(1));
    }
    const auto r = solve_simplex(lp);
    LPSolution<T> out;
    out.status = r.status;
    if (r.status == LPStatus::Optimal) {
        out.objective = T(1) - r.objective;
        out.variables = r.x;
    }
    return out;
}

template <Scalar T>
LPSolution<T> lp_bound_primal(int k, std::span<const T> taus, int u) {
    if (taus.empty()) throw std::invalid_argument("lp_bound_primal: no nontrivial eigenvalues");
    if (u < 0 || u > kMaxPolyDegree) throw std::invalid_argument("lp_bound_primal: degree u must be in [0, 64]");
    require_taus(k, taus);

    const std::size_t d = taus.size();
    LinearProgram<T> lp;
    lp.objective.assign(d, T(1));
    for (int j = 1; j <= u; ++j) {
        std::vector<T> row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = -eval_F(k, j, taus[i]);
        lp.rows.push_back(std::move(row));
        lp.relations.push_back(Relation::LessEqual);
        lp.rhs.push_back(eval_F(k, j, T(k)));
    }
    const auto r = solve_simplex(lp);
    LPSolution<T> out;
    out.status = r.status;
    if (r.status == LPStatus::Optimal) {
        out.objective = T(1) + r.objective;
        out.variables = r.x;
    }
    return out;
}

std::optional<std::vector<Rational>> exact_integers(std::span<const double> values, double tol) {
    std::vector<Rational> out;
    for (double x : values) {
        long long n = 0;
        if (!near_integer(x, tol, &n)) return std::nullopt;
        out.emplace_back(n);
    }
    return out;
}

template <Scalar T>
TightnessReport attainment_check(const Graph& g, const BoundCertificate<T>& cert, double tol,
                                 std::optional<double> cluster_tol) {
    if (!cert.valid()) throw PreconditionError("attainment_check: certificate is not valid");
    const auto k = regularity(g);
    if (!k) throw PreconditionError("attainment_check: graph is not regular");
    if (!is_connected(g)) throw PreconditionError("attainment_check: graph is not connected");
    if (*k != cert.k)
        throw PreconditionError("attainment_check: certificate k = " + std::to_string(cert.k) +
                                " but graph degree is " + std::to_string(*k));

    TightnessReport rep;
    rep.v = g.vertex_count();
    rep.bound = to_double(*cert.bound);
    rep.tight = true;

    const int deg = cert.f.degree();
    const auto traces = F_traces(g, std::max(deg, 0));
    for (int i = 1; i <= deg; ++i) {
        const T& fi = cert.f.coeffs()[i];
        rep.traces.push_back(traces[i]);
        const double product = to_double(fi) * static_cast<double>(traces[i]);
        rep.trace_products.push_back(product);
        if (traces[i] != 0 && !is_zero(fi, tol)) rep.tight = false;
    }

    const Spectrum s = spectrum(g, cluster_tol);
    rep.eigenvalues = s.nontrivial();
    for (double tau : rep.eigenvalues) {
        double value = 0.0;
        bool zero = false;
        bool evaluated = false;
        if constexpr (std::same_as<T, Rational>) {
            long long n = 0;
            if (near_integer(tau, 1e-9, &n)) {
                const Rational exact = cert.f(Rational(n));
                value = to_double(exact);
                zero = exact == 0;
                evaluated = true;
            }
        }
        if (!evaluated) {
            // Floating evaluation, judged relative to the size of the terms.
            double scale = 1.0;
            double sum = 0.0;
            for (int i = 0; i <= deg; ++i) {
                const double term = to_double(cert.f.coeffs()[i]) * eval_F(cert.k, i, tau);
                sum += term;
                scale = std::max(scale, std::abs(term));
            }
            value = sum;
            zero = std::abs(sum) <= tol * scale;
        }
        rep.f_at_eigenvalues.push_back(value);
        if (!zero) rep.tight = false;
    }
    rep.bound_matches_v = std::abs(rep.bound - rep.v) <= 1e-6 * std::max(1.0, rep.bound);
    return rep;
}

template CertificateSummary summarize(const BoundCertificate<double>&);
template CertificateSummary summarize(const BoundCertificate<Rational>&);
template BoundCertificate<double> check_certificate(int, std::span<const double>, const FBasisPolynomial<double>&,
                                                    double);
template BoundCertificate<Rational> check_certificate(int, std::span<const Rational>,
                                                      const FBasisPolynomial<Rational>&, double);
template BoundCertificate<double> certificate_from_spectrum(int, std::span<const double>, double);
template BoundCertificate<Rational> certificate_from_spectrum(int, std::span<const Rational>, double);
template LPSolution<double> lp_bound_dual(int, std::span<const double>, int);
template LPSolution<Rational> lp_bound_dual(int, std::span<const Rational>, int);
template LPSolution<double> lp_bound_primal(int, std::span<const double>, int);
template LPSolution<Rational> lp_bound_primal(int, std::span<const Rational>, int);
template TightnessReport attainment_check(const Graph&, const BoundCertificate<double>&, double,
                                          std::optional<double>);
template TightnessReport attainment_check(const Graph&, const BoundCertificate<Rational>&, double,
                                          std::optional<double>);

}  // namespace regbound
