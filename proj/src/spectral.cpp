#include "regbound/spectral.hpp"

#include "regbound/errors.hpp"
#include "regbound/metrics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace regbound {

namespace {

void require_spectral_size(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("spectrum of the empty graph");
    if (g.vertex_count() > kMaxSpectralVertices)
        throw SizeLimitError("spectral routines capped at 512 vertices, got " + std::to_string(g.vertex_count()));
}

int require_regular(const Graph& g, const char* op) {
    const auto k = regularity(g);
    if (!k) throw PreconditionError(std::string(op) + ": graph is not regular");
    return *k;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw NumericError("integer overflow in F_i(A) recurrence");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw NumericError("integer overflow in F_i(A) recurrence");
    return r;
}

// A * m - shift * prev, with A applied through adjacency lists.
IntMatrix step(const Graph& g, const IntMatrix& m, const IntMatrix& prev, std::int64_t shift) {
    const int n = g.vertex_count();
    IntMatrix out(n);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            std::int64_t acc = checked_mul(-shift, prev(x, y));
            for (Vertex z : g.neighbors(x)) acc = checked_add(acc, m(z, y));
            out(x, y) = acc;
        }
    }
    return out;
}

// Iterates F_0(A), F_1(A), ... calling visit(i, F_i(A)) until it returns false.
template <class Visit>
void walk_F_of_A(const Graph& g, int k, int n, Visit&& visit) {
    const int v = g.vertex_count();
    IntMatrix prev = IntMatrix::identity(v);
    if (!visit(0, prev) || n == 0) return;
    IntMatrix cur(v);
    for (Vertex x = 0; x < v; ++x)
        for (Vertex y : g.neighbors(x)) cur(x, y) = 1;
    if (!visit(1, cur)) return;
    for (int i = 2; i <= n; ++i) {
        // F_2 = x F_1 - k F_0; afterwards the shift is k - 1.
        IntMatrix next = step(g, cur, prev, i == 2 ? k : k - 1);
        prev = std::move(cur);
        cur = std::move(next);
        if (!visit(i, cur)) return;
    }
}

}  // namespace

std::vector<double> Spectrum::nontrivial() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < entries.size(); ++i) out.push_back(entries[i].value);
    return out;
}

double default_cluster_tol(const Graph& g) {
    int kmax = 0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) kmax = std::max(kmax, g.degree(x));
    return 1e-8 * std::max(1, kmax);
}

std::vector<double> eigenvalues(const Graph& g) {
    require_spectral_size(g);
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y : g.neighbors(x)) a(x, y) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Spectrum spectrum(const Graph& g, std::optional<double> tol) {
    const double t = tol.value_or(default_cluster_tol(g));
    if (!(t > 0)) throw std::invalid_argument("cluster tolerance must be positive");
    const auto values = eigenvalues(g);
    Spectrum s;
    s.tol = t;
    s.v = g.vertex_count();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i - 1] - values[i] > t) {
            double sum = 0;
            for (std::size_t j = start; j < i; ++j) sum += values[j];
            const double mean = sum / static_cast<double>(i - start);
            s.entries.push_back({mean == 0.0 ? 0.0 : mean, static_cast<int>(i - start)});
            start = i;
        }
    }
    return s;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (int i = 0; i < n_; ++i) t = checked_add(t, (*this)(i, i));
    return t;
}

std::vector<IntMatrix> F_of_A_sequence(const Graph& g, int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("F_of_A index out of range [0, 64]");
    require_spectral_size(g);
    const int k = require_regular(g, "F_of_A");
    std::vector<IntMatrix> out;
    walk_F_of_A(g, k, n, [&](int, const IntMatrix& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

IntMatrix F_of_A(const Graph& g, int i) {
    if (i < 0 || i > 64) throw std::invalid_argument("F_of_A index out of range [0, 64]");
    require_spectral_size(g);
    const int k = require_regular(g, "F_of_A");
    IntMatrix result;
    walk_F_of_A(g, k, i, [&](int j, const IntMatrix& m) {
        if (j == i) result = m;
        return j < i;
    });
    return result;
}

std::vector<std::int64_t> F_traces(const Graph& g, int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("F_traces index out of range [0, 64]");
    require_spectral_size(g);
    const int k = require_regular(g, "F_traces");
    std::vector<std::int64_t> out;
    walk_F_of_A(g, k, n, [&](int, const IntMatrix& m) {
        out.push_back(m.trace());
        return true;
    });
    return out;
}

int girth_via_traces(const Graph& g) {
    require_spectral_size(g);
    const int k = require_regular(g, "girth_via_traces");
    if (!is_connected(g)) throw PreconditionError("girth_via_traces: graph is not connected");
    if (k < 2) throw PreconditionError("girth_via_traces: graph is acyclic");
    const int cap = std::min(2 * g.vertex_count(), 64);
    int found = 0;
    walk_F_of_A(g, k, cap, [&](int i, const IntMatrix& m) {
        if (i >= 1 && m.trace() != 0) {
            found = i;
            return false;
        }
        return true;
    });
    if (found == 0) throw PreconditionError("girth_via_traces: no nonzero trace within scan cap");
    return found;
}

HoffmanData hoffman_e(const Graph& g, std::optional<double> tol) {
    require_regular(g, "hoffman_e");
    if (!is_connected(g)) throw PreconditionError("hoffman_e: graph is not connected");
    const Spectrum s = spectrum(g, tol);
    const int d = s.d();
    if (d < 1) throw PreconditionError("hoffman_e: needs at least one nontrivial eigenvalue");
    const auto girth = girth_bfs(g);
    if (girth && *girth < 2 * d)
        throw PreconditionError("hoffman_e: girth " + std::to_string(*girth) + " < 2d = " + std::to_string(2 * d));

    const auto seq = F_of_A_sequence(g, d);
    const DistanceTable dist(g);
    const int n = g.vertex_count();
    std::int64_t e = 0;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (x != y && dist(x, y) == d) e = std::max(e, seq[d](x, y));
    if (e <= 0) throw NumericError("hoffman_e: no positive entry of F_d(A) at distance d");

    // e * (sum_{i<d} F_i(A) - J) + F_d(A) must vanish entrywise.
    std::int64_t worst = 0;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            std::int64_t partial = -1;
            for (int i = 0; i < d; ++i) partial += seq[i](x, y);
            const std::int64_t r = checked_add(checked_mul(e, partial), seq[d](x, y));
            worst = std::max(worst, r < 0 ? -r : r);
        }
    }
    const double residual = static_cast<double>(worst) / static_cast<double>(e);
    if (worst != 0)
        throw NumericError("hoffman_e: identity fails with e = " + std::to_string(e) +
                           ", residual " + std::to_string(residual));
    return {static_cast<int>(e), residual};
}

double spectral_gap(const Graph& g, std::optional<double> tol) {
    const int k = require_regular(g, "spectral_gap");
    if (!is_connected(g)) throw PreconditionError("spectral_gap: graph is not connected");
    const Spectrum s = spectrum(g, tol);
    if (s.entries.size() < 2) throw PreconditionError("spectral_gap: graph has a single eigenvalue");
    return static_cast<double>(k) - s.entries[1].value;
}

}  // namespace regbound
