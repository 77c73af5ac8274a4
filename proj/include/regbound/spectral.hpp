#pragma once

// Adjacency spectra and polynomials F_i^{(k)} evaluated at the adjacency matrix.

#include "regbound/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace regbound {

inline constexpr int kMaxSpectralVertices = 512;

struct SpectrumEntry {
    double value;
    int multiplicity;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Distinct eigenvalues, strictly decreasing, with multiplicities.
struct Spectrum {
    std::vector<SpectrumEntry> entries;
    double tol = 0.0;
    int v = 0;

    // Number of distinct eigenvalues other than the largest.
    int d() const { return static_cast<int>(entries.size()) - 1; }
    // tau_1 > ... > tau_d.
    std::vector<double> nontrivial() const;
};

double default_cluster_tol(const Graph& g);

// All adjacency eigenvalues, descending.
std::vector<double> eigenvalues(const Graph& g);

// Eigenvalues within tol of their neighbour are merged (chained) into one
// entry whose value is the cluster mean.
Spectrum spectrum(const Graph& g, std::optional<double> tol = std::nullopt);

// Dense square matrix of exact 64-bit integers; arithmetic in the
// recurrences is overflow-checked.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
    static IntMatrix identity(int n);

    int size() const { return n_; }
    std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    std::int64_t trace() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> data_;
};

// F_i^{(k)}(A) by the matrix three-term recurrence. Requires a regular graph.
IntMatrix F_of_A(const Graph& g, int i);

// F_0(A), ..., F_n(A).
std::vector<IntMatrix> F_of_A_sequence(const Graph& g, int n);

// tr F_i(A) for i = 0..n.
std::vector<std::int64_t> F_traces(const Graph& g, int n);

// Smallest i >= 1 with tr F_i(A) != 0. Requires a connected k-regular graph
// with k >= 2 (every such graph has a cycle).
int girth_via_traces(const Graph& g);

struct HoffmanData {
    int e;
    double residual;
};

// e with sum_{i<d} F_i(A) + F_d(A)/e = J, for graphs with girth >= 2d.
// Throws PreconditionError when the girth condition fails and NumericError
// when the identity does not hold with the extracted e.
HoffmanData hoffman_e(const Graph& g, std::optional<double> tol = std::nullopt);

// k - tau_1 for a connected regular graph.
double spectral_gap(const Graph& g, std::optional<double> tol = std::nullopt);

}  // namespace regbound
