#pragma once

// Orthogonal polynomials of the homogeneous tree of degree k.
//
//   F_0 = 1, F_1 = x, F_2 = x^2 - k,
//   F_i = x F_{i-1} - (k-1) F_{i-2}   (i >= 3)
//   G_i = F_0 + ... + F_i = (F_{i+1} - (k-1) F_i) / (x - k)
//
// The (u,v) entry of F_i(A) counts non-backtracking walks of length i in a
// k-regular graph with adjacency matrix A.

#include "regbound/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regbound {

inline constexpr int kMaxPolyDegree = 64;

void require_tree_degree(int k);
void require_poly_index(int i);

// Polynomial in the basis 1, x, x^2, ...; trailing zeros are trimmed.
template <Scalar T>
class MonomialPolynomial {
public:
    MonomialPolynomial() = default;
    explicit MonomialPolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : T(0);
    }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend MonomialPolynomial operator+(const MonomialPolynomial& a, const MonomialPolynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return MonomialPolynomial(std::move(c));
    }

    friend MonomialPolynomial operator-(const MonomialPolynomial& a, const MonomialPolynomial& b) {
        return a + b * T(-1);
    }

    friend MonomialPolynomial operator*(const MonomialPolynomial& a, const T& s) {
        std::vector<T> c = a.coeffs_;
        for (auto& x : c) x *= s;
        return MonomialPolynomial(std::move(c));
    }

    friend MonomialPolynomial operator*(const MonomialPolynomial& a, const MonomialPolynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return MonomialPolynomial(std::move(c));
    }

    friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

    // x - r
    static MonomialPolynomial linear_factor(const T& root) { return MonomialPolynomial({T(-root), T(1)}); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

// Quotient and remainder of p / (x - root) by synthetic division.
template <Scalar T>
std::pair<MonomialPolynomial<T>, T> divide_by_linear(const MonomialPolynomial<T>& p, const T& root) {
    const auto& c = p.coeffs();
    if (c.empty()) return {MonomialPolynomial<T>(), T(0)};
    std::vector<T> q(c.size() - 1, T(0));
    T carry(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        T value = c[i] + carry * root;
        if (i == 0) return {MonomialPolynomial<T>(std::move(q)), value};
        q[i - 1] = value;
        carry = value;
    }
    return {MonomialPolynomial<T>(std::move(q)), T(0)};
}

// Value of F_i^{(k)}(x) by the forward three-term recurrence.
template <Scalar T>
T eval_F(int k, int i, const T& x) {
    require_tree_degree(k);
    require_poly_index(i);
    if (i == 0) return T(1);
    if (i == 1) return x;
    const T km1(k - 1);
    T prev = x;
    T cur = x * x - T(k);
    for (int j = 3; j <= i; ++j) {
        T next = x * cur - km1 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// G_i^{(k)}(x) as the partial sum F_0 + ... + F_i.
template <Scalar T>
T eval_G(int k, int i, const T& x) {
    require_tree_degree(k);
    require_poly_index(i);
    T sum(1);
    if (i == 0) return sum;
    const T km1(k - 1);
    T prev(1);
    T cur = x;
    sum += cur;
    for (int j = 2; j <= i; ++j) {
        T next = j == 2 ? T(x * x - T(k)) : T(x * cur - km1 * prev);
        prev = std::move(cur);
        cur = std::move(next);
        sum += cur;
    }
    return sum;
}

// F_0 ... F_n in the monomial basis.
template <Scalar T = Rational>
std::vector<MonomialPolynomial<T>> F_table(int k, int n) {
    require_tree_degree(k);
    require_poly_index(n);
    std::vector<MonomialPolynomial<T>> out;
    out.reserve(n + 1);
    out.emplace_back(std::vector<T>{T(1)});
    if (n >= 1) out.emplace_back(std::vector<T>{T(0), T(1)});
    if (n >= 2) out.emplace_back(std::vector<T>{T(-k), T(0), T(1)});
    const MonomialPolynomial<T> x({T(0), T(1)});
    for (int i = 3; i <= n; ++i) out.push_back(x * out[i - 1] - out[i - 2] * T(k - 1));
    return out;
}

template <Scalar T = Rational>
MonomialPolynomial<T> F_as_monomial(int k, int i) {
    return F_table<T>(k, i).back();
}

// Polynomial stored by its coefficients over F_0^{(k)}, F_1^{(k)}, ...
template <Scalar T>
class FBasisPolynomial {
public:
    FBasisPolynomial(int k, std::vector<T> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
        require_tree_degree(k_);
        if (static_cast<int>(coeffs_.size()) > kMaxPolyDegree + 1)
            throw std::invalid_argument("F-basis polynomial degree exceeds 64");
    }

    int k() const { return k_; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    T coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : T(0);
    }

    // Sum of f_i F_i(x), running the recurrence once.
    T operator()(const T& x) const {
        if (coeffs_.empty()) return T(0);
        T sum = coeffs_[0];
        if (coeffs_.size() == 1) return sum;
        const T km1(k_ - 1);
        T prev(1);
        T cur = x;
        sum += coeffs_[1] * cur;
        for (std::size_t i = 2; i < coeffs_.size(); ++i) {
            T next = i == 2 ? T(x * x - T(k_)) : T(x * cur - km1 * prev);
            prev = std::move(cur);
            cur = std::move(next);
            sum += coeffs_[i] * cur;
        }
        return sum;
    }

    MonomialPolynomial<T> to_monomial() const {
        if (coeffs_.empty()) return {};
        auto table = F_table<T>(k_, degree());
        MonomialPolynomial<T> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out = out + table[i] * coeffs_[i];
        return out;
    }

    friend bool operator==(const FBasisPolynomial&, const FBasisPolynomial&) = default;

private:
    int k_;
    std::vector<T> coeffs_;
};

// Change of basis by leading-term elimination; F_i is monic so each step
// removes the current top degree exactly.
template <Scalar T>
FBasisPolynomial<T> to_F_basis(int k, const MonomialPolynomial<T>& p) {
    require_tree_degree(k);
    const int n = p.degree();
    if (n > kMaxPolyDegree) throw std::invalid_argument("polynomial degree exceeds 64");
    if (n < 0) return FBasisPolynomial<T>(k, {});
    auto table = F_table<T>(k, n);
    std::vector<T> rest = p.coeffs();
    std::vector<T> f(n + 1, T(0));
    for (int d = n; d >= 0; --d) {
        const T lead = rest[d];
        f[d] = lead;
        if (lead == T(0)) continue;
        const auto& fd = table[d].coeffs();
        for (int j = 0; j <= d; ++j) rest[j] -= lead * fd[j];
    }
    return FBasisPolynomial<T>(k, std::move(f));
}

// G_i^{(k)} by exact division of F_{i+1} - (k-1) F_i by (x - k).
MonomialPolynomial<Rational> G_as_monomial(int k, int i);

// p_l(i,j), l = 0..i+j, with F_i F_j = sum_l p_l(i,j) F_l.
std::vector<Rational> linearize(int k, int i, int j);

// Orthogonality weight sqrt(4q^2 - x^2) / (k^2 - x^2), q = sqrt(k-1).
double weight(int k, double x);

}  // namespace regbound
