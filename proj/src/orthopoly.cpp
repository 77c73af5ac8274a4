#include "regbound/orthopoly.hpp"

#include <cmath>
#include <string>

namespace regbound {

void require_tree_degree(int k) {
    if (k < 2) throw std::invalid_argument("tree degree k must be >= 2, got " + std::to_string(k));
}

void require_poly_index(int i) {
    if (i < 0 || i > kMaxPolyDegree)
        throw std::invalid_argument("polynomial index out of range [0, 64]: " + std::to_string(i));
}

MonomialPolynomial<Rational> G_as_monomial(int k, int i) {
    require_tree_degree(k);
    require_poly_index(i);
    if (i == 0) return MonomialPolynomial<Rational>({Rational(1)});
    if (i + 1 > kMaxPolyDegree) throw std::invalid_argument("G index exceeds 63");
    auto table = F_table<Rational>(k, i + 1);
    auto numer = table[i + 1] - table[i] * Rational(k - 1);
    auto [quot, rem] = divide_by_linear(numer, Rational(k));
    if (rem != 0) throw std::logic_error("F_{i+1} - (k-1) F_i not divisible by x - k");
    return quot;
}

std::vector<Rational> linearize(int k, int i, int j) {
    require_tree_degree(k);
    require_poly_index(i);
    require_poly_index(j);
    if (i + j > kMaxPolyDegree) throw std::invalid_argument("linearization degree exceeds 64");
    auto table = F_table<Rational>(k, std::max(i, j));
    auto product = table[i] * table[j];
    auto coeffs = to_F_basis(k, product).coeffs();
    coeffs.resize(i + j + 1, Rational(0));
    return coeffs;
}

double weight(int k, double x) {
    require_tree_degree(k);
    const double q2 = static_cast<double>(k - 1);
    const double edge = 2.0 * std::sqrt(q2);
    if (std::abs(x) > edge) throw std::domain_error("weight evaluated outside [-2q, 2q]");
    const double denom = static_cast<double>(k) * k - x * x;
    if (denom == 0.0) throw std::domain_error("weight singular at x = +-k");
    return std::sqrt(std::max(0.0, 4.0 * q2 - x * x)) / denom;
}

}  // namespace regbound
