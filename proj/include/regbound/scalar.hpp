#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <string>

namespace regbound {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Coefficient types the polynomial and LP code is instantiated for.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <Scalar T>
T from_int(long long n) {
    return T(n);
}

// Comparison helpers: exact for Rational, with an absolute tolerance for double.
template <Scalar T>
bool is_zero(const T& x, double tol) {
    if constexpr (std::same_as<T, Rational>) {
        (void)tol;
        return x == 0;
    } else {
        return std::abs(x) <= tol;
    }
}

template <Scalar T>
T abs_value(const T& x) {
    return x < 0 ? T(-x) : x;
}

// Returns the integer nearest to x when it lies within tol, for snapping
// numerically computed eigenvalues to exact values.
bool near_integer(double x, double tol, long long* out);

std::string to_string(const Rational& x);

}  // namespace regbound
