#include "regbound/scalar.hpp"

namespace regbound {

bool near_integer(double x, double tol, long long* out) {
    const double r = std::round(x);
    if (!std::isfinite(x) || std::abs(x - r) > tol) return false;
    if (out) *out = static_cast<long long>(r);
    return true;
}

std::string to_string(const Rational& x) { return x.str(); }

}  // namespace regbound
