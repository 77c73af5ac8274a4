#pragma once

// Dense two-phase tableau simplex with Bland's anticycling rule, instantiated
// for exact rationals and doubles.

#include "regbound/scalar.hpp"

#include <vector>

namespace regbound {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class LPStatus { Optimal, Unbounded, Infeasible };

const char* to_string(LPStatus status);

// maximize objective . x  subject to  rows[i] . x (relation[i]) rhs[i],  x >= 0
template <Scalar T>
struct LinearProgram {
    std::vector<T> objective;
    std::vector<std::vector<T>> rows;
    std::vector<Relation> relations;
    std::vector<T> rhs;
};

template <Scalar T>
struct SimplexResult {
    LPStatus status = LPStatus::Infeasible;
    T objective = T(0);
    std::vector<T> x;
};

// eps is the pivot/sign tolerance for doubles; ignored for Rational.
template <Scalar T>
SimplexResult<T> solve_simplex(const LinearProgram<T>& lp, double eps = 1e-11);

extern template SimplexResult<double> solve_simplex(const LinearProgram<double>&, double);
extern template SimplexResult<Rational> solve_simplex(const LinearProgram<Rational>&, double);

}  // namespace regbound
