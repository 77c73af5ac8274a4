#include "regbound/simplex.hpp"

#include <stdexcept>

namespace regbound {

const char* to_string(LPStatus status) {
    switch (status) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Unbounded: return "unbounded";
        case LPStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

namespace {

template <Scalar T>
class Tableau {
public:
    Tableau(const LinearProgram<T>& lp, double eps) : eps_(eps) {
        n_ = static_cast<int>(lp.objective.size());
        m_ = static_cast<int>(lp.rows.size());
        if (lp.relations.size() != lp.rows.size() || lp.rhs.size() != lp.rows.size())
            throw std::invalid_argument("linear program shape mismatch");

        // Normalize to nonnegative right-hand sides.
        std::vector<std::vector<T>> rows = lp.rows;
        std::vector<Relation> rel = lp.relations;
        std::vector<T> rhs = lp.rhs;
        int slacks = 0;
        int artificials = 0;
        for (int i = 0; i < m_; ++i) {
            if (static_cast<int>(rows[i].size()) != n_) throw std::invalid_argument("constraint row width mismatch");
            if (rhs[i] < 0) {
                for (auto& a : rows[i]) a = -a;
                rhs[i] = -rhs[i];
                if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
                else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
            }
            if (rel[i] != Relation::Equal) ++slacks;
            if (rel[i] != Relation::LessEqual) ++artificials;
        }
        first_artificial_ = n_ + slacks;
        cols_ = first_artificial_ + artificials;
        t_.assign(m_ + 1, std::vector<T>(cols_ + 1, T(0)));
        basis_.assign(m_, -1);

        int s = n_;
        int a = first_artificial_;
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) t_[i][j] = rows[i][j];
            t_[i][cols_] = rhs[i];
            if (rel[i] == Relation::LessEqual) {
                t_[i][s] = T(1);
                basis_[i] = s++;
            } else {
                if (rel[i] == Relation::GreaterEqual) t_[i][s++] = T(-1);
                t_[i][a] = T(1);
                basis_[i] = a++;
            }
        }
        objective_ = lp.objective;
    }

    SimplexResult<T> solve() {
        SimplexResult<T> result;
        if (first_artificial_ < cols_) {
            // Phase 1: maximize -sum(artificials).
            std::vector<T> cost(cols_, T(0));
            for (int j = first_artificial_; j < cols_; ++j) cost[j] = T(-1);
            set_objective(cost);
            run(cols_);
            // Feasible iff the artificial sum reaches zero.
            if (!is_zero(t_[m_][cols_], 1e3 * eps_)) {
                result.status = LPStatus::Infeasible;
                return result;
            }
            drive_out_artificials();
        }
        std::vector<T> cost(cols_, T(0));
        for (int j = 0; j < n_; ++j) cost[j] = objective_[j];
        set_objective(cost);
        if (!run(first_artificial_)) {
            result.status = LPStatus::Unbounded;
            return result;
        }
        result.status = LPStatus::Optimal;
        result.objective = t_[m_][cols_];
        result.x.assign(n_, T(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < n_) result.x[basis_[i]] = t_[i][cols_];
        return result;
    }

private:
    bool negative(const T& x) const {
        if constexpr (std::same_as<T, Rational>) return x < 0;
        else return x < -eps_;
    }
    bool positive(const T& x) const {
        if constexpr (std::same_as<T, Rational>) return x > 0;
        else return x > eps_;
    }

    // Objective row holds reduced costs z_j - c_j and the current value.
    void set_objective(const std::vector<T>& cost) {
        cost_ = cost;
        auto& z = t_[m_];
        for (int j = 0; j <= cols_; ++j) z[j] = j < cols_ ? T(-cost[j]) : T(0);
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < 0) continue;
            const T cb = cost[basis_[i]];
            if (cb == T(0)) continue;
            for (int j = 0; j <= cols_; ++j) z[j] += cb * t_[i][j];
        }
    }

    void pivot(int row, int col) {
        const T p = t_[row][col];
        for (auto& a : t_[row]) a /= p;
        for (int i = 0; i <= m_; ++i) {
            if (i == row) continue;
            const T factor = t_[i][col];
            if (factor == T(0)) continue;
            for (int j = 0; j <= cols_; ++j) t_[i][j] -= factor * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland's rule over columns [0, limit). Returns false when unbounded.
    bool run(int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                if (negative(t_[m_][j])) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            T best(0);
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] < 0 || !positive(t_[i][enter])) continue;
                T ratio = t_[i][cols_] / t_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            int col = -1;
            for (int j = 0; j < first_artificial_; ++j) {
                if (positive(t_[i][j]) || negative(t_[i][j])) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(i, col);
            } else {
                // Redundant constraint: retire the row.
                for (auto& a : t_[i]) a = T(0);
                basis_[i] = -1;
            }
        }
    }

    double eps_;
    int n_ = 0;
    int m_ = 0;
    int cols_ = 0;
    int first_artificial_ = 0;
    std::vector<std::vector<T>> t_;
    std::vector<int> basis_;
    std::vector<T> objective_;
    std::vector<T> cost_;
};

}  // namespace

template <Scalar T>
SimplexResult<T> solve_simplex(const LinearProgram<T>& lp, double eps) {
    Tableau<T> tableau(lp, eps);
    return tableau.solve();
}

template SimplexResult<double> solve_simplex(const LinearProgram<double>&, double);
template SimplexResult<Rational> solve_simplex(const LinearProgram<Rational>&, double);

}  // namespace regbound
