#include "blowup/lp.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace blowup {

namespace {

// Minimal dense phase-1 simplex. Variables: lambda_1..lambda_k, slacks
// s_1..s_n, one artificial z for the convexity row. All right-hand sides are
// non-negative, so {slacks, z} is a starting basis. Feasible iff min z == 0.
class Simplex {
public:
    Simplex(const std::vector<std::vector<int>>& V, const std::vector<int>& a) {
        const std::size_t k = V.size();
        const std::size_t n = a.size();
        rows_ = n + 1;
        cols_ = k + n + 1;  // lambdas, slacks, artificial
        T_.assign(rows_, std::vector<mpq_class>(cols_ + 1, 0));
        basis_.assign(rows_, 0);

        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < k; ++i) T_[j][i] = V[i][j];
            T_[j][k + j] = 1;  // slack
            T_[j][cols_] = a[j];
            basis_[j] = k + j;
        }
        for (std::size_t i = 0; i < k; ++i) T_[n][i] = 1;
        T_[n][k + n] = 1;  // artificial
        T_[n][cols_] = 1;
        basis_[n] = k + n;
        artificial_ = k + n;
    }

    bool feasible() {
        // objective: minimize the artificial variable; reduced costs start
        // as minus its row (price out the basic artificial)
        std::vector<mpq_class> cost(cols_ + 1, 0);
        for (std::size_t c = 0; c <= cols_; ++c) cost[c] = -T_[rows_ - 1][c];
        cost[artificial_] = 0;

        for (;;) {
            // Bland: entering = smallest index with negative reduced cost
            std::size_t enter = cols_;
            for (std::size_t c = 0; c < cols_; ++c)
                if (cost[c] < 0) {
                    enter = c;
                    break;
                }
            if (enter == cols_) break;
            // ratio test, ties by smallest basis index
            std::size_t leave = rows_;
            mpq_class best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (T_[r][enter] <= 0) continue;
                mpq_class ratio = T_[r][cols_] / T_[r][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == rows_) throw std::logic_error("phase-1 simplex unbounded");
            pivot(leave, enter, cost);
        }
        return -cost[cols_] == 0;  // optimum of the artificial objective
    }

private:
    void pivot(std::size_t r, std::size_t c, std::vector<mpq_class>& cost) {
        mpq_class p = T_[r][c];
        for (auto& x : T_[r]) x /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || T_[i][c] == 0) continue;
            mpq_class f = T_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j) T_[i][j] -= f * T_[r][j];
        }
        if (cost[c] != 0) {
            mpq_class f = cost[c];
            for (std::size_t j = 0; j <= cols_; ++j) cost[j] -= f * T_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t rows_, cols_, artificial_;
    std::vector<std::vector<mpq_class>> T_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool newton_polyhedron_contains(const std::vector<std::vector<int>>& V,
                                const std::vector<int>& a) {
    if (V.empty()) return false;
    for (const auto& v : V)
        if (v.size() != a.size()) throw std::invalid_argument("exponent dimension mismatch");
    return Simplex(V, a).feasible();
}

}  // namespace blowup
