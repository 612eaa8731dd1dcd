#include "mdet/simplex_lp.hpp"

#include "mdet/errors.hpp"

namespace mdet {

bool nonneg_solve_exists(const QMat& g, const std::vector<Rat>& w) {
    if (g.rows() != w.size()) throw Error("nonneg_solve_exists: shape mismatch");
    const std::size_t m = g.rows(), k = g.cols();
    // Phase-one tableau: minimize the sum of artificials a with
    // g x + I a = w (rows flipped so the right-hand side is nonnegative).
    const std::size_t cols = k + m + 1;  // variables + artificials + rhs
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < m; ++i) {
        Rat sign = (w[i] < 0) ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < k; ++j) t[i][j] = sign * g.at(i, j);
        t[i][k + i] = 1;
        t[i][cols - 1] = sign * w[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;
    // Reduced-cost row for objective sum(a): with the artificial basis the
    // reduced cost of column j is -sum_i t[i][j] for real columns, 0 for
    // artificials. Maintain it explicitly through pivots.
    std::vector<Rat> cost(cols);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[cols - 1] -= t[i][cols - 1];

    while (true) {
        // Bland: entering = lowest-index column with negative reduced cost.
        std::size_t enter = cols - 1;
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols - 1) break;  // optimal
        // Ratio test; ties broken by lowest basic variable index (Bland).
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; objective stays where it is
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // Feasible iff all artificials were driven to zero.
    return cost[cols - 1] == 0;
}

}  // namespace mdet
