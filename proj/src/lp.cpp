#include "parabolica/lp.hpp"

#include <stdexcept>

namespace parabolica {

// Tableau layout: columns 0..nvars-1 structural, then m surplus, then m
// artificial, last column the rhs. Rows start with the artificial basis and
// phase one minimises the artificial sum.
std::optional<std::vector<Rat>> lp_feasible_point(int nvars,
                                                  const std::vector<LinearConstraint>& cons) {
    const int m = static_cast<int>(cons.size());
    if (m == 0) return std::vector<Rat>(nvars, Rat(0));
    const int cols = nvars + 2 * m + 1;
    const int rhs_col = cols - 1;

    std::vector<std::vector<Rat>> tab(m + 1, std::vector<Rat>(cols, Rat(0)));
    std::vector<int> basis(m);

    for (int r = 0; r < m; ++r) {
        if (cons[r].rhs < 0) throw std::invalid_argument("lp_feasible_point: rhs must be >= 0");
        for (const auto& [v, c] : cons[r].coeffs) {
            if (v < 0 || v >= nvars) throw std::invalid_argument("lp_feasible_point: bad variable");
            tab[r][v] = c;
        }
        tab[r][nvars + r] = Rat(-1);      // surplus
        tab[r][nvars + m + r] = Rat(1);   // artificial
        tab[r][rhs_col] = cons[r].rhs;
        basis[r] = nvars + m + r;
    }
    // Objective row: minimise sum of artificials, expressed over the basis.
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < cols; ++c) tab[m][c] -= tab[r][c];
    for (int r = 0; r < m; ++r) tab[m][nvars + m + r] = Rat(0);

    for (;;) {
        // Bland: smallest-index entering column with a negative reduced cost.
        int enter = -1;
        for (int c = 0; c < nvars + 2 * m; ++c)
            if (tab[m][c] < 0) {
                enter = c;
                break;
            }
        if (enter < 0) break;
        // Ratio test, ties by smallest basis index.
        int leave = -1;
        Rat best;
        for (int r = 0; r < m; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r][rhs_col] / tab[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) throw std::runtime_error("lp_feasible_point: phase one unbounded");
        Rat pivot = tab[leave][enter];
        for (int c = 0; c < cols; ++c) tab[leave][c] /= pivot;
        for (int r = 0; r <= m; ++r) {
            if (r == leave) continue;
            Rat factor = tab[r][enter];
            if (factor == 0) continue;
            for (int c = 0; c < cols; ++c) tab[r][c] -= factor * tab[leave][c];
        }
        basis[leave] = enter;
    }

    if (tab[m][rhs_col] != 0) return std::nullopt;  // objective = -sum(artificials)

    std::vector<Rat> x(nvars, Rat(0));
    for (int r = 0; r < m; ++r)
        if (basis[r] < nvars) x[basis[r]] = tab[r][rhs_col];
    return x;
}

}  // namespace parabolica
