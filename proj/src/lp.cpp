#include "perdel/lp.hpp"

#include "perdel/error.hpp"

namespace perdel {

LpResult lp_maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const std::size_t m = a.rows(), n = a.cols(), width = n + m + 1;
    for (const auto& v : b)
        if (v < 0) throw Error("LpInfeasibleStart", "right-hand side must be nonnegative");
    // rows 0..m-1: [A | I | b]; row m: [-c | 0 | 0]
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
        t[i][n + i] = 1;
        t[i][width - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

    LpResult res;
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            res.bounded = false;
            return res;
        }
        Rational p = t[leave][enter];
        for (auto& v : t[leave]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    res.value = t[m][width - 1];
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
    res.dual.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) res.dual[i] = t[m][n + i];
    return res;
}

}  // namespace perdel
