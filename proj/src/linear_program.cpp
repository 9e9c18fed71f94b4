#include "minkarr/linear_program.hpp"

#include <cassert>
#include <optional>

namespace minkarr::lp {

namespace {

// Equality-form tableau: rows of [coefficients | rhs], with one basic variable per row.
struct Tableau {
    std::vector<Vec> rows;
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;

    void pivot(std::size_t r, std::size_t col) {
        Rational inv = 1 / rows[r][col];
        for (auto& v : rows[r])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0)
                continue;
            Rational f = rows[i][col];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (rows[r][j] != 0)
                    rows[i][j] -= f * rows[r][j];
        }
        basis[r] = col;
    }

    // Reduced costs for objective cost (length ncols); returns objective row with value in slot ncols.
    Vec reduced(const Vec& cost) const {
        Vec red(ncols + 1);
        for (std::size_t j = 0; j < ncols; ++j)
            red[j] = cost[j];
        red[ncols] = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= ncols; ++j)
                if (rows[i][j] != 0)
                    red[j] -= cb * rows[i][j];
        }
        return red;
    }

    // Runs Bland's-rule simplex over the columns in [0, active). Returns false on unboundedness.
    bool optimize(const Vec& cost, std::size_t active) {
        for (;;) {
            Vec red = reduced(cost);
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < active; ++j)
                if (red[j] < 0) {
                    enter = j;
                    break;
                }
            if (!enter)
                return true;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][*enter] <= 0)
                    continue;
                Rational ratio = rows[i][ncols] / rows[i][*enter];
                if (!leave || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[*leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (!leave)
                return false;
            pivot(*leave, *enter);
        }
    }
};

} // namespace

Result minimize(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m)
        throw DimensionMismatch("lp: row count of A and b differ");
    for (const auto& row : A)
        if (row.size() != n)
            throw DimensionMismatch("lp: row width differs from objective length");

    // columns: x+ [0,n), x- [n,2n), slack [2n,2n+m), artificial [2n+m, 2n+m+k)
    std::vector<std::size_t> needs_art;
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0)
            needs_art.push_back(i);
    const std::size_t base = 2 * n + m;
    Tableau t;
    t.ncols = base + needs_art.size();
    t.rows.assign(m, Vec(t.ncols + 1, Rational(0)));
    t.basis.assign(m, 0);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Rational sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t.rows[i][j] = sign * A[i][j];
            t.rows[i][n + j] = -sign * A[i][j];
        }
        t.rows[i][2 * n + i] = sign;
        t.rows[i][t.ncols] = sign * b[i];
        if (b[i] < 0) {
            t.rows[i][base + art] = 1;
            t.basis[i] = base + art;
            ++art;
        } else {
            t.basis[i] = 2 * n + i;
        }
    }

    Result res;
    if (!needs_art.empty()) {
        Vec phase1(t.ncols, Rational(0));
        for (std::size_t j = base; j < t.ncols; ++j)
            phase1[j] = 1;
        t.optimize(phase1, t.ncols);
        Vec red = t.reduced(phase1);
        if (red[t.ncols] != 0) {
            res.status = Status::Infeasible;
            return res;
        }
        // drive remaining artificials out of the basis, dropping redundant rows
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < base) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < base; ++j)
                if (t.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    Vec cost(t.ncols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = c[j];
        cost[n + j] = -c[j];
    }
    if (!t.optimize(cost, base)) {
        res.status = Status::Unbounded;
        return res;
    }
    Vec y(t.ncols, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        y[t.basis[i]] = t.rows[i][t.ncols];
    res.x.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        res.x[j] = y[j] - y[n + j];
    res.value = dot(res.x, c);
    res.status = Status::Optimal;
    return res;
}

bool feasible(const std::vector<Vec>& A, const Vec& b, Vec* witness) {
    const std::size_t n = A.empty() ? 0 : A[0].size();
    Result r = minimize(A, b, Vec(n, Rational(0)));
    if (r.status != Status::Optimal)
        return false;
    if (witness)
        *witness = r.x;
    return true;
}

} // namespace minkarr::lp
