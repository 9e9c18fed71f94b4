#include "minkarr/rational.hpp"

#include <cmath>

namespace minkarr {

Rational parse_rational(const std::string& s) {
    if (s.empty() || s.find_first_of(".eE") != std::string::npos)
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

Rational from_double(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("from_double: non-finite value");
    return Rational(x);
}

Rational best_rational(double x, double tol, long max_den) {
    if (!std::isfinite(x))
        throw std::invalid_argument("best_rational: non-finite value");
    // convergents h/k of the continued fraction of x
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    Rational best(h, k);
    for (int it = 0; it < 64; ++it) {
        Rational cand(h, k);
        cand.canonicalize();
        best = cand;
        if (std::fabs(cand.get_d() - x) <= tol)
            break;
        if (frac < 1e-300)
            break;
        double inv = 1.0 / frac;
        long a = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (k_next > max_den)
            break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return best;
}

Number operator*(const Number& a, const Number& b) {
    if (a.exact() && b.exact())
        return Number(Rational(a.rational() * b.rational()));
    return Number::approx(a.to_double() * b.to_double(), std::max(a.tolerance(), b.tolerance()));
}

Number operator/(const Number& a, const Number& b) {
    if (a.exact() && b.exact())
        return Number(Rational(a.rational() / b.rational()));
    return Number::approx(a.to_double() / b.to_double(), std::max(a.tolerance(), b.tolerance()));
}

Number operator+(const Number& a, const Number& b) {
    if (a.exact() && b.exact())
        return Number(Rational(a.rational() + b.rational()));
    return Number::approx(a.to_double() + b.to_double(), std::max(a.tolerance(), b.tolerance()));
}

bool operator<=(const Number& a, const Number& b) {
    if (a.exact() && b.exact())
        return a.rational() <= b.rational();
    return a.to_double() <= b.to_double() + std::max(a.tolerance(), b.tolerance());
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector subtraction: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector addition: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vec operator*(const Rational& t, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = t * a[i];
    return r;
}

VecD to_double(const Vec& v) {
    VecD r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].get_d();
    return r;
}

Vec from_double(const VecD& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = from_double(v[i]);
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

namespace {

// Row-reduces M in place; returns the rank.
int row_reduce(std::vector<Vec>& M) {
    if (M.empty())
        return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][c] == 0)
                continue;
            Rational f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < cols; ++j)
                M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int affine_rank(const std::vector<Vec>& pts) {
    if (pts.empty())
        return -1;
    std::vector<Vec> diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts[i] - pts[0]);
    return row_reduce(diffs);
}

bool solve_linear(std::vector<Vec> M, Vec rhs, Vec& x) {
    const std::size_t n = M.size();
    for (std::size_t i = 0; i < n; ++i)
        M[i].push_back(rhs[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0)
            ++p;
        if (p == n)
            return false;
        std::swap(M[p], M[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0)
                continue;
            Rational f = M[i][c] / M[c][c];
            for (std::size_t j = c; j <= n; ++j)
                M[i][j] -= f * M[c][j];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        x[i] = M[i][n] / M[i][i];
    return true;
}

Rational determinant(std::vector<Vec> M) {
    const std::size_t n = M.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M[i][c] == 0)
                continue;
            Rational f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j)
                M[i][j] -= f * M[c][j];
        }
    }
    return det;
}

} // namespace minkarr
