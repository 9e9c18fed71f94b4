#pragma once

// Independent reference computations used to cross-check the library.

#include "minkarr/body.hpp"
#include "minkarr/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using minkarr::Rational;
using minkarr::Vec;
using minkarr::operator*;
using minkarr::operator+;
using minkarr::operator-;

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> num(lo * den, hi * den);
    Rational q(num(rng), den);
    q.canonicalize();
    return q;
}

inline Vec random_vec(std::mt19937_64& rng, int d, long lo, long hi, long den) {
    Vec v;
    for (int i = 0; i < d; ++i)
        v.push_back(random_rational(rng, lo, hi, den));
    return v;
}

/// Random rational polygon with o in its interior: 4..9 points spread around
/// the origin with angular gaps below pi.
inline std::vector<Vec> random_polygon_points(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(4, 9);
    std::uniform_real_distribution<double> jitter(0.25, 0.75), radius(0.5, 2.0);
    const int k = count(rng);
    std::vector<Vec> pts;
    for (int j = 0; j < k; ++j) {
        const double a = 2 * M_PI * (j + jitter(rng)) / k;
        const double r = radius(rng);
        pts.push_back({minkarr::best_rational(r * std::cos(a), 1e-3, 64),
                       minkarr::best_rational(r * std::sin(a), 1e-3, 64)});
    }
    return pts;
}

inline minkarr::ConvexBody random_polygon(std::mt19937_64& rng) {
    return minkarr::ConvexBody::polytope(minkarr::Polytope::from_vertices(2, random_polygon_points(rng)));
}

/// ||x||_K from the vertex description: min sum(mu) with sum(mu_i v_i) = x, mu >= 0.
inline Rational vertex_norm(const std::vector<Vec>& verts, const Vec& x) {
    const std::size_t n = verts.size(), d = x.size();
    std::vector<Vec> A;
    Vec b;
    for (std::size_t k = 0; k < d; ++k) {
        Vec row(n), neg(n);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = verts[i][k];
            neg[i] = -verts[i][k];
        }
        A.push_back(row);
        b.push_back(x[k]);
        A.push_back(neg);
        b.push_back(-x[k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n, Rational(0));
        row[i] = -1;
        A.push_back(row);
        b.push_back(0);
    }
    auto res = minkarr::lp::minimize(A, b, Vec(n, Rational(1)));
    return res.value;
}

/// Is x in tK, decided from the vertex description by LP feasibility.
inline bool in_scaled_hull(const std::vector<Vec>& verts, const Vec& x, const Rational& t) {
    const std::size_t n = verts.size(), d = x.size();
    std::vector<Vec> A;
    Vec b;
    for (std::size_t k = 0; k < d; ++k) {
        Vec row(n), neg(n);
        for (std::size_t i = 0; i < n; ++i) {
            row[i] = verts[i][k];
            neg[i] = -verts[i][k];
        }
        A.push_back(row);
        b.push_back(x[k]);
        A.push_back(neg);
        b.push_back(-x[k]);
    }
    A.push_back(Vec(n, Rational(1)));
    b.push_back(t);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n, Rational(0));
        row[i] = -1;
        A.push_back(row);
        b.push_back(0);
    }
    return minkarr::lp::feasible(A, b, nullptr);
}

/// Bisection bracket [lo, hi] for the gauge using only scaled-hull feasibility.
inline std::pair<Rational, Rational> bisect_norm(const std::vector<Vec>& verts, const Vec& x, int rounds) {
    Rational lo = 0, hi = 1;
    while (!in_scaled_hull(verts, x, hi))
        hi *= 2;
    for (int i = 0; i < rounds; ++i) {
        Rational mid = (lo + hi) / 2;
        if (in_scaled_hull(verts, x, mid))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

/// Convex polygon given by its points; separating axis test for disjointness.
inline bool polygons_intersect(const std::vector<Vec>& P, const std::vector<Vec>& Q) {
    auto separated_by_edges_of = [](const std::vector<Vec>& A, const std::vector<Vec>& B) {
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j) {
                if (i == j)
                    continue;
                const Vec n{A[j][1] - A[i][1], A[i][0] - A[j][0]};
                auto proj = [&](const Vec& p) -> Rational { return n[0] * p[0] + n[1] * p[1]; };
                Rational amin = proj(A[0]), amax = amin, bmin = proj(B[0]), bmax = bmin;
                for (const auto& p : A) {
                    amin = std::min(amin, proj(p));
                    amax = std::max(amax, proj(p));
                }
                for (const auto& p : B) {
                    bmin = std::min(bmin, proj(p));
                    bmax = std::max(bmax, proj(p));
                }
                if (amax < bmin || bmax < amin)
                    return true;
            }
        return false;
    };
    return !separated_by_edges_of(P, Q) && !separated_by_edges_of(Q, P);
}

inline std::vector<Vec> homothet_points(const std::vector<Vec>& verts, const Rational& l, const Vec& v) {
    std::vector<Vec> out;
    for (const auto& p : verts)
        out.push_back(v + l * p);
    return out;
}

/// x in conv(pts): convex weights found by LP feasibility.
inline bool in_hull(const std::vector<Vec>& pts, const Vec& x) {
    const std::size_t n = pts.size(), d = x.size();
    std::vector<Vec> A;
    Vec b;
    auto both = [&](Vec row, const Rational& rhs) {
        Vec neg = row;
        for (auto& c : neg)
            c = -c;
        A.push_back(std::move(row));
        b.push_back(rhs);
        A.push_back(std::move(neg));
        b.push_back(-rhs);
    };
    for (std::size_t k = 0; k < d; ++k) {
        Vec row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = pts[i][k];
        both(row, x[k]);
    }
    both(Vec(n, Rational(1)), 1);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n, Rational(0));
        row[i] = -1;
        A.push_back(row);
        b.push_back(0);
    }
    return minkarr::lp::feasible(A, b, nullptr);
}

/// Dense sampling of P (triangle fan, barycentric grid) tested for membership in Q.
inline bool sampled_common_point(const std::vector<Vec>& P, const std::vector<Vec>& Q, int grid) {
    for (std::size_t t = 1; t + 1 < P.size(); ++t)
        for (int a = 0; a <= grid; ++a)
            for (int b = 0; a + b <= grid; ++b) {
                const Rational wa = Rational(a) / grid, wb = Rational(b) / grid, wc = 1 - wa - wb;
                Vec x = wa * P[0] + wb * P[t] + wc * P[t + 1];
                if (in_hull(Q, x))
                    return true;
            }
    return false;
}

/// Shoelace area and centroid of a polygon given in counter-clockwise order.
inline std::pair<Rational, Vec> shoelace(const std::vector<Vec>& ccw) {
    Rational area2 = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Vec& a = ccw[i];
        const Vec& b = ccw[(i + 1) % ccw.size()];
        const Rational c = a[0] * b[1] - b[0] * a[1];
        area2 += c;
        cx += (a[0] + b[0]) * c;
        cy += (a[1] + b[1]) * c;
    }
    return {area2 / 2, Vec{cx / (3 * area2), cy / (3 * area2)}};
}

/// Vertices sorted counter-clockwise around the origin (o is interior).
inline std::vector<Vec> ccw_order(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return std::atan2(a[1].get_d(), a[0].get_d()) < std::atan2(b[1].get_d(), b[0].get_d());
    });
    return pts;
}

} // namespace oracle
