#pragma once

#include "minkarr/arrangement.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace minkarr {

/// 3^d unit translates of [-1,1]^d centred on {-1,0,1}^d.
Arrangement cube_grid_witness(int d);

/// Exact arithmetic in Q(sqrt 5): a + b sqrt 5.
struct QuadSqrt5 {
    Rational a = 0, b = 0;

    static QuadSqrt5 phi() { return {Rational(1, 2), Rational(1, 2)}; }
    QuadSqrt5 operator+(const QuadSqrt5& o) const { return {a + o.a, b + o.b}; }
    QuadSqrt5 operator-(const QuadSqrt5& o) const { return {a - o.a, b - o.b}; }
    QuadSqrt5 operator*(const QuadSqrt5& o) const { return {a * o.a + 5 * b * o.b, a * o.b + b * o.a}; }
    QuadSqrt5 operator/(const QuadSqrt5& o) const;
    int sign() const;
    bool operator==(const QuadSqrt5& o) const { return a == o.a && b == o.b; }
    double to_double() const;
};

/// The 12 vertices (0,+-1,+-phi) and cyclic shifts, scaled to the unit sphere.
/// Coordinates are truncated towards zero on a 2^-52 grid, so each point lies
/// strictly inside the unit ball.
std::vector<Vec> icosahedron_witness();

struct IcosahedronCertificate {
    /// min over pairs of |x_i - x_j|^2 / |x_i|^2, exactly, in Q(sqrt 5)
    QuadSqrt5 min_ratio;
    /// the identity min_ratio = 4 / (phi + 2)
    bool min_ratio_identity = false;
    /// every ratio exceeds 1
    bool all_pairs_exceed_one = false;
};
IcosahedronCertificate icosahedron_certificate();

/// C^k x K as a product body (K itself when k = 0).
ConvexBody amplified_body(int k, const ConvexBody& K);

/// {(s, p) : s in {-1,1}^k, p in points}, boundary points of C^k x K.
std::vector<Vec> cube_product_amplifier(int k, const std::vector<Vec>& points);

/// Ten unit translates of the centred triangle on a triangular lattice.
Arrangement triangle_translates10();

/// Product of floor(d/2) copies of the ten-triangle arrangement, 10^floor(d/2)
/// translates of a body with centroid at o. Odd d appends a [-1,1] factor on
/// which every member sits at 0.
Arrangement triangle_product_witness(int d);

/// Directory holding witness files; MINKARR_DATA_DIR overrides the build default.
std::filesystem::path data_dir();

/// "circles8" or "triangles10" from the data directory.
Arrangement load_named_witness(const std::string& name);

} // namespace minkarr
