#include "minkarr/constructions.hpp"

#include "minkarr/json_io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#ifndef MINKARR_DATA_DIR
#define MINKARR_DATA_DIR "data"
#endif

namespace minkarr {

Arrangement cube_grid_witness(int d) {
    if (d <= 0 || d > 8)
        throw std::invalid_argument("cube grid dimension must be in 1..8");
    std::vector<Homothet> hs;
    long total = 1;
    for (int i = 0; i < d; ++i)
        total *= 3;
    for (long code = 0; code < total; ++code) {
        Vec v(static_cast<std::size_t>(d));
        long c = code;
        for (int i = 0; i < d; ++i) {
            v[static_cast<std::size_t>(i)] = c % 3 - 1;
            c /= 3;
        }
        hs.push_back({Rational(1), std::move(v)});
    }
    return Arrangement(cube(d), std::move(hs));
}

QuadSqrt5 QuadSqrt5::operator/(const QuadSqrt5& o) const {
    // multiply by the conjugate a - b sqrt 5
    Rational n = o.a * o.a - 5 * o.b * o.b;
    if (n == 0)
        throw std::domain_error("division by zero in Q(sqrt 5)");
    QuadSqrt5 conj{o.a, -o.b};
    QuadSqrt5 num = *this * conj;
    return {num.a / n, num.b / n};
}

int QuadSqrt5::sign() const {
    const int sa = sgn(a), sb = sgn(b);
    if (sa == 0)
        return sb;
    if (sb == 0 || sa == sb)
        return sa;
    // opposite signs: compare a^2 with 5 b^2
    Rational diff = a * a - 5 * b * b;
    return sgn(diff) * sa;
}

double QuadSqrt5::to_double() const { return a.get_d() + b.get_d() * std::sqrt(5.0); }

namespace {

std::vector<std::array<QuadSqrt5, 3>> icosahedron_vertices() {
    const QuadSqrt5 phi = QuadSqrt5::phi();
    const QuadSqrt5 one{Rational(1), Rational(0)};
    const QuadSqrt5 zero{};
    std::vector<std::array<QuadSqrt5, 3>> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            QuadSqrt5 u = one * QuadSqrt5{Rational(s1), Rational(0)};
            QuadSqrt5 w = phi * QuadSqrt5{Rational(s2), Rational(0)};
            out.push_back({zero, u, w});
            out.push_back({u, w, zero});
            out.push_back({w, zero, u});
        }
    return out;
}

} // namespace

std::vector<Vec> icosahedron_witness() {
    std::vector<Vec> pts;
    for (const auto& v : icosahedron_vertices()) {
        QuadSqrt5 r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        const double r = std::sqrt(r2.to_double());
        Vec p(3);
        for (std::size_t i = 0; i < 3; ++i)
            p[i] = from_double(std::ldexp(std::trunc(std::ldexp(v[i].to_double() / r, 52)), -52));
        pts.push_back(std::move(p));
    }
    return pts;
}

IcosahedronCertificate icosahedron_certificate() {
    auto vs = icosahedron_vertices();
    const QuadSqrt5 r2 = vs[0][0] * vs[0][0] + vs[0][1] * vs[0][1] + vs[0][2] * vs[0][2];
    IcosahedronCertificate cert;
    cert.all_pairs_exceed_one = true;
    bool first = true;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            QuadSqrt5 d2{};
            for (std::size_t k = 0; k < 3; ++k) {
                QuadSqrt5 t = vs[i][k] - vs[j][k];
                d2 = d2 + t * t;
            }
            QuadSqrt5 ratio = d2 / r2;
            if ((ratio - QuadSqrt5{Rational(1), Rational(0)}).sign() <= 0)
                cert.all_pairs_exceed_one = false;
            if (first || (ratio - cert.min_ratio).sign() < 0)
                cert.min_ratio = ratio;
            first = false;
        }
    const QuadSqrt5 target = QuadSqrt5{Rational(4), Rational(0)} / (QuadSqrt5::phi() + QuadSqrt5{Rational(2), Rational(0)});
    cert.min_ratio_identity = cert.min_ratio == target;
    return cert;
}

ConvexBody amplified_body(int k, const ConvexBody& K) {
    if (k < 0)
        throw std::invalid_argument("amplifier exponent must be non-negative");
    if (k == 0)
        return K;
    return product({cube(k), K});
}

std::vector<Vec> cube_product_amplifier(int k, const std::vector<Vec>& points) {
    if (k < 0 || k > 20)
        throw std::invalid_argument("amplifier exponent out of range");
    if (k == 0)
        return points;
    std::vector<Vec> out;
    out.reserve(points.size() << k);
    for (unsigned long mask = 0; mask < (1UL << k); ++mask)
        for (const auto& p : points) {
            Vec x(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                x[static_cast<std::size_t>(i)] = (mask >> i) & 1UL ? -1 : 1;
            x.insert(x.end(), p.begin(), p.end());
            out.push_back(std::move(x));
        }
    return out;
}

Arrangement triangle_translates10() {
    // a and b are vertices of the hexagon K cap -K; the lattice they span has
    // ||a||_K = ||-a||_K = 1 and diameter 3 on the side-3 triangle of lattice points.
    const Vec a{Rational(1, 3), Rational(2, 3)};
    const Vec b{Rational(2, 3), Rational(1, 3)};
    std::vector<Homothet> hs;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            hs.push_back({Rational(1), Rational(i) * a + Rational(j) * b});
    return Arrangement(reference_triangle(), std::move(hs));
}

Arrangement triangle_product_witness(int d) {
    if (d <= 0 || d > 8)
        throw std::invalid_argument("triangle product dimension must be in 1..8");
    const int k = d / 2;
    const bool pad = d % 2 == 1;
    if (k == 1 && !pad)
        return triangle_translates10();

    std::vector<ConvexBody> factors(static_cast<std::size_t>(k), reference_triangle());
    if (pad)
        factors.push_back(segment());
    ConvexBody K = factors.size() == 1 ? factors.front() : product(factors);

    const auto base = triangle_translates10().homothets();
    std::vector<Homothet> hs;
    long total = 1;
    for (int i = 0; i < k; ++i)
        total *= static_cast<long>(base.size());
    for (long code = 0; code < total; ++code) {
        Vec v;
        long c = code;
        for (int i = 0; i < k; ++i) {
            const auto& part = base[static_cast<std::size_t>(c % static_cast<long>(base.size()))].v;
            v.insert(v.end(), part.begin(), part.end());
            c /= static_cast<long>(base.size());
        }
        if (pad)
            v.push_back(Rational(0));
        hs.push_back({Rational(1), std::move(v)});
    }
    return Arrangement(K, std::move(hs));
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("MINKARR_DATA_DIR"))
        return env;
    return MINKARR_DATA_DIR;
}

Arrangement load_named_witness(const std::string& name) {
    if (name != "circles8" && name != "triangles10")
        throw std::invalid_argument("unknown witness name '" + name + "' (known: circles8, triangles10)");
    const auto path = data_dir() / (name + ".json");
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open witness file " + path.string());
    return arrangement_from_json(parse_json(in));
}

} // namespace minkarr
