#include "minkarr/body.hpp"
#include "minkarr/json_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace minkarr;

namespace {

Vec v2(long a, long b) { return {Rational(a), Rational(b)}; }

Rational exact_norm(const ConvexBody& K, const Vec& x) { return norm(K, x).rational(); }

// the polygon with the given vertices, seen from the interior point p
ConvexBody seen_from(const std::vector<Vec>& verts, const Vec& p) {
    std::vector<Vec> shifted;
    for (const auto& v : verts)
        shifted.push_back(v - p);
    return ConvexBody::polytope(Polytope::from_vertices(2, shifted));
}

} // namespace

TEST_SUITE("geometry") {
    TEST_CASE("norm examples") {
        CHECK(exact_norm(cube(2), v2(2, 3)) == 3);
        CHECK(exact_norm(reference_triangle(), v2(1, 0)) == 1);
        CHECK(exact_norm(reference_triangle(), v2(-1, 0)) == 2);
        CHECK(exact_norm(reference_triangle(), v2(0, 0)) == 0);
        CHECK_THROWS_AS(norm(cube(2), Vec{Rational(1)}), DimensionMismatch);
    }

    TEST_CASE("triangle facets are the derived ones") {
        // max(x + y, -2x + y, x - 2y)
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            Vec x = oracle::random_vec(rng, 2, -3, 3, 7);
            Rational expect = std::max({Rational(0), Rational(x[0] + x[1]), Rational(-2 * x[0] + x[1]), Rational(x[0] - 2 * x[1])});
            CHECK(exact_norm(reference_triangle(), x) == expect);
        }
    }

    TEST_CASE("normalize examples") {
        CHECK(normalize(cube(2), v2(2, 3)) == Vec{Rational(2, 3), Rational(1)});
        CHECK(normalize(reference_triangle(), v2(-1, 0)) == Vec{Rational(-1, 2), Rational(0)});
        CHECK(normalize(reference_triangle(), v2(0, 1)) == v2(0, 1));
        CHECK_THROWS(normalize(cube(2), v2(0, 0)));
    }

    TEST_CASE("theta") {
        CHECK(theta(cube(3)).rational() == 1);
        CHECK(theta(cross_polytope(4)).rational() == 1);
        CHECK(theta(ConvexBody::ball(3, 2)).to_double() == 1);
        CHECK(theta(reference_triangle()).rational() == 2);
        for (int d = 1; d <= 4; ++d)
            CHECK(theta(centered_simplex(d)).rational() == d);
    }

    TEST_CASE("centroid examples") {
        CHECK(is_zero(centroid(reference_triangle())));
        // [0,2] x [0,4] seen from (1/2, 1/2): centroid (1, 2) shifts by -p
        const Vec p{Rational(1, 2), Rational(1, 2)};
        CHECK(centroid(seen_from({v2(0, 0), v2(2, 0), v2(2, 4), v2(0, 4)}, p)) == Vec{Rational(1, 2), Rational(3, 2)});
        CHECK(centroid(seen_from({v2(0, 0), v2(3, 0), v2(0, 3)}, p)) == Vec{Rational(1, 2), Rational(1, 2)});
        CHECK(centroid(translate(cube(2), p)) == -p);
        CHECK(is_zero(centroid(centered_simplex(5))));
    }

    TEST_CASE("volume examples") {
        for (int d = 1; d <= 5; ++d)
            CHECK(volume(cube(d)).rational() == Rational(1 << d));
        CHECK(volume(reference_triangle()).rational() == Rational(3, 2));
        CHECK(volume(product({reference_triangle(), reference_triangle()})).rational() == Rational(9, 4));
        CHECK(volume(cross_polytope(3)).rational() == Rational(4, 3));
        CHECK(volume(ConvexBody::ball(2, 1)).to_double() == doctest::Approx(M_PI));
    }

    TEST_CASE("symmetral and core of the triangle") {
        const ConvexBody T = reference_triangle();
        const ConvexBody S = central_symmetral(T);
        const ConvexBody C = symmetric_core(T);
        REQUIRE_FALSE(S.implicit());
        REQUIRE_FALSE(C.implicit());
        // Rogers-Shephard equality for simplices: vol(K - K) = binom(4, 2) vol(K)
        CHECK(volume(S).rational() == 6 * Rational(3, 2) / 4);
        CHECK(volume(C).rational() == 1);
        // K - K = 3 (K cap -K) for the triangle
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            Vec x = oracle::random_vec(rng, 2, -2, 2, 9);
            CHECK(3 * exact_norm(S, x) == 2 * exact_norm(C, x));
        }
        CHECK(symmetric_core(cube(2)).kind() == ConvexBody::Kind::Polytope);
        CHECK(volume(central_symmetral(cube(3))).rational() == 8);
    }

    TEST_CASE("product norm examples") {
        const ConvexBody sq = product({segment(), segment()});
        CHECK(exact_norm(sq, v2(2, 3)) == 3);
        const ConvexBody BC = product({ConvexBody::ball(3, 1), segment()});
        CHECK(norm(BC, {Rational(0), Rational(0), Rational(1), Rational(0)}).to_double() == doctest::Approx(1.0));
        CHECK(norm(BC, {Rational(3, 5), Rational(4, 5), Rational(0), Rational(2)}).to_double() == doctest::Approx(2.0));
        CHECK(compare_norm(BC, {Rational(3, 5), Rational(4, 5), Rational(0), Rational(0)}, 1) == 0);
        CHECK_THROWS(product({}));
    }

    TEST_CASE("degenerate and unbounded input is rejected") {
        CHECK_THROWS_AS(Polytope::from_vertices(2, {v2(0, 0), v2(1, 0), v2(0, 1)}), DegenerateBody);
        CHECK_THROWS_AS(Polytope::from_halfspaces(2, {{v2(1, 0), 1}, {v2(0, 1), 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Polytope::from_halfspaces(2, {{v2(1, 0), 0}, {v2(-1, 0), 1}, {v2(0, 1), 1}, {v2(0, -1), 1}}),
                        DegenerateBody);
        CHECK_THROWS(ConvexBody::ball(2, 0));
    }

    TEST_CASE("H and V forms agree") {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 30; ++i) {
            Polytope P = Polytope::from_vertices(2, oracle::random_polygon_points(rng));
            std::vector<Halfspace> hs;
            for (const auto& a : P.facets())
                hs.push_back({a, 1});
            Polytope Q = Polytope::from_halfspaces(2, hs);
            CHECK(P.facets() == Q.facets());
            auto sorted = [](std::vector<Vec> v) {
                std::sort(v.begin(), v.end());
                return v;
            };
            CHECK(sorted(P.vertices()) == sorted(Q.vertices()));
            for (const auto& v : P.vertices())
                CHECK(P.gauge(v) == 1);
        }
        Polytope oct = cross_polytope(3).as_polytope();
        CHECK(oct.facets().size() == 8);
        CHECK(oct.vertices().size() == 6);
    }

    TEST_CASE("norm matches the vertex LP oracle on random polygons") {
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 100; ++i) {
            const ConvexBody K = oracle::random_polygon(rng);
            const auto& verts = K.as_polytope().vertices();
            Vec x = oracle::random_vec(rng, 2, -3, 3, 11);
            const Rational n = exact_norm(K, x);
            CHECK(oracle::vertex_norm(verts, x) == n);
            auto [lo, hi] = oracle::bisect_norm(verts, x, 20);
            CHECK(lo <= n);
            CHECK(n <= hi);
        }
    }

    TEST_CASE("volume and centroid match the shoelace oracle") {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 50; ++i) {
            const ConvexBody K = oracle::random_polygon(rng);
            auto [area, c] = oracle::shoelace(oracle::ccw_order(K.as_polytope().vertices()));
            CHECK(volume(K).rational() == area);
            CHECK(centroid(K) == c);
        }
    }

    TEST_CASE("norm properties on random inputs") {
        std::mt19937_64 rng(7);
        std::vector<ConvexBody> bodies{reference_triangle(), cube(3), cross_polytope(3), centered_simplex(3),
                                       product({reference_triangle(), segment()})};
        for (int i = 0; i < 5; ++i)
            bodies.push_back(oracle::random_polygon(rng));
        for (const auto& K : bodies) {
            const int d = K.dim();
            for (int t = 0; t < 60; ++t) {
                Vec x = oracle::random_vec(rng, d, -2, 2, 13);
                Vec y = oracle::random_vec(rng, d, -2, 2, 13);
                const Rational s = oracle::random_rational(rng, 0, 5, 7) + Rational(1, 7);
                CHECK(exact_norm(K, s * x) == s * exact_norm(K, x));
                CHECK(exact_norm(K, x + y) <= exact_norm(K, x) + exact_norm(K, y));
                CHECK(contains(K, x) == (exact_norm(K, x) <= 1));
                CHECK(compare_norm(K, x, 1) == (exact_norm(K, x) > 1) - (exact_norm(K, x) < 1));
                // symmetric core identity, explicit where available
                const Rational core = std::max(exact_norm(K, x), exact_norm(K, -x));
                CHECK(exact_norm(symmetric_core(K), x) == core);
            }
        }
    }

    TEST_CASE("theta is attained at a vertex of -K") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 20; ++i) {
            const ConvexBody K = oracle::random_polygon(rng);
            const Rational th = theta(K).rational();
            Rational best = 0;
            for (const auto& v : K.as_polytope().vertices()) {
                const Rational n = exact_norm(K, -v);
                CHECK(n <= th);
                best = std::max(best, n);
            }
            CHECK(best == th);
            // seen from its centroid, a planar body has asymmetry at most 2
            CHECK(theta(translate(K, centroid(K))).rational() <= 2);
        }
    }

    TEST_CASE("symmetral norm matches the difference-body oracle") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 20; ++i) {
            const ConvexBody K = oracle::random_polygon(rng);
            const auto& verts = K.as_polytope().vertices();
            std::vector<Vec> half_diff;
            for (const auto& a : verts)
                for (const auto& b : verts)
                    half_diff.push_back(Rational(1, 2) * (a - b));
            const ConvexBody S = central_symmetral(K);
            for (int t = 0; t < 5; ++t) {
                Vec x = oracle::random_vec(rng, 2, -2, 2, 9);
                CHECK(exact_norm(S, x) == oracle::vertex_norm(half_diff, x));
            }
        }
    }

    TEST_CASE("implicit core and symmetral in higher dimension") {
        const ConvexBody K = centered_simplex(4);
        const ConvexBody C = symmetric_core(K);
        const ConvexBody S = central_symmetral(K);
        CHECK(C.implicit());
        CHECK(S.implicit());
        std::vector<Vec> half_diff;
        for (const auto& a : K.as_polytope().vertices())
            for (const auto& b : K.as_polytope().vertices())
                half_diff.push_back(Rational(1, 2) * (a - b));
        std::mt19937_64 rng(8);
        for (int t = 0; t < 20; ++t) {
            Vec x = oracle::random_vec(rng, 4, -2, 2, 5);
            CHECK(exact_norm(C, x) == std::max(exact_norm(K, x), exact_norm(K, -x)));
            CHECK(exact_norm(S, x) == oracle::vertex_norm(half_diff, x));
        }
    }

    TEST_CASE("body JSON round trip and errors") {
        for (const auto& K : {reference_triangle(), cube(3), product({ConvexBody::ball(2, Rational(3, 2)), segment()})}) {
            const ConvexBody back = body_from_json(to_json(K));
            CHECK(back.dim() == K.dim());
            CHECK(to_json(back) == to_json(K));
        }
        auto parse = [](const char* text) { return body_from_json(json::parse(text)); };
        CHECK(parse(R"({"dim":2,"shape":{"vpolytope":{"vertices":[["1","0"],["0","1"],["-1","-1"]]}}})").dim() == 2);
        CHECK_THROWS_AS(parse(R"({"dim":2})"), FormatError);
        CHECK_THROWS_AS(parse(R"({"dim":2,"shape":{"ball":{"r":"0.5"}}})"), FormatError);
        CHECK_THROWS_AS(parse(R"({"dim":2,"shape":{"cone":{}}})"), FormatError);
        CHECK_THROWS_AS(parse(R"({"dim":3,"shape":{"product":[{"dim":1,"shape":{"ball":{"r":"1"}}}]}})"), FormatError);
    }
}
