#include "minkarr/constructions.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkarr;

TEST_SUITE("constructions") {
    TEST_CASE("cube grids") {
        for (int d = 1; d <= 4; ++d) {
            Arrangement A = cube_grid_witness(d);
            CHECK(A.size() == static_cast<std::size_t>(std::pow(3, d)));
            CHECK(verify_kappa_witness(A).holds(false, true));
        }
        CHECK_THROWS(cube_grid_witness(0));
    }

    TEST_CASE("icosahedron points") {
        auto pts = icosahedron_witness();
        REQUIRE(pts.size() == 12);
        const ConvexBody B = ConvexBody::ball(3, 1);
        double min_dist = 10;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(compare_norm(B, pts[i], 1) < 0);
            CHECK(norm(B, pts[i]).to_double() == doctest::Approx(1.0).epsilon(1e-14));
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                CHECK(compare_norm(B, pts[i] - pts[j], 1) > 0);
                min_dist = std::min(min_dist, norm(B, pts[i] - pts[j]).to_double());
            }
        }
        const double phi = (1 + std::sqrt(5.0)) / 2;
        CHECK(min_dist == doctest::Approx(2 / std::sqrt(1 + phi * phi)).epsilon(1e-12));
        CHECK(verify_kappa_witness(translates_of_points(B, pts)).holds(true, true));
    }

    TEST_CASE("icosahedron ratio in Q(sqrt 5)") {
        auto cert = icosahedron_certificate();
        CHECK(cert.min_ratio_identity);
        CHECK(cert.all_pairs_exceed_one);
        // 4 / (phi + 2) written out: (4/(phi+2)) (phi+2) = 4
        const QuadSqrt5 phi = QuadSqrt5::phi();
        CHECK(cert.min_ratio * (phi + QuadSqrt5{2, 0}) == QuadSqrt5{4, 0});
        CHECK((cert.min_ratio - QuadSqrt5{1, 0}).sign() > 0);
        CHECK(phi * phi == phi + QuadSqrt5{1, 0});
    }

    TEST_CASE("cube amplifier") {
        auto ico = icosahedron_witness();
        CHECK(cube_product_amplifier(0, ico) == ico);
        auto amp = cube_product_amplifier(1, ico);
        REQUIRE(amp.size() == 24);
        const ConvexBody body = amplified_body(1, ConvexBody::ball(3, 1));
        CHECK(body.dim() == 4);
        Arrangement A = translates_of_points(body, amp);
        CHECK(verify_kappa_witness(A).holds(true, true));
        // 3 * 2^(d-1) at d = 4
        CHECK(A.size() == 3 * 8);

        auto four = cube_product_amplifier(2, {{Rational(1)}});
        REQUIRE(four.size() == 4);
        const ConvexBody C3 = amplified_body(2, segment());
        for (std::size_t i = 0; i < four.size(); ++i) {
            CHECK(norm(C3, four[i]).rational() == 1);
            for (std::size_t j = i + 1; j < four.size(); ++j) {
                // max of the cube block and the K block, recomputed by hand
                Rational dist = 0;
                for (std::size_t c = 0; c < 3; ++c)
                    dist = std::max(dist, Rational(abs(four[i][c] - four[j][c])));
                CHECK(dist == 2);
                CHECK(norm(C3, four[i] - four[j]).rational() == dist);
            }
        }
    }

    TEST_CASE("triangle translates and products") {
        Arrangement T = triangle_translates10();
        CHECK(T.size() == 10);
        CHECK(verify_kappa_witness(T).holds(false, true));
        CHECK(triangle_product_witness(2).size() == 10);
        CHECK(triangle_product_witness(3).size() == 10);
        CHECK(verify_kappa_witness(triangle_product_witness(3)).holds(false, true));
        Arrangement P = triangle_product_witness(4);
        CHECK(P.size() == 100);
        CHECK(P.body().dim() == 4);
        CHECK(is_zero(centroid(P.body())));
        CHECK(verify_kappa_witness(P).holds(false, true));
    }

    TEST_CASE("named witnesses") {
        CHECK(verify_kappa_witness(load_named_witness("circles8")).holds(true, true));
        CHECK(load_named_witness("circles8").size() == 8);
        CHECK(verify_kappa_witness(load_named_witness("triangles10")).holds(false, true));
        CHECK_THROWS_AS(load_named_witness("hexagons"), std::invalid_argument);
    }
}
