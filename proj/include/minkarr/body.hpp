#pragma once

#include "minkarr/polytope.hpp"
#include "minkarr/rational.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace minkarr {

/// A convex body in R^d with the origin in its interior. Immutable; copies share state.
///
/// Shapes: polytope (both representations), Euclidean ball centred at the origin,
/// Cartesian product of bodies (norm is the max over blocks), and two implicit
/// derived bodies, the symmetric core K cap -K and the central symmetral (K - K)/2,
/// which support norm queries in any dimension.
class ConvexBody {
  public:
    enum class Kind { Polytope, Ball, Product, Core, Symmetral };

    static ConvexBody polytope(Polytope p);
    static ConvexBody ball(int dim, Rational radius);
    static ConvexBody product(std::vector<ConvexBody> factors);

    Kind kind() const { return node_->kind; }
    int dim() const { return node_->dim; }

    const Polytope& as_polytope() const;
    const Rational& radius() const;
    const std::vector<ConvexBody>& factors() const;
    /// Base body of an implicit core or symmetral.
    const ConvexBody& base() const;

    bool implicit() const { return kind() == Kind::Core || kind() == Kind::Symmetral; }
    /// True when no ball factor is involved, so norms are exact rationals.
    bool exact() const { return node_->exact; }
    /// K = -K, decided exactly.
    bool symmetric() const { return node_->symmetric; }

  private:
    struct Node {
        Kind kind = Kind::Polytope;
        int dim = 0;
        bool exact = true;
        bool symmetric = false;
        std::shared_ptr<const Polytope> poly;
        Rational radius = 0;
        std::vector<ConvexBody> parts;
    };
    explicit ConvexBody(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static ConvexBody implicit_of(Kind kind, const ConvexBody& base);
    std::shared_ptr<const Node> node_;

    friend ConvexBody symmetric_core(const ConvexBody&);
    friend ConvexBody central_symmetral(const ConvexBody&);
};

// Named bodies used throughout tests, constructions and the CLI.
ConvexBody cube(int d);                          ///< [-1,1]^d
ConvexBody cross_polytope(int d);                ///< conv{+-e_i}
ConvexBody centered_simplex(int d);              ///< conv{e_1..e_d, -(1,..,1)}, centroid at o
ConvexBody reference_triangle();                 ///< (1,0), (0,1), (-1,-1)
ConvexBody segment();                            ///< [-1,1]

/// ||x||_K = inf{t > 0 : x in tK}. Exact unless a ball factor is involved.
Number norm(const ConvexBody& K, const Vec& x);
double norm_approx(const ConvexBody& K, std::span<const double> x);
/// Sign of ||x||_K - t, decided exactly for every body kind.
int compare_norm(const ConvexBody& K, const Vec& x, const Rational& t);
bool contains(const ConvexBody& K, const Vec& x);

/// x / ||x||_K. Exact for exact bodies; ball blocks fall back to a float
/// normalisation truncated towards zero.
Vec normalize(const ConvexBody& K, const Vec& x);

/// min{theta : -K subset theta K}
Number theta(const ConvexBody& K);
Vec centroid(const ConvexBody& K);

struct VolumeOptions {
    std::uint64_t seed = 0x5eed;
    int samples = 20000;
};
Number volume(const ConvexBody& K, const VolumeOptions& opt = {});

/// Explicit body when K is symmetric or a polytope of dimension <= 3 (factorwise
/// for products); otherwise an implicit norm-only handle (ConvexBody::implicit()).
ConvexBody symmetric_core(const ConvexBody& K);
ConvexBody central_symmetral(const ConvexBody& K);

ConvexBody product(std::vector<ConvexBody> factors);
ConvexBody reflect(const ConvexBody& K);
/// K - p, so that p becomes the origin.
ConvexBody translate(const ConvexBody& K, const Vec& p);

struct Box {
    VecD lo, hi;
};
Box bounding_box(const ConvexBody& K);

/// (v_i + l_i K) and (v_j + l_j K) share a point (closed bodies). Exact.
bool homothets_intersect(const ConvexBody& K, const Vec& vi, const Rational& li, const Vec& vj,
                         const Rational& lj);
/// Same question answered by rational LP feasibility only, for cross-checks.
bool homothets_intersect_lp(const Polytope& P, const Vec& vi, const Rational& li, const Vec& vj,
                            const Rational& lj);

} // namespace minkarr
