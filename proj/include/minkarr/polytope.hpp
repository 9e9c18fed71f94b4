#pragma once

#include "minkarr/rational.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace minkarr {

class UnsupportedRepresentation : public std::runtime_error {
  public:
    explicit UnsupportedRepresentation(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the origin is not strictly interior to a body.
class DegenerateBody : public std::invalid_argument {
  public:
    explicit DegenerateBody(const std::string& what) : std::invalid_argument(what) {}
};

/// A half-space a.x <= b as given by the caller (b > 0 when o is interior).
struct Halfspace {
    Vec a;
    Rational b;
};

/// Bounded polytope with the origin in its interior, holding both representations.
/// Facets are stored normalized to a.x <= 1, which makes them canonical.
class Polytope {
  public:
    static Polytope from_halfspaces(int dim, const std::vector<Halfspace>& hs);
    static Polytope from_vertices(int dim, const std::vector<Vec>& pts);
    /// Caller guarantees that facets and vertices describe the same polytope.
    static Polytope from_both(int dim, std::vector<Vec> facet_normals, std::vector<Vec> vertices);

    int dim() const { return dim_; }
    const std::vector<Vec>& facets() const { return facets_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<VecD>& facets_approx() const { return facets_d_; }
    bool symmetric() const { return symmetric_; }

    /// max(0, max_i a_i.x)
    Rational gauge(const Vec& x) const;
    double gauge_approx(std::span<const double> x) const;

    Polytope reflected() const;
    Polytope translated(const Vec& p) const; ///< K - p

    /// Simplices (as d+1 points) that tile the polytope, built as cones from
    /// the origin over a pulling triangulation of the boundary.
    std::vector<std::vector<Vec>> triangulate() const;
    Rational volume() const;
    Vec centroid() const;

  private:
    Polytope() = default;
    void finish();

    int dim_ = 0;
    std::vector<Vec> facets_;
    std::vector<Vec> vertices_;
    std::vector<VecD> facets_d_;
    bool symmetric_ = false;
};

/// Largest number of d-subsets the enumeration-based conversions will visit.
inline constexpr double kEnumerationCap = 3.0e6;

Rational simplex_volume(const std::vector<Vec>& pts);

} // namespace minkarr
