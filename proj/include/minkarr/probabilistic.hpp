#pragma once

#include "minkarr/arrangement.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace minkarr {

struct RandomConfig {
    std::uint64_t seed = 1;
    int max_retries = 8;
    Rational oversample_factor = 1;
    int threads = 1;

    void validate() const;
};

class SamplingRefused : public std::runtime_error {
  public:
    explicit SamplingRefused(const std::string& what) : std::runtime_error(what) {}
};

class RetriesExhausted : public std::runtime_error {
  public:
    explicit RetriesExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Independent generator for (seed, index); index-addressed streams make every
/// sampling loop deterministic regardless of how it is split over threads.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index);

/// Uniform sampler on a body. Polytopes are sampled through an exact
/// triangulation (simplex chosen by volume, then Dirichlet weights); balls by
/// rejection from their bounding cube; products factorwise.
class UniformSampler {
  public:
    explicit UniformSampler(const ConvexBody& K);
    VecD operator()(std::mt19937_64& rng) const;
    int dim() const { return dim_; }

  private:
    struct Part {
        int dim = 0;
        bool ball = false;
        double radius = 0;
        std::vector<std::vector<VecD>> simplices;
        std::vector<double> cumulative;
    };
    int dim_ = 0;
    std::vector<Part> parts_;
};

/// n points of K, each membership-checked exactly; point i comes from stream(seed, i).
std::vector<VecD> sample_uniform(const ConvexBody& K, std::size_t n, const RandomConfig& cfg);

/// max(1, floor((2/sqrt 3)^d / 4))
long strict_translate_target(int d);

struct StrictTranslateResult {
    Arrangement arrangement;
    long target = 0;
    std::size_t sampled = 0;
    int attempts = 0;
};

/// Samples ceil(2m * oversample) points, deletes the later member of every close
/// pair (||x_i - x_j||_K <= 1 in either order) and returns the translates -x_i + K.
/// Retries with a fresh substream until at least m points survive.
StrictTranslateResult strict_translate_arrangement(const ConvexBody& K, const RandomConfig& cfg);

/// delta with e^(delta d) = (d+4)/(d+1)
double boundary_delta(int d);
/// max(1, floor((2/sqrt 3)^d 3 / (2 e^2 (d+4))))
long boundary_sample_target(int d);

struct BoundaryPointsResult {
    std::vector<Vec> points;
    double delta = 0;
    long target = 0;
    std::size_t sampled = 0;
    int attempts = 0;
};

/// Boundary points with pairwise ||p_i - p_j||_K > 1 (exactly rechecked).
/// K must have its centroid at the origin.
BoundaryPointsResult boundary_strict_points(const ConvexBody& K, const RandomConfig& cfg);

/// |centroid of the orthogonal projection of K onto u-perp|, u a unit vector.
double projection_centroid_residual(const Polytope& P, const VecD& u);

struct ProjectionResult {
    VecD direction;
    double residual = 0;
};

/// A unit u whose projection of K onto u-perp has its centroid within tol of o.
/// Planar bodies: angle scan plus bisection on the signed residual. Solids:
/// multi-start Gauss-Newton over the sphere.
ProjectionResult centroid_projection_direction(const ConvexBody& K, double tol = 1e-9);

/// (t^2 (4 - t^2) / 4)^(d/2)
double concentration_bound(double t, int d);

struct FEstimate {
    double estimate = 0;
    double standard_error = 0;
    double bound = 0;
    std::size_t pairs = 0;
};

/// Monte Carlo estimate of P(||x - y||_K <= t) for independent uniform x, y in K.
FEstimate estimate_F(const ConvexBody& K, double t, std::size_t pairs, const RandomConfig& cfg);

} // namespace minkarr
