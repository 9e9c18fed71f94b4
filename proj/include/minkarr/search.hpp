#pragma once

#include "minkarr/arrangement.hpp"

#include <cstdint>
#include <optional>

namespace minkarr {

struct SearchConfig {
    int target_count = 8;
    bool strict = true;
    bool translates_only = false;
    double lambda_lo = 1;
    double lambda_hi = 40;
    int steps = 200000;
    int restarts = 20;
    double initial_temperature = 0.05;
    double cooling_rate = 0.99995;
    std::uint64_t seed = 1;
    int threads = 1;
    /// Per-restart progress lines on stderr.
    bool verbose = false;

    void validate() const;
};

/// Margin every relaxed constraint must clear before rounding is attempted.
inline constexpr double kSearchMargin = 1e-6;

/// Sum of hinge violations of the float relaxation. In strict mode every
/// constraint must hold with relative margin kSearchMargin; in non-strict mode the
/// closed constraints may be violated by up to kSearchMargin (rounding then snaps
/// onto the exact configuration). Zero iff all relaxed constraints hold.
double energy(const Arrangement& A, bool strict);

/// Simulated annealing over centres and log-scales of target_count homothets of
/// a planar polygon or disc. A candidate with zero energy is rounded to rationals
/// with growing denominators and returned only if the exact verifier accepts it.
std::optional<Arrangement> search_arrangement(const ConvexBody& K, const SearchConfig& cfg);

} // namespace minkarr
