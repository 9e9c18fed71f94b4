#pragma once

#include "minkarr/body.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minkarr {

/// The positive homothet v + lambda K.
struct Homothet {
    Rational lambda;
    Vec v;
};

/// A family of homothets of one body. The reference point is always the origin
/// of the body's frame; use with_reference() to re-centre a body first.
class Arrangement {
  public:
    Arrangement(ConvexBody body, std::vector<Homothet> homothets);

    /// Arrangement of K with respect to the interior point p. The body is stored
    /// as K - p and each homothet v + lK is rewritten as (v + l p) + l(K - p), so the
    /// reference point of every member is the image of p.
    static Arrangement with_reference(const ConvexBody& K, const Vec& p, std::vector<Homothet> homothets);

    const ConvexBody& body() const { return body_; }
    const std::vector<Homothet>& homothets() const { return homothets_; }
    std::size_t size() const { return homothets_.size(); }

  private:
    ConvexBody body_;
    std::vector<Homothet> homothets_;
};

enum class Condition { Minkowski, Strict, Intersecting };
std::string to_string(Condition c);

/// For Minkowski/Strict, (i, j) means the centre of member i violates member j.
/// For Intersecting, i < j and the two members are disjoint.
struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    Condition condition = Condition::Minkowski;
    bool operator==(const Violation&) const = default;
};

struct ConditionResult {
    bool holds = true;
    std::optional<Violation> first_violation;
};

struct VerificationReport {
    std::size_t count = 0;
    bool minkowski = true;
    bool strict = true;
    bool pairwise_intersecting = true;
    /// Lexicographically smallest violating pair over all three conditions.
    std::optional<Violation> first_violation;

    /// Whether the requested flavour holds (and pairwise intersection when asked for).
    bool holds(bool strict_mode, bool require_intersecting) const;
};

struct VerifyOptions {
    int threads = 1;
};

/// ||v_i - v_j||_K >= lambda_j for all i != j.
ConditionResult is_minkowski(const Arrangement& A, const VerifyOptions& opt = {});
/// ||v_i - v_j||_K > lambda_j for all i != j.
ConditionResult is_strict_minkowski(const Arrangement& A, const VerifyOptions& opt = {});
/// Every two members share a point.
ConditionResult is_pairwise_intersecting(const Arrangement& A, const VerifyOptions& opt = {});
VerificationReport verify_kappa_witness(const Arrangement& A, const VerifyOptions& opt = {});

/// p_j lies on p_i + r_i bd K for all i < j. K must be o-symmetric. radii may
/// omit the last entry, which is never used.
bool verify_chain(const ConvexBody& K, const std::vector<Vec>& points, const std::vector<Rational>& radii);

/// Translates -p_i + K of boundary points with pairwise ||p_i - p_j||_K > 1.
Arrangement translates_of_points(const ConvexBody& K, const std::vector<Vec>& points);

} // namespace minkarr
