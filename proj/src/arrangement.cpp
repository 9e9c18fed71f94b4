#include "minkarr/arrangement.hpp"

#include "minkarr/parallel.hpp"

#include <algorithm>
#include <tuple>

namespace minkarr {

Arrangement::Arrangement(ConvexBody body, std::vector<Homothet> homothets)
    : body_(std::move(body)), homothets_(std::move(homothets)) {
    for (const auto& h : homothets_) {
        if (h.lambda <= 0)
            throw std::invalid_argument("homothety ratio must be positive");
        if (static_cast<int>(h.v.size()) != body_.dim())
            throw DimensionMismatch("translation vector dimension differs from body dimension");
    }
}

Arrangement Arrangement::with_reference(const ConvexBody& K, const Vec& p, std::vector<Homothet> homothets) {
    if (static_cast<int>(p.size()) != K.dim())
        throw DimensionMismatch("reference point dimension differs from body dimension");
    for (auto& h : homothets)
        h.v = h.v + h.lambda * p;
    return Arrangement(translate(K, p), std::move(homothets));
}

std::string to_string(Condition c) {
    switch (c) {
    case Condition::Minkowski:
        return "minkowski";
    case Condition::Strict:
        return "strict";
    case Condition::Intersecting:
        return "intersecting";
    }
    return "?";
}

bool VerificationReport::holds(bool strict_mode, bool require_intersecting) const {
    const bool centre_ok = strict_mode ? strict : minkowski;
    return centre_ok && (!require_intersecting || pairwise_intersecting);
}

namespace {

struct RowFlags {
    std::optional<Violation> minkowski, strict, intersecting;
};

// Scans all pairs; row i holds the first violation (smallest j) of each kind in that row.
std::vector<RowFlags> scan(const Arrangement& A, bool centres, bool intersect, const VerifyOptions& opt) {
    const auto& K = A.body();
    const auto& hs = A.homothets();
    const std::size_t n = hs.size();
    std::vector<RowFlags> rows(n);
    parallel_for(n, opt.threads, [&](std::size_t i) {
        RowFlags& r = rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (centres && (!r.minkowski || !r.strict)) {
                int s = compare_norm(K, hs[i].v - hs[j].v, hs[j].lambda);
                if (s < 0 && !r.minkowski)
                    r.minkowski = Violation{i, j, Condition::Minkowski};
                if (s <= 0 && !r.strict)
                    r.strict = Violation{i, j, Condition::Strict};
            }
            if (intersect && j > i && !r.intersecting &&
                !homothets_intersect(K, hs[i].v, hs[i].lambda, hs[j].v, hs[j].lambda))
                r.intersecting = Violation{i, j, Condition::Intersecting};
        }
    });
    return rows;
}

ConditionResult first_of(const std::vector<RowFlags>& rows, std::optional<Violation> RowFlags::*field) {
    ConditionResult res;
    for (const auto& r : rows)
        if (r.*field) {
            res.holds = false;
            res.first_violation = r.*field;
            break;
        }
    return res;
}

} // namespace

ConditionResult is_minkowski(const Arrangement& A, const VerifyOptions& opt) {
    return first_of(scan(A, true, false, opt), &RowFlags::minkowski);
}

ConditionResult is_strict_minkowski(const Arrangement& A, const VerifyOptions& opt) {
    return first_of(scan(A, true, false, opt), &RowFlags::strict);
}

ConditionResult is_pairwise_intersecting(const Arrangement& A, const VerifyOptions& opt) {
    return first_of(scan(A, false, true, opt), &RowFlags::intersecting);
}

VerificationReport verify_kappa_witness(const Arrangement& A, const VerifyOptions& opt) {
    auto rows = scan(A, true, true, opt);
    VerificationReport rep;
    rep.count = A.size();
    auto m = first_of(rows, &RowFlags::minkowski);
    auto s = first_of(rows, &RowFlags::strict);
    auto x = first_of(rows, &RowFlags::intersecting);
    rep.minkowski = m.holds;
    rep.strict = s.holds;
    rep.pairwise_intersecting = x.holds;
    auto key = [](const Violation& v) { return std::make_tuple(v.i, v.j, static_cast<int>(v.condition)); };
    for (const auto& cand : {m.first_violation, s.first_violation, x.first_violation})
        if (cand && (!rep.first_violation || key(*cand) < key(*rep.first_violation)))
            rep.first_violation = cand;
    return rep;
}

bool verify_chain(const ConvexBody& K, const std::vector<Vec>& points, const std::vector<Rational>& radii) {
    if (!K.symmetric())
        throw std::invalid_argument("verify_chain requires an o-symmetric body");
    const std::size_t n = points.size();
    if (n > 0 && radii.size() + 1 < n)
        throw std::invalid_argument("verify_chain: need a radius for every point but the last");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (compare_norm(K, points[j] - points[i], radii[i]) != 0)
                return false;
    return true;
}

Arrangement translates_of_points(const ConvexBody& K, const std::vector<Vec>& points) {
    std::vector<Homothet> hs;
    hs.reserve(points.size());
    for (const auto& p : points)
        hs.push_back({Rational(1), -p});
    return Arrangement(K, std::move(hs));
}

} // namespace minkarr
