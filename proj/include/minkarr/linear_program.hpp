#pragma once

#include "minkarr/rational.hpp"

#include <vector>

namespace minkarr::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value = 0;
    Vec x;
};

/// Minimizes c.x subject to A x <= b with x free, by a dense two-phase tableau
/// simplex in exact arithmetic. Bland's rule selects both entering and leaving
/// variables, so the method terminates on degenerate problems.
Result minimize(const std::vector<Vec>& A, const Vec& b, const Vec& c);

/// Feasibility of A x <= b. On success writes a feasible point to witness when given.
bool feasible(const std::vector<Vec>& A, const Vec& b, Vec* witness = nullptr);

} // namespace minkarr::lp
