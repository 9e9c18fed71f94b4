#pragma once

#include "minkarr/body.hpp"

#include <map>
#include <string>

namespace minkarr {

/// An evaluated bound together with the quantities it was computed from.
/// recompute() rebuilds value from inputs alone.
struct BoundReport {
    std::string name;
    std::string formula_id;
    Number value;
    std::map<std::string, Number> inputs;
    std::string note = "proof-level, non-asymptotic";
};

/// 1 + ceil((log d + log theta) / log(1 + 1/d)), natural logs. A computed
/// quotient lying within a relative 1e-12 below an integer bumps N by one.
long log_cut_count(int d, const Number& theta);

/// (lambda + 1)^d vol((K - K)/2) / vol(K cap -K); exactly (lambda + 1)^d for symmetric K.
BoundReport packing_upper(const ConvexBody& K, const Rational& lambda);
/// packing_upper(K, 2(1 + 1/d)) (N + 1) with N = log_cut_count(d, theta(K)).
BoundReport kappa_upper(const ConvexBody& K);
/// Body-free bound for the centroid reference: (3 + 2/d)^d binom(2d, d) (N + 1), theta = d.
BoundReport centroid_kappa_upper(int d);
/// The symmetric (theta = 1) body-free form (3 + 2/d)^d (N + 1).
BoundReport symmetric_kappa_upper(int d);
/// 1 + |D| |I| with |D| = symmetric_kappa_upper(d) and |I| = floor(d (1 + 2^(1/d))^d).
BoundReport chain_upper(int d);
/// (2/sqrt 3)^d / (4 d^2); the proof-level (2/sqrt 3)^d 9 / (4 e^2 (d+4)^2) is kept as an input.
BoundReport hadwiger_lower(int d);

Number recompute(const BoundReport& r);

} // namespace minkarr
