#include "minkarr/bounds.hpp"

#include <cmath>
#include <numbers>

namespace minkarr {

namespace {

Rational power(const Rational& x, int d) {
    Rational r = 1;
    for (int i = 0; i < d; ++i)
        r *= x;
    return r;
}

Rational binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

int as_int(const Number& n) { return static_cast<int>(n.rational().get_num().get_si()); }

void check_d(int d) {
    if (d <= 0 || d > 1000)
        throw std::invalid_argument("dimension must be in 1..1000");
}

Rational packing_lambda(int d) { return 2 * (1 + Rational(1, d)); }

// (lambda+1)^d * ratio * factor
Number packing_value(const Number& lambda, const Number& d, const Number& ratio) {
    return Number(power(lambda.rational() + 1, as_int(d))) * ratio;
}

} // namespace

long log_cut_count(int d, const Number& theta) {
    check_d(d);
    if (d == 1 && theta.exact() && theta.rational() == 1)
        return 1;
    const double q = (std::log(static_cast<double>(d)) + std::log(theta.to_double())) / std::log1p(1.0 / d);
    double c = std::ceil(q);
    if (c - q < 1e-12 * std::max(1.0, std::fabs(q)))
        c += 1;
    return 1 + static_cast<long>(c);
}

BoundReport packing_upper(const ConvexBody& K, const Rational& lambda) {
    if (lambda < 0)
        throw std::invalid_argument("packing_upper: lambda must be non-negative");
    BoundReport r;
    r.name = "packing_upper";
    r.formula_id = "packing";
    Number ratio(Rational(1));
    if (!K.symmetric())
        ratio = volume(central_symmetral(K)) / volume(symmetric_core(K));
    r.inputs["d"] = Number(Rational(K.dim()));
    r.inputs["lambda"] = Number(lambda);
    r.inputs["volume_ratio"] = ratio;
    r.value = recompute(r);
    return r;
}

BoundReport kappa_upper(const ConvexBody& K) {
    const int d = K.dim();
    BoundReport r = packing_upper(K, packing_lambda(d));
    r.name = "kappa_upper";
    r.formula_id = "kappa";
    Number th = theta(K);
    r.inputs["theta"] = th;
    r.inputs["N"] = Number(Rational(log_cut_count(d, th)));
    r.value = recompute(r);
    return r;
}

BoundReport centroid_kappa_upper(int d) {
    check_d(d);
    BoundReport r;
    r.name = "centroid_kappa_upper";
    r.formula_id = "kappa";
    r.inputs["d"] = Number(Rational(d));
    r.inputs["lambda"] = Number(packing_lambda(d));
    // vol(K - K)/vol(K) <= binom(2d, d) and vol(K)/vol(K cap -K) <= 2^d
    r.inputs["volume_ratio"] = Number(binomial(2 * d, d));
    r.inputs["theta"] = Number(Rational(d));
    r.inputs["N"] = Number(Rational(log_cut_count(d, Number(Rational(d)))));
    r.value = recompute(r);
    return r;
}

BoundReport symmetric_kappa_upper(int d) {
    check_d(d);
    BoundReport r;
    r.name = "symmetric_kappa_upper";
    r.formula_id = "kappa";
    r.inputs["d"] = Number(Rational(d));
    r.inputs["lambda"] = Number(packing_lambda(d));
    r.inputs["volume_ratio"] = Number(Rational(1));
    r.inputs["theta"] = Number(Rational(1));
    r.inputs["N"] = Number(Rational(log_cut_count(d, Number(Rational(1)))));
    r.value = recompute(r);
    return r;
}

BoundReport chain_upper(int d) {
    check_d(d);
    BoundReport r;
    r.name = "chain_upper";
    r.formula_id = "chain";
    const double i_real = d * std::pow(1.0 + std::exp2(1.0 / d), d);
    r.inputs["d"] = Number(Rational(d));
    r.inputs["decreasing_bound"] = symmetric_kappa_upper(d).value;
    r.inputs["increasing_bound_real"] = Number::approx(i_real);
    r.inputs["increasing_bound"] = Number(Rational(static_cast<long>(std::floor(i_real * (1 + 1e-12)))));
    r.value = recompute(r);
    return r;
}

BoundReport hadwiger_lower(int d) {
    check_d(d);
    BoundReport r;
    r.name = "hadwiger_lower";
    r.formula_id = "hadwiger";
    r.note = "statement form holds for sufficiently large d";
    Number base = Number::approx(std::pow(2.0 / std::sqrt(3.0), d));
    if (d % 2 == 0) {
        Rational q = 1;
        for (int i = 0; i < d / 2; ++i)
            q *= Rational(4, 3);
        base = Number(q);
    }
    const double e2 = std::exp(2.0);
    r.inputs["d"] = Number(Rational(d));
    r.inputs["base_power"] = base;
    r.inputs["proof_value"] = Number::approx(base.to_double() * 9.0 / (4.0 * e2 * (d + 4.0) * (d + 4.0)));
    r.value = recompute(r);
    return r;
}

Number recompute(const BoundReport& r) {
    const auto& in = r.inputs;
    if (r.formula_id == "packing")
        return packing_value(in.at("lambda"), in.at("d"), in.at("volume_ratio"));
    if (r.formula_id == "kappa")
        return packing_value(in.at("lambda"), in.at("d"), in.at("volume_ratio")) *
               Number(Rational(in.at("N").rational() + 1));
    if (r.formula_id == "chain")
        return Number(Rational(1 + in.at("decreasing_bound").rational() * in.at("increasing_bound").rational()));
    if (r.formula_id == "hadwiger") {
        const Rational d = in.at("d").rational();
        return in.at("base_power") / Number(Rational(4 * d * d));
    }
    throw std::invalid_argument("unknown formula id '" + r.formula_id + "'");
}

} // namespace minkarr
