#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minkarr {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
using VecD = std::vector<double>;

class DimensionMismatch : public std::invalid_argument {
  public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Parses "p/q" or "p". Decimal strings are rejected.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

/// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double x);

/// Closest rational to x with the smallest denominator among continued-fraction
/// convergents within tol of x, capped at max_den.
Rational best_rational(double x, double tol, long max_den = 1000000);

/// A value that is either an exact rational or a float with a declared tolerance.
class Number {
  public:
    Number() = default;
    Number(Rational q) : exact_(true), q_(std::move(q)), approx_(q_.get_d()) {}
    static Number approx(double x, double tol = 1e-9) {
        Number n;
        n.exact_ = false;
        n.approx_ = x;
        n.tol_ = tol;
        return n;
    }

    bool exact() const { return exact_; }
    const Rational& rational() const {
        if (!exact_)
            throw std::logic_error("Number::rational on an approximate value");
        return q_;
    }
    double to_double() const { return approx_; }
    double tolerance() const { return exact_ ? 0.0 : tol_; }

  private:
    bool exact_ = true;
    Rational q_{0};
    double approx_ = 0.0;
    double tol_ = 0.0;
};

Number operator*(const Number& a, const Number& b);
Number operator/(const Number& a, const Number& b);
Number operator+(const Number& a, const Number& b);
bool operator<=(const Number& a, const Number& b);

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Vec operator-(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& t, const Vec& a);

VecD to_double(const Vec& v);
Vec from_double(const VecD& v);
bool is_zero(const Vec& v);

/// Affine dimension of a point set (-1 for the empty set).
int affine_rank(const std::vector<Vec>& pts);

/// Solves M x = rhs exactly; returns false when M is singular.
bool solve_linear(std::vector<Vec> M, Vec rhs, Vec& x);

/// Exact determinant.
Rational determinant(std::vector<Vec> M);

} // namespace minkarr
