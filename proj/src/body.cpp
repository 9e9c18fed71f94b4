#include "minkarr/body.hpp"

#include "minkarr/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace minkarr {

ConvexBody ConvexBody::polytope(Polytope p) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Polytope;
    n->dim = p.dim();
    n->symmetric = p.symmetric();
    n->poly = std::make_shared<const Polytope>(std::move(p));
    return ConvexBody(std::move(n));
}

ConvexBody ConvexBody::ball(int dim, Rational radius) {
    if (dim <= 0)
        throw std::invalid_argument("ball dimension must be positive");
    if (radius <= 0)
        throw DegenerateBody("ball radius must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ball;
    n->dim = dim;
    n->exact = false;
    n->symmetric = true;
    n->radius = std::move(radius);
    return ConvexBody(std::move(n));
}

ConvexBody ConvexBody::product(std::vector<ConvexBody> factors) {
    if (factors.empty())
        throw std::invalid_argument("product of an empty list of bodies");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->exact = true;
    n->symmetric = true;
    for (const auto& f : factors) {
        n->dim += f.dim();
        n->exact = n->exact && f.exact();
        n->symmetric = n->symmetric && f.symmetric();
    }
    n->parts = std::move(factors);
    return ConvexBody(std::move(n));
}

ConvexBody ConvexBody::implicit_of(Kind kind, const ConvexBody& base) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->dim = base.dim();
    n->exact = base.exact();
    n->symmetric = true;
    n->parts = {base};
    return ConvexBody(std::move(n));
}

const Polytope& ConvexBody::as_polytope() const {
    if (kind() != Kind::Polytope)
        throw UnsupportedRepresentation("body is not a polytope");
    return *node_->poly;
}

const Rational& ConvexBody::radius() const {
    if (kind() != Kind::Ball)
        throw UnsupportedRepresentation("body is not a ball");
    return node_->radius;
}

const std::vector<ConvexBody>& ConvexBody::factors() const {
    if (kind() != Kind::Product)
        throw UnsupportedRepresentation("body is not a product");
    return node_->parts;
}

const ConvexBody& ConvexBody::base() const {
    if (!implicit())
        throw UnsupportedRepresentation("body is not an implicit derived body");
    return node_->parts.front();
}

// ---------------------------------------------------------------- named bodies

ConvexBody cube(int d) {
    if (d <= 0 || d > 20)
        throw std::invalid_argument("cube dimension out of range");
    std::vector<Vec> f, v;
    for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) {
            Vec a(static_cast<std::size_t>(d), Rational(0));
            a[static_cast<std::size_t>(i)] = s;
            f.push_back(std::move(a));
        }
    for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
        Vec x(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            x[static_cast<std::size_t>(i)] = (mask >> i) & 1UL ? 1 : -1;
        v.push_back(std::move(x));
    }
    return ConvexBody::polytope(Polytope::from_both(d, std::move(f), std::move(v)));
}

ConvexBody cross_polytope(int d) {
    if (d <= 0 || d > 20)
        throw std::invalid_argument("cross-polytope dimension out of range");
    std::vector<Vec> f, v;
    for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
        Vec a(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            a[static_cast<std::size_t>(i)] = (mask >> i) & 1UL ? 1 : -1;
        f.push_back(std::move(a));
    }
    for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) {
            Vec x(static_cast<std::size_t>(d), Rational(0));
            x[static_cast<std::size_t>(i)] = s;
            v.push_back(std::move(x));
        }
    return ConvexBody::polytope(Polytope::from_both(d, std::move(f), std::move(v)));
}

ConvexBody centered_simplex(int d) {
    if (d <= 0 || d > 64)
        throw std::invalid_argument("simplex dimension out of range");
    const auto n = static_cast<std::size_t>(d);
    std::vector<Vec> f, v;
    f.emplace_back(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        Vec a(n, Rational(1));
        a[i] = 1 - (d + 1);
        f.push_back(std::move(a));
        Vec e(n, Rational(0));
        e[i] = 1;
        v.push_back(std::move(e));
    }
    v.emplace_back(n, Rational(-1));
    return ConvexBody::polytope(Polytope::from_both(d, std::move(f), std::move(v)));
}

ConvexBody reference_triangle() { return centered_simplex(2); }

ConvexBody segment() { return cube(1); }

ConvexBody product(std::vector<ConvexBody> factors) { return ConvexBody::product(std::move(factors)); }

// ---------------------------------------------------------------- norms

namespace {

void check_dim(const ConvexBody& K, std::size_t n) {
    if (static_cast<int>(n) != K.dim())
        throw DimensionMismatch("vector dimension " + std::to_string(n) + " differs from body dimension " +
                                std::to_string(K.dim()));
}

template <typename T>
std::vector<std::vector<T>> split_blocks(const ConvexBody& K, std::span<const T> x) {
    std::vector<std::vector<T>> out;
    std::size_t off = 0;
    for (const auto& f : K.factors()) {
        const auto n = static_cast<std::size_t>(f.dim());
        out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(off),
                         x.begin() + static_cast<std::ptrdiff_t>(off + n));
        off += n;
    }
    return out;
}

Rational squared_length(const Vec& x) { return dot(x, x); }

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// gauge of (K - K) at x for a polytope: min t with x = y - z, y, z in tK.
Rational difference_gauge(const Polytope& P, const Vec& x) {
    if (is_zero(x))
        return 0;
    const auto d = static_cast<std::size_t>(P.dim());
    // variables (z, t); y = z + x
    std::vector<Vec> A;
    Vec b;
    for (const auto& a : P.facets()) {
        Vec row(a);
        row.push_back(Rational(-1));
        A.push_back(row);
        b.push_back(-dot(a, x));
        A.push_back(std::move(row));
        b.push_back(Rational(0));
    }
    Vec c(d + 1, Rational(0));
    c[d] = 1;
    lp::Result r = lp::minimize(A, b, c);
    if (r.status != lp::Status::Optimal)
        throw std::logic_error("difference body gauge LP did not reach an optimum");
    return r.value;
}

Number symmetral_norm(const ConvexBody& K, const Vec& x) {
    if (K.symmetric())
        return norm(K, x);
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return Number(Rational(2 * difference_gauge(K.as_polytope(), x)));
    case ConvexBody::Kind::Product: {
        auto blocks = split_blocks<Rational>(K, x);
        bool exact = true;
        Rational best_q = 0;
        double best_d = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            Number n = symmetral_norm(K.factors()[i], blocks[i]);
            exact = exact && n.exact();
            if (n.exact() && n.rational() > best_q)
                best_q = n.rational();
            best_d = std::max(best_d, n.to_double());
        }
        return exact ? Number(best_q) : Number::approx(best_d);
    }
    default:
        return norm(K, x);
    }
}

int compare_symmetral(const ConvexBody& K, const Vec& x, const Rational& t) {
    if (K.symmetric())
        return compare_norm(K, x, t);
    if (K.kind() == ConvexBody::Kind::Polytope)
        return sign_of(2 * difference_gauge(K.as_polytope(), x) - t);
    if (K.kind() == ConvexBody::Kind::Product) {
        auto blocks = split_blocks<Rational>(K, x);
        int s = -1;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s = std::max(s, compare_symmetral(K.factors()[i], blocks[i], t));
        return s;
    }
    return compare_norm(K, x, t);
}

} // namespace

Number norm(const ConvexBody& K, const Vec& x) {
    check_dim(K, x.size());
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return Number(K.as_polytope().gauge(x));
    case ConvexBody::Kind::Ball: {
        if (is_zero(x))
            return Number(Rational(0));
        return Number::approx(std::sqrt(squared_length(x).get_d()) / K.radius().get_d());
    }
    case ConvexBody::Kind::Product: {
        auto blocks = split_blocks<Rational>(K, x);
        bool exact = true;
        Rational best_q = 0;
        double best_d = 0;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            Number n = norm(K.factors()[i], blocks[i]);
            exact = exact && n.exact();
            if (n.exact() && n.rational() > best_q)
                best_q = n.rational();
            best_d = std::max(best_d, n.to_double());
        }
        return exact ? Number(best_q) : Number::approx(best_d);
    }
    case ConvexBody::Kind::Core: {
        Number a = norm(K.base(), x), b = norm(K.base(), -x);
        return a <= b ? b : a;
    }
    case ConvexBody::Kind::Symmetral:
        return symmetral_norm(K.base(), x);
    }
    throw std::logic_error("unreachable body kind");
}

double norm_approx(const ConvexBody& K, std::span<const double> x) {
    check_dim(K, x.size());
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return K.as_polytope().gauge_approx(x);
    case ConvexBody::Kind::Ball:
        return std::sqrt(dot(x, x)) / K.radius().get_d();
    case ConvexBody::Kind::Product: {
        double best = 0;
        std::size_t off = 0;
        for (const auto& f : K.factors()) {
            const auto n = static_cast<std::size_t>(f.dim());
            best = std::max(best, norm_approx(f, x.subspan(off, n)));
            off += n;
        }
        return best;
    }
    case ConvexBody::Kind::Core: {
        VecD neg(x.begin(), x.end());
        for (auto& v : neg)
            v = -v;
        return std::max(norm_approx(K.base(), x), norm_approx(K.base(), neg));
    }
    case ConvexBody::Kind::Symmetral:
        return symmetral_norm(K.base(), from_double(VecD(x.begin(), x.end()))).to_double();
    }
    throw std::logic_error("unreachable body kind");
}

int compare_norm(const ConvexBody& K, const Vec& x, const Rational& t) {
    check_dim(K, x.size());
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return sign_of(K.as_polytope().gauge(x) - t);
    case ConvexBody::Kind::Ball: {
        if (t < 0)
            return 1;
        Rational rt = t * K.radius();
        return sign_of(squared_length(x) - rt * rt);
    }
    case ConvexBody::Kind::Product: {
        auto blocks = split_blocks<Rational>(K, x);
        int s = -1;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s = std::max(s, compare_norm(K.factors()[i], blocks[i], t));
        return s;
    }
    case ConvexBody::Kind::Core:
        return std::max(compare_norm(K.base(), x, t), compare_norm(K.base(), -x, t));
    case ConvexBody::Kind::Symmetral:
        return compare_symmetral(K.base(), x, t);
    }
    throw std::logic_error("unreachable body kind");
}

bool contains(const ConvexBody& K, const Vec& x) { return compare_norm(K, x, Rational(1)) <= 0; }

Vec normalize(const ConvexBody& K, const Vec& x) {
    check_dim(K, x.size());
    if (is_zero(x))
        throw std::invalid_argument("normalize: zero vector");
    Number n = norm(K, x);
    if (n.exact())
        return (1 / n.rational()) * x;
    // truncate towards zero on a 2^-52 grid so the result never leaves K
    const double s = n.to_double();
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double v = std::ldexp(std::trunc(std::ldexp(x[i].get_d() / s, 52)), -52);
        out[i] = from_double(v);
    }
    return out;
}

Number theta(const ConvexBody& K) {
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope: {
        const auto& P = K.as_polytope();
        if (P.symmetric())
            return Number(Rational(1));
        Rational best = 0;
        for (const auto& v : P.vertices()) {
            Rational n = P.gauge(-v);
            if (n > best)
                best = n;
        }
        return Number(best);
    }
    case ConvexBody::Kind::Product: {
        Rational best = 1;
        for (const auto& f : K.factors()) {
            Rational t = theta(f).rational();
            if (t > best)
                best = t;
        }
        return Number(best);
    }
    default:
        return Number(Rational(1));
    }
}

Vec centroid(const ConvexBody& K) {
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        if (K.symmetric())
            return Vec(static_cast<std::size_t>(K.dim()), Rational(0));
        return K.as_polytope().centroid();
    case ConvexBody::Kind::Product: {
        Vec out;
        for (const auto& f : K.factors()) {
            Vec c = centroid(f);
            out.insert(out.end(), c.begin(), c.end());
        }
        return out;
    }
    default:
        // balls, cores and symmetrals are o-symmetric
        return Vec(static_cast<std::size_t>(K.dim()), Rational(0));
    }
}

Box bounding_box(const ConvexBody& K) {
    const auto d = static_cast<std::size_t>(K.dim());
    Box box{VecD(d, 0.0), VecD(d, 0.0)};
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope: {
        box.lo.assign(d, std::numeric_limits<double>::infinity());
        box.hi.assign(d, -std::numeric_limits<double>::infinity());
        for (const auto& v : K.as_polytope().vertices())
            for (std::size_t i = 0; i < d; ++i) {
                box.lo[i] = std::min(box.lo[i], v[i].get_d());
                box.hi[i] = std::max(box.hi[i], v[i].get_d());
            }
        return box;
    }
    case ConvexBody::Kind::Ball: {
        const double r = K.radius().get_d();
        box.lo.assign(d, -r);
        box.hi.assign(d, r);
        return box;
    }
    case ConvexBody::Kind::Product: {
        box.lo.clear();
        box.hi.clear();
        for (const auto& f : K.factors()) {
            Box b = bounding_box(f);
            box.lo.insert(box.lo.end(), b.lo.begin(), b.lo.end());
            box.hi.insert(box.hi.end(), b.hi.begin(), b.hi.end());
        }
        return box;
    }
    case ConvexBody::Kind::Core: {
        Box b = bounding_box(K.base());
        for (std::size_t i = 0; i < d; ++i) {
            box.lo[i] = std::max(b.lo[i], -b.hi[i]);
            box.hi[i] = std::min(b.hi[i], -b.lo[i]);
        }
        return box;
    }
    case ConvexBody::Kind::Symmetral: {
        Box b = bounding_box(K.base());
        for (std::size_t i = 0; i < d; ++i) {
            box.lo[i] = 0.5 * (b.lo[i] - b.hi[i]);
            box.hi[i] = 0.5 * (b.hi[i] - b.lo[i]);
        }
        return box;
    }
    }
    return box;
}

Number volume(const ConvexBody& K, const VolumeOptions& opt) {
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return Number(K.as_polytope().volume());
    case ConvexBody::Kind::Ball: {
        const double d = K.dim();
        const double r = K.radius().get_d();
        return Number::approx(std::pow(std::numbers::pi, d / 2) * std::pow(r, d) / std::tgamma(d / 2 + 1), 1e-12);
    }
    case ConvexBody::Kind::Product: {
        Number v(Rational(1));
        for (const auto& f : K.factors())
            v = v * volume(f, opt);
        return v;
    }
    default: {
        // Monte Carlo over the bounding box with exact membership tests
        Box box = bounding_box(K);
        double box_vol = 1;
        for (std::size_t i = 0; i < box.lo.size(); ++i)
            box_vol *= box.hi[i] - box.lo[i];
        std::mt19937_64 rng(opt.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        long hits = 0;
        VecD x(box.lo.size());
        for (int s = 0; s < opt.samples; ++s) {
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = box.lo[i] + u(rng) * (box.hi[i] - box.lo[i]);
            if (contains(K, from_double(x)))
                ++hits;
        }
        const double p = static_cast<double>(hits) / opt.samples;
        const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / opt.samples) * box_vol;
        return Number::approx(p * box_vol, se);
    }
    }
}

ConvexBody symmetric_core(const ConvexBody& K) {
    if (K.symmetric())
        return K;
    if (K.kind() == ConvexBody::Kind::Product) {
        std::vector<ConvexBody> fs;
        for (const auto& f : K.factors())
            fs.push_back(symmetric_core(f));
        return product(std::move(fs));
    }
    if (K.kind() == ConvexBody::Kind::Polytope && K.dim() <= 3) {
        std::vector<Halfspace> hs;
        for (const auto& a : K.as_polytope().facets()) {
            hs.push_back({a, Rational(1)});
            hs.push_back({-a, Rational(1)});
        }
        return ConvexBody::polytope(Polytope::from_halfspaces(K.dim(), hs));
    }
    return ConvexBody::implicit_of(ConvexBody::Kind::Core, K);
}

ConvexBody central_symmetral(const ConvexBody& K) {
    if (K.symmetric())
        return K;
    if (K.kind() == ConvexBody::Kind::Product) {
        std::vector<ConvexBody> fs;
        for (const auto& f : K.factors())
            fs.push_back(central_symmetral(f));
        return product(std::move(fs));
    }
    if (K.kind() == ConvexBody::Kind::Polytope && K.dim() <= 3) {
        const auto& vs = K.as_polytope().vertices();
        std::vector<Vec> pts;
        const Rational half(1, 2);
        for (const auto& a : vs)
            for (const auto& b : vs)
                pts.push_back(half * (a - b));
        return ConvexBody::polytope(Polytope::from_vertices(K.dim(), pts));
    }
    return ConvexBody::implicit_of(ConvexBody::Kind::Symmetral, K);
}

ConvexBody reflect(const ConvexBody& K) {
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return ConvexBody::polytope(K.as_polytope().reflected());
    case ConvexBody::Kind::Product: {
        std::vector<ConvexBody> fs;
        for (const auto& f : K.factors())
            fs.push_back(reflect(f));
        return product(std::move(fs));
    }
    default:
        return K;
    }
}

ConvexBody translate(const ConvexBody& K, const Vec& p) {
    check_dim(K, p.size());
    if (is_zero(p))
        return K;
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return ConvexBody::polytope(K.as_polytope().translated(p));
    case ConvexBody::Kind::Product: {
        auto blocks = split_blocks<Rational>(K, p);
        std::vector<ConvexBody> fs;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            fs.push_back(translate(K.factors()[i], blocks[i]));
        return product(std::move(fs));
    }
    default:
        throw UnsupportedRepresentation("only polytope blocks can be re-centred; balls stay at the origin");
    }
}

bool homothets_intersect_lp(const Polytope& P, const Vec& vi, const Rational& li, const Vec& vj,
                            const Rational& lj) {
    // a.(z - v) <= l for every facet a of K, for both homothets
    std::vector<Vec> A;
    Vec b;
    for (const auto& a : P.facets()) {
        A.push_back(a);
        b.push_back(dot(a, vi) + li);
        A.push_back(a);
        b.push_back(dot(a, vj) + lj);
    }
    return lp::feasible(A, b);
}

bool homothets_intersect(const ConvexBody& K, const Vec& vi, const Rational& li, const Vec& vj,
                         const Rational& lj) {
    check_dim(K, vi.size());
    check_dim(K, vj.size());
    // for o-symmetric bodies l_i K - l_j K = (l_i + l_j) K
    if (K.symmetric())
        return compare_norm(K, vj - vi, li + lj) <= 0;
    switch (K.kind()) {
    case ConvexBody::Kind::Polytope:
        return homothets_intersect_lp(K.as_polytope(), vi, li, vj, lj);
    case ConvexBody::Kind::Product: {
        auto bi = split_blocks<Rational>(K, vi);
        auto bj = split_blocks<Rational>(K, vj);
        for (std::size_t f = 0; f < bi.size(); ++f)
            if (!homothets_intersect(K.factors()[f], bi[f], li, bj[f], lj))
                return false;
        return true;
    }
    default:
        throw UnsupportedRepresentation("intersection test needs a polytope, ball or product");
    }
}

} // namespace minkarr
