#include "minkarr/probabilistic.hpp"

#include "minkarr/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace minkarr {

void RandomConfig::validate() const {
    if (max_retries < 1)
        throw std::invalid_argument("max_retries must be at least 1");
    if (oversample_factor < 1)
        throw std::invalid_argument("oversample_factor must be at least 1");
    if (threads < 1)
        throw std::invalid_argument("threads must be at least 1");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void flatten(const ConvexBody& K, std::vector<ConvexBody>& out) {
    if (K.kind() == ConvexBody::Kind::Product) {
        for (const auto& f : K.factors())
            flatten(f, out);
        return;
    }
    out.push_back(K);
}

std::size_t scaled_count(long base, const Rational& factor) {
    Rational n = Rational(base) * factor;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), n.get_num_mpz_t(), n.get_den_mpz_t());
    return c.get_ui();
}

double two_over_sqrt3_pow(int d) { return std::pow(2.0 / std::sqrt(3.0), d); }

bool close_pair(const ConvexBody& K, const Vec& a, const Vec& b, const Rational& t) {
    return compare_norm(K, a - b, t) <= 0 || compare_norm(K, b - a, t) <= 0;
}

} // namespace

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

UniformSampler::UniformSampler(const ConvexBody& K) : dim_(K.dim()) {
    std::vector<ConvexBody> flat;
    flatten(K, flat);
    for (const auto& f : flat) {
        Part part;
        part.dim = f.dim();
        if (f.kind() == ConvexBody::Kind::Ball) {
            part.ball = true;
            part.radius = f.radius().get_d();
            const double d = f.dim();
            const double acceptance = std::pow(std::numbers::pi, d / 2) / std::tgamma(d / 2 + 1) / std::pow(2.0, d);
            if (acceptance < 1e-6)
                throw SamplingRefused("rejection acceptance rate " + std::to_string(acceptance) +
                                      " is below 1e-6 in dimension " + std::to_string(f.dim()));
        } else if (f.kind() == ConvexBody::Kind::Polytope) {
            double total = 0;
            for (const auto& s : f.as_polytope().triangulate()) {
                std::vector<VecD> pts;
                for (const auto& p : s)
                    pts.push_back(to_double(p));
                total += simplex_volume(s).get_d();
                part.simplices.push_back(std::move(pts));
                part.cumulative.push_back(total);
            }
        } else {
            throw UnsupportedRepresentation("uniform sampling needs polytopes, balls or their products");
        }
        parts_.push_back(std::move(part));
    }
}

VecD UniformSampler::operator()(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    VecD out;
    out.reserve(static_cast<std::size_t>(dim_));
    for (const auto& part : parts_) {
        const auto d = static_cast<std::size_t>(part.dim);
        if (part.ball) {
            VecD x(d);
            for (;;) {
                double r2 = 0;
                for (auto& v : x) {
                    v = (2 * unit(rng) - 1) * part.radius;
                    r2 += v * v;
                }
                if (r2 <= part.radius * part.radius)
                    break;
            }
            out.insert(out.end(), x.begin(), x.end());
            continue;
        }
        const double pick = unit(rng) * part.cumulative.back();
        auto it = std::upper_bound(part.cumulative.begin(), part.cumulative.end(), pick);
        const auto& s = part.simplices[std::min<std::size_t>(
            static_cast<std::size_t>(it - part.cumulative.begin()), part.simplices.size() - 1)];
        VecD x(d, 0.0);
        double wsum = 0;
        for (const auto& p : s) {
            const double w = -std::log1p(-unit(rng));
            wsum += w;
            for (std::size_t i = 0; i < d; ++i)
                x[i] += w * p[i];
        }
        for (auto& v : x)
            v /= wsum;
        out.insert(out.end(), x.begin(), x.end());
    }
    return out;
}

namespace {

std::vector<Vec> sample_exact(const ConvexBody& K, const UniformSampler& sampler, std::size_t n,
                              std::uint64_t seed, std::uint64_t offset, int threads) {
    std::vector<Vec> pts(n);
    parallel_for(n, threads, [&](std::size_t i) {
        auto rng = stream(seed, offset + i);
        for (;;) {
            Vec x = from_double(sampler(rng));
            if (contains(K, x)) {
                pts[i] = std::move(x);
                return;
            }
        }
    });
    return pts;
}

} // namespace

std::vector<VecD> sample_uniform(const ConvexBody& K, std::size_t n, const RandomConfig& cfg) {
    cfg.validate();
    if (n == 0)
        return {};
    UniformSampler sampler(K);
    std::vector<VecD> out;
    for (const auto& p : sample_exact(K, sampler, n, cfg.seed, 0, cfg.threads))
        out.push_back(to_double(p));
    return out;
}

long strict_translate_target(int d) {
    return std::max(1L, static_cast<long>(std::floor(0.25 * two_over_sqrt3_pow(d))));
}

StrictTranslateResult strict_translate_arrangement(const ConvexBody& K, const RandomConfig& cfg) {
    cfg.validate();
    const long m = strict_translate_target(K.dim());
    const std::size_t n = scaled_count(2 * m, cfg.oversample_factor);
    UniformSampler sampler(K);
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        auto pts = sample_exact(K, sampler, n, cfg.seed, static_cast<std::uint64_t>(attempt) << 32, cfg.threads);
        std::vector<bool> alive(n, true);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n && alive[i]; ++j)
                if (alive[j] && close_pair(K, pts[i], pts[j], Rational(1)))
                    alive[j] = false;
        std::vector<Vec> kept;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i])
                kept.push_back(pts[i]);
        if (static_cast<long>(kept.size()) < m)
            continue;
        Arrangement A = translates_of_points(K, kept);
        VerificationReport rep = verify_kappa_witness(A, {cfg.threads});
        if (!rep.strict || !rep.pairwise_intersecting)
            throw std::logic_error("strict translate arrangement failed exact verification");
        return {std::move(A), m, n, attempt + 1};
    }
    throw RetriesExhausted("fewer than " + std::to_string(m) + " points survived in " +
                           std::to_string(cfg.max_retries) + " attempts");
}

double boundary_delta(int d) {
    if (d <= 0)
        throw std::invalid_argument("dimension must be positive");
    return std::log((d + 4.0) / (d + 1.0)) / d;
}

long boundary_sample_target(int d) {
    const double k = 0.5 * two_over_sqrt3_pow(d) * 3.0 / (std::exp(2.0) * (d + 4.0));
    return std::max(1L, static_cast<long>(std::floor(k)));
}

BoundaryPointsResult boundary_strict_points(const ConvexBody& K, const RandomConfig& cfg) {
    cfg.validate();
    if (!is_zero(centroid(K)))
        throw std::invalid_argument("boundary_strict_points: translate the body to its centroid first");
    const int d = K.dim();
    BoundaryPointsResult res;
    res.delta = boundary_delta(d);
    res.target = boundary_sample_target(d);
    res.sampled = scaled_count(res.target, cfg.oversample_factor);
    const double short_cut = 1 - res.delta;
    const double close_cut = 1 + (d + 1) * res.delta;
    UniformSampler sampler(K);
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        res.attempts = attempt + 1;
        auto pts = sample_exact(K, sampler, res.sampled, cfg.seed, static_cast<std::uint64_t>(attempt) << 32,
                                cfg.threads);
        const std::size_t n = pts.size();
        std::vector<bool> alive(n);
        for (std::size_t i = 0; i < n; ++i)
            alive[i] = norm(K, pts[i]).to_double() > short_cut;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n && alive[i]; ++j)
                if (alive[j] && (norm(K, pts[i] - pts[j]).to_double() <= close_cut ||
                                 norm(K, pts[j] - pts[i]).to_double() <= close_cut))
                    alive[j] = false;
        std::vector<Vec> bd;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i])
                bd.push_back(normalize(K, pts[i]));
        // exact certification; the float filters above only propose
        std::vector<bool> keep(bd.size(), true);
        for (std::size_t i = 0; i < bd.size(); ++i)
            for (std::size_t j = i + 1; j < bd.size() && keep[i]; ++j)
                if (keep[j] && close_pair(K, bd[i], bd[j], Rational(1)))
                    keep[j] = false;
        res.points.clear();
        for (std::size_t i = 0; i < bd.size(); ++i)
            if (keep[i])
                res.points.push_back(bd[i]);
        if (!res.points.empty())
            return res;
    }
    throw RetriesExhausted("no boundary points survived in " + std::to_string(cfg.max_retries) + " attempts");
}

namespace {

using P2 = std::array<double, 2>;

double cross(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// centroid of the convex hull of planar points (monotone chain)
P2 hull_centroid(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0)
            --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    double area = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const P2& a = h[i];
        const P2& b = h[(i + 1) % h.size()];
        const double c = a[0] * b[1] - b[0] * a[1];
        area += c;
        cx += (a[0] + b[0]) * c;
        cy += (a[1] + b[1]) * c;
    }
    return {cx / (3 * area), cy / (3 * area)};
}

std::array<VecD, 2> tangent_basis(const VecD& u) {
    VecD a = std::fabs(u[0]) < 0.9 ? VecD{1, 0, 0} : VecD{0, 1, 0};
    VecD t1{u[1] * a[2] - u[2] * a[1], u[2] * a[0] - u[0] * a[2], u[0] * a[1] - u[1] * a[0]};
    double n1 = std::sqrt(dot(std::span<const double>(t1), std::span<const double>(t1)));
    for (auto& v : t1)
        v /= n1;
    VecD t2{u[1] * t1[2] - u[2] * t1[1], u[2] * t1[0] - u[0] * t1[2], u[0] * t1[1] - u[1] * t1[0]};
    return {t1, t2};
}

// centroid (in R^3) of the projection of the vertex hull onto u-perp
VecD projected_centroid3(const std::vector<VecD>& verts, const VecD& u) {
    auto [e1, e2] = tangent_basis(u);
    std::vector<P2> pts;
    for (const auto& v : verts)
        pts.push_back({dot(std::span<const double>(v), std::span<const double>(e1)),
                       dot(std::span<const double>(v), std::span<const double>(e2))});
    P2 c = hull_centroid(std::move(pts));
    return {c[0] * e1[0] + c[1] * e2[0], c[0] * e1[1] + c[1] * e2[1], c[0] * e1[2] + c[1] * e2[2]};
}

// signed midpoint of the planar projection onto the line spanned by w = u rotated by 90 degrees
double signed_residual2(const std::vector<VecD>& verts, double angle) {
    const double wx = -std::sin(angle), wy = std::cos(angle);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& v : verts) {
        const double s = v[0] * wx + v[1] * wy;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return 0.5 * (lo + hi);
}

double length(const VecD& v) { return std::sqrt(dot(std::span<const double>(v), std::span<const double>(v))); }

VecD unit(VecD v) {
    const double n = length(v);
    for (auto& x : v)
        x /= n;
    return v;
}

} // namespace

double projection_centroid_residual(const Polytope& P, const VecD& u) {
    std::vector<VecD> verts;
    for (const auto& v : P.vertices())
        verts.push_back(to_double(v));
    if (P.dim() == 2)
        return std::fabs(signed_residual2(verts, std::atan2(u[1], u[0])));
    if (P.dim() == 3)
        return length(projected_centroid3(verts, unit(u)));
    throw UnsupportedRepresentation("projection centroid is implemented for dimensions 2 and 3");
}

ProjectionResult centroid_projection_direction(const ConvexBody& K, double tol) {
    if (K.kind() != ConvexBody::Kind::Polytope || (K.dim() != 2 && K.dim() != 3))
        throw UnsupportedRepresentation("centroid projection search needs a polytope of dimension 2 or 3");
    const Polytope& P = K.as_polytope();
    std::vector<VecD> verts;
    for (const auto& v : P.vertices())
        verts.push_back(to_double(v));

    if (K.dim() == 2) {
        const int steps = 720;
        double a = 0, ga = signed_residual2(verts, 0);
        for (int k = 1; k <= steps; ++k) {
            double b = std::numbers::pi * k / steps;
            double gb = signed_residual2(verts, b);
            if (std::fabs(ga) <= tol)
                return {{std::cos(a), std::sin(a)}, std::fabs(ga)};
            if (ga * gb < 0) {
                for (int it = 0; it < 200 && std::fabs(ga) > tol; ++it) {
                    const double mid = 0.5 * (a + b);
                    const double gm = signed_residual2(verts, mid);
                    if (ga * gm <= 0) {
                        b = mid;
                        gb = gm;
                    } else {
                        a = mid;
                        ga = gm;
                    }
                    if (std::fabs(gb) < std::fabs(ga)) {
                        if (std::fabs(gb) <= tol)
                            return {{std::cos(b), std::sin(b)}, std::fabs(gb)};
                    }
                }
                if (std::fabs(ga) <= tol)
                    return {{std::cos(a), std::sin(a)}, std::fabs(ga)};
                break;
            }
            a = b;
            ga = gb;
        }
        throw std::runtime_error("centroid projection: tolerance not reached");
    }

    if (K.symmetric()) {
        VecD u{1, 0, 0};
        return {u, length(projected_centroid3(verts, u))};
    }
    // starts on a Fibonacci lattice; keep the best few for Gauss-Newton refinement
    const int starts = 400;
    std::vector<std::pair<double, VecD>> cand;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < starts; ++i) {
        const double z = 1 - (i + 0.5) / starts;
        const double r = std::sqrt(1 - z * z);
        VecD u{r * std::cos(golden * i), r * std::sin(golden * i), z};
        cand.emplace_back(length(projected_centroid3(verts, u)), u);
    }
    std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ProjectionResult best{cand.front().second, cand.front().first};
    for (std::size_t s = 0; s < std::min<std::size_t>(cand.size(), 16); ++s) {
        VecD u = cand[s].second;
        VecD c = projected_centroid3(verts, u);
        double res = length(c);
        for (int it = 0; it < 100 && res > tol; ++it) {
            auto [t1, t2] = tangent_basis(u);
            const double h = 1e-7;
            std::array<VecD, 2> J;
            for (int k = 0; k < 2; ++k) {
                const VecD& t = k == 0 ? t1 : t2;
                VecD up{u[0] + h * t[0], u[1] + h * t[1], u[2] + h * t[2]};
                VecD cp = projected_centroid3(verts, unit(up));
                J[static_cast<std::size_t>(k)] = {(cp[0] - c[0]) / h, (cp[1] - c[1]) / h, (cp[2] - c[2]) / h};
            }
            auto jd = [&](int a, int b) {
                return dot(std::span<const double>(J[static_cast<std::size_t>(a)]),
                           std::span<const double>(J[static_cast<std::size_t>(b)]));
            };
            const double a11 = jd(0, 0), a12 = jd(0, 1), a22 = jd(1, 1);
            const double g1 = dot(std::span<const double>(J[0]), std::span<const double>(c));
            const double g2 = dot(std::span<const double>(J[1]), std::span<const double>(c));
            const double det = a11 * a22 - a12 * a12;
            if (std::fabs(det) < 1e-300)
                break;
            const double d1 = -(a22 * g1 - a12 * g2) / det;
            const double d2 = -(a11 * g2 - a12 * g1) / det;
            double step = 1;
            bool improved = false;
            for (int half = 0; half < 40; ++half, step *= 0.5) {
                VecD un = unit({u[0] + step * (d1 * t1[0] + d2 * t2[0]), u[1] + step * (d1 * t1[1] + d2 * t2[1]),
                                u[2] + step * (d1 * t1[2] + d2 * t2[2])});
                VecD cn = projected_centroid3(verts, un);
                if (length(cn) < res) {
                    u = un;
                    c = cn;
                    res = length(cn);
                    improved = true;
                    break;
                }
            }
            if (!improved)
                break;
        }
        if (res < best.residual)
            best = {u, res};
        if (best.residual <= tol)
            return best;
    }
    throw std::runtime_error("centroid projection: tolerance not reached (best residual " +
                             std::to_string(best.residual) + ")");
}

double concentration_bound(double t, int d) { return std::pow(t * t * (4 - t * t) / 4, d / 2.0); }

FEstimate estimate_F(const ConvexBody& K, double t, std::size_t pairs, const RandomConfig& cfg) {
    cfg.validate();
    if (!(t > 0) || !(t < std::numbers::sqrt2))
        throw std::invalid_argument("estimate_F: t must lie in (0, sqrt 2)");
    if (pairs == 0)
        throw std::invalid_argument("estimate_F: need at least one pair");
    UniformSampler sampler(K);
    const auto d = static_cast<std::size_t>(K.dim());
    const auto workers = static_cast<std::size_t>(cfg.threads);
    std::vector<std::size_t> hits(workers, 0);
    parallel_for(workers, cfg.threads, [&](std::size_t w) {
        VecD diff(d);
        for (std::size_t p = w; p < pairs; p += workers) {
            auto rng = stream(cfg.seed, p);
            VecD x = sampler(rng);
            VecD y = sampler(rng);
            for (std::size_t i = 0; i < d; ++i)
                diff[i] = x[i] - y[i];
            if (norm_approx(K, diff) <= t)
                ++hits[w];
        }
    });
    std::size_t total = 0;
    for (auto h : hits)
        total += h;
    FEstimate est;
    est.pairs = pairs;
    est.estimate = static_cast<double>(total) / static_cast<double>(pairs);
    est.standard_error = std::sqrt(est.estimate * (1 - est.estimate) / static_cast<double>(pairs));
    est.bound = concentration_bound(t, K.dim());
    return est;
}

} // namespace minkarr
