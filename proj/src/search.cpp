#include "minkarr/search.hpp"

#include "minkarr/parallel.hpp"
#include "minkarr/probabilistic.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>

namespace minkarr {

void SearchConfig::validate() const {
    if (target_count < 1)
        throw std::invalid_argument("target_count must be positive");
    if (!(lambda_lo > 0) || !(lambda_lo <= lambda_hi))
        throw std::invalid_argument("lambda range must satisfy 0 < lo <= hi");
    if (steps < 1 || restarts < 1)
        throw std::invalid_argument("steps and restarts must be at least 1");
    if (!(initial_temperature > 0) || !(cooling_rate > 0) || !(cooling_rate <= 1))
        throw std::invalid_argument("temperature must be positive and cooling rate in (0, 1]");
    if (threads < 1)
        throw std::invalid_argument("threads must be at least 1");
}

namespace {

// Rigid witnesses (touching translates) are only reached up to float noise;
// below this energy the rounded candidate is handed to the exact verifier anyway.
constexpr double kSnapEnergy = 1e-3;

// Float view of a planar polygon or disc.
class PlanarGeometry {
  public:
    explicit PlanarGeometry(const ConvexBody& K) {
        if (K.dim() != 2)
            throw std::invalid_argument("search works in the plane only");
        if (K.kind() == ConvexBody::Kind::Ball) {
            disc_ = true;
            radius_ = K.radius().get_d();
            return;
        }
        if (K.kind() != ConvexBody::Kind::Polytope)
            throw std::invalid_argument("search supports polygons and discs");
        facets_ = K.as_polytope().facets_approx();
        for (const auto& a : facets_) {
            for (double s : {1.0, -1.0}) {
                const double ax = s * a[0], ay = s * a[1];
                const double n = std::hypot(ax, ay);
                normals_.push_back({ax / n, ay / n, support(ax, ay) / n, support(-ax, -ay) / n});
            }
        }
    }

    double gauge(double x, double y) const {
        if (disc_)
            return std::hypot(x, y) / radius_;
        double g = 0;
        for (const auto& a : facets_)
            g = std::max(g, a[0] * x + a[1] * y);
        return g;
    }

    // Positive iff d = v_j - v_i lies outside li K - lj K; scaled like a distance.
    double separation(double dx, double dy, double li, double lj) const {
        if (disc_)
            return std::hypot(dx, dy) - (li + lj) * radius_;
        double s = -std::numeric_limits<double>::infinity();
        for (const auto& n : normals_)
            s = std::max(s, n.x * dx + n.y * dy - li * n.h_plus - lj * n.h_minus);
        return s;
    }

    // Scale of the body, used to turn separations into relative quantities.
    double width() const {
        if (disc_)
            return 2 * radius_;
        double w = std::numeric_limits<double>::infinity();
        for (const auto& n : normals_)
            w = std::min(w, n.h_plus + n.h_minus);
        return w;
    }

  private:
    struct Normal {
        double x, y, h_plus, h_minus;
    };
    // h_K(u) for a polygon {a.x <= 1}: max over vertices, taken from pairwise facet intersections.
    double support(double ux, double uy) const {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (std::size_t j = i + 1; j < facets_.size(); ++j) {
                const auto& a = facets_[i];
                const auto& b = facets_[j];
                const double det = a[0] * b[1] - a[1] * b[0];
                if (std::fabs(det) < 1e-12)
                    continue;
                const double x = (b[1] - a[1]) / det;
                const double y = (a[0] - b[0]) / det;
                if (gauge(x, y) <= 1 + 1e-9)
                    best = std::max(best, ux * x + uy * y);
            }
        return best;
    }

    bool disc_ = false;
    double radius_ = 1;
    std::vector<VecD> facets_;
    std::vector<Normal> normals_;
};

struct State {
    std::vector<double> x, y, l;
};

class Annealer {
  public:
    Annealer(const PlanarGeometry& g, const SearchConfig& cfg) : g_(g), cfg_(cfg) {}

    // Violation of the constraints between members i and j; `push` scales the
    // margin and `squared` switches to squared hinges for the polishing phase.
    double pair_energy(const State& s, std::size_t i, std::size_t j, double push = 1, bool squared = false) const {
        const double margin = push * (cfg_.strict ? kSearchMargin : -kSearchMargin);
        const double dx = s.x[j] - s.x[i], dy = s.y[j] - s.y[i];
        // centre of i outside the interior of member j, and vice versa; then closed intersection
        const double h[3] = {
            std::max(0.0, 1 + margin - g_.gauge(-dx, -dy) / s.l[j]),
            std::max(0.0, 1 + margin - g_.gauge(dx, dy) / s.l[i]),
            std::max(0.0, g_.separation(dx, dy, s.l[i], s.l[j]) / (g_.width() * (s.l[i] + s.l[j])) + margin),
        };
        return squared ? h[0] * h[0] + h[1] * h[1] + h[2] * h[2] : h[0] + h[1] + h[2];
    }

    double member_energy(const State& s, std::size_t i) const {
        double e = 0;
        for (std::size_t j = 0; j < s.x.size(); ++j)
            if (j != i)
                e += pair_energy(s, i, j);
        return e;
    }

    double total(const State& s, double push = 1, bool squared = false) const {
        double e = 0;
        for (std::size_t i = 0; i < s.x.size(); ++i)
            for (std::size_t j = i + 1; j < s.x.size(); ++j)
                e += pair_energy(s, i, j, push, squared);
        return e;
    }

    // Gradient descent on squared hinges with a doubled margin, so that the
    // iterate lands strictly inside the relaxed feasible set.
    void polish(State& s, int iterations) const {
        const std::size_t n = s.x.size();
        const bool scales = !cfg_.translates_only;
        auto coord = [&](State& st, std::size_t k) -> double& {
            if (k < n)
                return st.x[k];
            if (k < 2 * n)
                return st.y[k - n];
            return st.l[k - 2 * n];
        };
        const std::size_t vars = scales ? 3 * n : 2 * n;
        std::vector<double> grad(vars);
        double f = total(s, 2, true);
        double rate = 1;
        for (int it = 0; it < iterations && total(s) > 0; ++it) {
            for (std::size_t k = 0; k < vars; ++k) {
                double& c = coord(s, k);
                const double keep = c;
                const double h = 1e-8 * std::max(1.0, std::fabs(keep));
                c = keep + h;
                const double up = total(s, 2, true);
                c = keep - h;
                const double down = total(s, 2, true);
                c = keep;
                grad[k] = (up - down) / (2 * h);
            }
            bool moved = false;
            for (int half = 0; half < 60; ++half, rate *= 0.5) {
                State trial = s;
                for (std::size_t k = 0; k < vars; ++k)
                    coord(trial, k) -= rate * grad[k];
                if (scales)
                    for (auto& l : trial.l)
                        l = std::clamp(l, cfg_.lambda_lo, cfg_.lambda_hi);
                const double ft = total(trial, 2, true);
                if (ft < f) {
                    s = std::move(trial);
                    f = ft;
                    moved = true;
                    rate *= 4;
                    break;
                }
            }
            if (!moved)
                break;
        }
    }

    State run(std::mt19937_64& rng) const {
        const auto n = static_cast<std::size_t>(cfg_.target_count);
        const double log_lo = std::log(cfg_.lambda_lo), log_hi = std::log(cfg_.lambda_hi);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);
        State s;
        const double spread = (cfg_.translates_only ? cfg_.lambda_lo : cfg_.lambda_hi) * g_.width();
        for (std::size_t i = 0; i < n; ++i) {
            s.x.push_back((u01(rng) - 0.5) * spread);
            s.y.push_back((u01(rng) - 0.5) * spread);
            s.l.push_back(cfg_.translates_only ? cfg_.lambda_lo : std::exp(log_lo + u01(rng) * (log_hi - log_lo)));
        }
        double e = total(s);
        State best = s;
        double best_e = e;
        double temp = cfg_.initial_temperature;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int step = 0; step < cfg_.steps && best_e > 0; ++step, temp *= cfg_.cooling_rate) {
            const std::size_t i = pick(rng);
            const double old_x = s.x[i], old_y = s.y[i], old_l = s.l[i];
            const double before = member_energy(s, i);
            // step size shrinks with temperature so the chain can settle into narrow feasible pockets
            const double scale = s.l[i] * g_.width() * std::max(1e-7, std::sqrt(temp));
            if (cfg_.translates_only || u01(rng) < 0.7) {
                s.x[i] += gauss(rng) * scale;
                s.y[i] += gauss(rng) * scale;
            } else {
                const double nl = std::log(s.l[i]) + gauss(rng) * std::max(1e-7, std::sqrt(temp));
                s.l[i] = std::exp(std::clamp(nl, log_lo, log_hi));
            }
            const double delta = member_energy(s, i) - before;
            if (delta <= 0 || u01(rng) < std::exp(-delta / temp)) {
                e += delta;
                if (e < best_e) {
                    e = total(s); // resynchronise against accumulated rounding
                    if (e < best_e) {
                        best_e = e;
                        best = s;
                    }
                }
            } else {
                s.x[i] = old_x;
                s.y[i] = old_y;
                s.l[i] = old_l;
            }
        }
        return best;
    }

  private:
    const PlanarGeometry& g_;
    const SearchConfig& cfg_;
};

std::optional<Arrangement> rationalize(const ConvexBody& K, const State& s, bool strict) {
    const std::size_t n = s.x.size();
    for (long max_den : {10L, 100L, 1000L, 10000L, 100000L, 1000000L}) {
        const double tol = 0.5 / static_cast<double>(max_den);
        std::vector<Homothet> hs;
        for (std::size_t i = 0; i < n; ++i) {
            Vec v{best_rational(s.x[i] - s.x[0], tol, max_den), best_rational(s.y[i] - s.y[0], tol, max_den)};
            hs.push_back({best_rational(s.l[i], tol, max_den), std::move(v)});
        }
        bool positive = std::all_of(hs.begin(), hs.end(), [](const Homothet& h) { return h.lambda > 0; });
        if (!positive)
            continue;
        Arrangement A(K, std::move(hs));
        if (verify_kappa_witness(A).holds(strict, true))
            return A;
    }
    return std::nullopt;
}

} // namespace

double energy(const Arrangement& A, bool strict) {
    PlanarGeometry g(A.body());
    SearchConfig cfg;
    cfg.strict = strict;
    Annealer an(g, cfg);
    State s;
    for (const auto& h : A.homothets()) {
        s.x.push_back(to_double(h.v)[0]);
        s.y.push_back(to_double(h.v)[1]);
        s.l.push_back(h.lambda.get_d());
    }
    return an.total(s);
}

std::optional<Arrangement> search_arrangement(const ConvexBody& K, const SearchConfig& cfg) {
    cfg.validate();
    PlanarGeometry g(K);
    Annealer an(g, cfg);
    const auto batch = static_cast<std::size_t>(cfg.threads);
    for (std::size_t first = 0; first < static_cast<std::size_t>(cfg.restarts); first += batch) {
        const std::size_t count = std::min(batch, static_cast<std::size_t>(cfg.restarts) - first);
        std::vector<std::optional<Arrangement>> found(count);
        parallel_for(count, cfg.threads, [&](std::size_t k) {
            auto rng = stream(cfg.seed, first + k);
            State s = an.run(rng);
            an.polish(s, 20000);
            const double e = an.total(s);
            if (e <= kSnapEnergy)
                found[k] = rationalize(K, s, cfg.strict);
            if (cfg.verbose)
                std::cerr << "restart " << first + k << ": energy " << e
                          << (e <= kSnapEnergy ? (found[k] ? ", verified" : ", rounding failed") : "") << '\n';
        });
        for (auto& f : found)
            if (f)
                return f;
    }
    return std::nullopt;
}

} // namespace minkarr
