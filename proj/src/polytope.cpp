#include "minkarr/polytope.hpp"

#include "minkarr/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace minkarr {

namespace {

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

void check_enumeration(std::size_t n, int d, const char* what) {
    if (binomial(static_cast<int>(n), d) > kEnumerationCap)
        throw UnsupportedRepresentation(std::string(what) + ": too many " + std::to_string(d) +
                                        "-subsets of " + std::to_string(n) +
                                        " elements for enumeration");
}

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, int k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k < 0 || static_cast<std::size_t>(k) > n)
        return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    for (;;) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<std::size_t>(k - i))
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Nonzero vector spanning the kernel of M when the kernel is one-dimensional.
bool kernel_vector(std::vector<Vec> M, Vec& out) {
    const std::size_t rows = M.size(), cols = M.empty() ? 0 : M[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(M[p], M[r]);
        Rational inv = 1 / M[r][c];
        for (auto& v : M[r])
            v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0)
                continue;
            Rational f = M[i][c];
            for (std::size_t j = c; j < cols; ++j)
                M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r + 1 != cols)
        return false;
    std::size_t free_col = cols - 1;
    for (std::size_t c = 0, k = 0; c < cols; ++c) {
        if (k < pivot_col.size() && pivot_col[k] == c) {
            ++k;
            continue;
        }
        free_col = c;
        break;
    }
    out.assign(cols, Rational(0));
    out[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i)
        out[pivot_col[i]] = -M[i][free_col];
    return true;
}

int linear_rank(std::vector<Vec> M) {
    // affine rank of {0} u rows equals the linear rank of rows
    M.insert(M.begin(), Vec(M.empty() ? 0 : M[0].size(), Rational(0)));
    return affine_rank(M);
}

Vec scaled(const Vec& a, const Rational& t) { return t * a; }

} // namespace

Rational simplex_volume(const std::vector<Vec>& pts) {
    const std::size_t d = pts.size() - 1;
    std::vector<Vec> M;
    M.reserve(d);
    for (std::size_t i = 1; i <= d; ++i)
        M.push_back(pts[i] - pts[0]);
    Rational det = determinant(std::move(M));
    Rational fact = 1;
    for (std::size_t i = 2; i <= d; ++i)
        fact *= static_cast<unsigned long>(i);
    return abs(det) / fact;
}

Polytope Polytope::from_halfspaces(int dim, const std::vector<Halfspace>& hs) {
    if (dim <= 0)
        throw std::invalid_argument("polytope dimension must be positive");
    std::set<Vec> normals;
    for (const auto& h : hs) {
        if (static_cast<int>(h.a.size()) != dim)
            throw DimensionMismatch("facet normal has wrong dimension");
        if (h.b == 0)
            throw DegenerateBody("origin lies on a facet hyperplane (b = 0)");
        if (h.b < 0)
            throw DegenerateBody("origin violates a facet inequality (b < 0)");
        if (is_zero(h.a))
            continue;
        normals.insert(scaled(h.a, 1 / h.b));
    }
    std::vector<Vec> A(normals.begin(), normals.end());
    if (A.size() < static_cast<std::size_t>(dim) + 1)
        throw DegenerateBody("too few facets for a bounded polytope");

    // bounded iff every coordinate is bounded on both sides
    Vec ones(A.size(), Rational(1));
    for (int i = 0; i < dim; ++i)
        for (int s : {1, -1}) {
            Vec c(static_cast<std::size_t>(dim), Rational(0));
            c[static_cast<std::size_t>(i)] = s;
            if (lp::minimize(A, ones, c).status != lp::Status::Optimal)
                throw DegenerateBody("half-spaces do not bound a polytope");
        }

    check_enumeration(A.size(), dim, "vertex enumeration");
    std::set<Vec> verts;
    Vec rhs(static_cast<std::size_t>(dim), Rational(1));
    for_each_subset(A.size(), dim, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> M;
        for (auto i : idx)
            M.push_back(A[i]);
        Vec x;
        if (!solve_linear(M, rhs, x))
            return;
        for (const auto& a : A)
            if (dot(a, x) > 1)
                return;
        verts.insert(std::move(x));
    });

    Polytope p;
    p.dim_ = dim;
    p.vertices_.assign(verts.begin(), verts.end());
    // drop redundant inequalities
    for (const auto& a : A) {
        std::vector<Vec> tight;
        for (const auto& v : p.vertices_)
            if (dot(a, v) == 1)
                tight.push_back(v);
        if (affine_rank(tight) == dim - 1)
            p.facets_.push_back(a);
    }
    p.finish();
    return p;
}

Polytope Polytope::from_vertices(int dim, const std::vector<Vec>& pts) {
    if (dim <= 0)
        throw std::invalid_argument("polytope dimension must be positive");
    std::set<Vec> uniq;
    for (const auto& v : pts) {
        if (static_cast<int>(v.size()) != dim)
            throw DimensionMismatch("vertex has wrong dimension");
        uniq.insert(v);
    }
    std::vector<Vec> P(uniq.begin(), uniq.end());
    if (affine_rank(P) != dim)
        throw DegenerateBody("vertices do not span a full-dimensional polytope");
    check_enumeration(P.size(), dim, "facet enumeration");

    std::set<Vec> normals;
    bool origin_ok = true;
    for_each_subset(P.size(), dim, [&](const std::vector<std::size_t>& idx) {
        if (!origin_ok)
            return;
        // hyperplane a.x = c through the chosen points: kernel of [v | -1]
        std::vector<Vec> M;
        for (auto i : idx) {
            Vec row = P[i];
            row.push_back(Rational(-1));
            M.push_back(std::move(row));
        }
        Vec h;
        if (!kernel_vector(M, h))
            return;
        Vec a(h.begin(), h.end() - 1);
        Rational c = h.back();
        int side = 0;
        for (const auto& v : P) {
            Rational s = dot(a, v) - c;
            if (s == 0)
                continue;
            int sg = s > 0 ? 1 : -1;
            if (side == 0)
                side = sg;
            else if (side != sg)
                return;
        }
        if (side > 0) {
            a = -a;
            c = -c;
        }
        if (c <= 0) {
            origin_ok = false;
            return;
        }
        normals.insert(scaled(a, 1 / c));
    });
    if (!origin_ok)
        throw DegenerateBody("origin is not in the interior of the vertex hull");

    Polytope p;
    p.dim_ = dim;
    p.facets_.assign(normals.begin(), normals.end());
    for (const auto& v : P) {
        std::vector<Vec> tight;
        for (const auto& a : p.facets_)
            if (dot(a, v) == 1)
                tight.push_back(a);
        if (linear_rank(tight) == dim)
            p.vertices_.push_back(v);
    }
    p.finish();
    return p;
}

Polytope Polytope::from_both(int dim, std::vector<Vec> facet_normals, std::vector<Vec> vertices) {
    Polytope p;
    p.dim_ = dim;
    p.facets_ = std::move(facet_normals);
    p.vertices_ = std::move(vertices);
    p.finish();
    return p;
}

void Polytope::finish() {
    std::sort(facets_.begin(), facets_.end());
    std::sort(vertices_.begin(), vertices_.end());
    facets_d_.clear();
    for (const auto& a : facets_)
        facets_d_.push_back(to_double(a));
    std::set<Vec> fs(facets_.begin(), facets_.end());
    symmetric_ = std::all_of(facets_.begin(), facets_.end(), [&](const Vec& a) { return fs.count(-a) > 0; });
}

Rational Polytope::gauge(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw DimensionMismatch("norm: vector dimension " + std::to_string(x.size()) +
                                " differs from body dimension " + std::to_string(dim_));
    Rational best = 0;
    for (const auto& a : facets_) {
        Rational s = dot(a, x);
        if (s > best)
            best = s;
    }
    return best;
}

double Polytope::gauge_approx(std::span<const double> x) const {
    double best = 0;
    for (const auto& a : facets_d_) {
        double s = dot(std::span<const double>(a), x);
        if (s > best)
            best = s;
    }
    return best;
}

Polytope Polytope::reflected() const {
    std::vector<Vec> f, v;
    for (const auto& a : facets_)
        f.push_back(-a);
    for (const auto& x : vertices_)
        v.push_back(-x);
    return from_both(dim_, std::move(f), std::move(v));
}

Polytope Polytope::translated(const Vec& p) const {
    // a.(x + p) <= 1  <=>  a.x <= 1 - a.p
    std::vector<Vec> f;
    for (const auto& a : facets_) {
        Rational b = 1 - dot(a, p);
        if (b == 0)
            throw DegenerateBody("reference point lies on the boundary");
        if (b < 0)
            throw DegenerateBody("reference point lies outside the body");
        f.push_back(scaled(a, 1 / b));
    }
    std::vector<Vec> v;
    for (const auto& x : vertices_)
        v.push_back(x - p);
    return from_both(dim_, std::move(f), std::move(v));
}

std::vector<std::vector<Vec>> Polytope::triangulate() const {
    const std::size_t nv = vertices_.size();
    std::vector<std::vector<std::size_t>> tight(facets_.size());
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (std::size_t v = 0; v < nv; ++v)
            if (dot(facets_[f], vertices_[v]) == 1)
                tight[f].push_back(v);

    auto rank_of = [&](const std::vector<std::size_t>& s) {
        std::vector<Vec> pts;
        for (auto i : s)
            pts.push_back(vertices_[i]);
        return affine_rank(pts);
    };

    // pulling triangulation of a face given by sorted vertex indices and its dimension
    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, int)> pull;
    pull = [&](const std::vector<std::size_t>& face, int k) {
        std::vector<std::vector<std::size_t>> out;
        if (k == 0) {
            out.push_back({face.front()});
            return out;
        }
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> subfaces;
        for (const auto& t : tight) {
            std::vector<std::size_t> g;
            std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(g));
            if (g.size() == face.size() || g.size() < static_cast<std::size_t>(k))
                continue;
            if (std::binary_search(g.begin(), g.end(), apex))
                continue;
            if (subfaces.count(g))
                continue;
            if (rank_of(g) == k - 1)
                subfaces.insert(g);
        }
        for (const auto& g : subfaces)
            for (auto& s : pull(g, k - 1)) {
                s.insert(s.begin(), apex);
                out.push_back(std::move(s));
            }
        return out;
    };

    std::vector<std::vector<Vec>> simplices;
    const Vec origin(static_cast<std::size_t>(dim_), Rational(0));
    for (const auto& t : tight)
        for (const auto& s : pull(t, dim_ - 1)) {
            std::vector<Vec> pts{origin};
            for (auto i : s)
                pts.push_back(vertices_[i]);
            simplices.push_back(std::move(pts));
        }
    return simplices;
}

Rational Polytope::volume() const {
    Rational vol = 0;
    for (const auto& s : triangulate())
        vol += simplex_volume(s);
    return vol;
}

Vec Polytope::centroid() const {
    Rational vol = 0;
    Vec acc(static_cast<std::size_t>(dim_), Rational(0));
    for (const auto& s : triangulate()) {
        Rational w = simplex_volume(s);
        vol += w;
        Vec mean(static_cast<std::size_t>(dim_), Rational(0));
        for (const auto& p : s)
            mean = mean + p;
        acc = acc + (w / static_cast<unsigned long>(s.size())) * mean;
    }
    return (1 / vol) * acc;
}

} // namespace minkarr
