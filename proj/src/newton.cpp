#include "mixres/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mixres/errors.hpp"
#include "mixres/rational.hpp"

namespace mixres {

WeightVector::WeightVector(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ZeroVector();
    long long g = 0;
    for (long long e : entries_) {
        if (e < 0) throw NegativeEntry();
        g = std::gcd(g, e);
    }
    if (g == 0) throw ZeroVector();
    for (long long& e : entries_) e /= g;
}

bool WeightVector::strictly_positive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](long long e) { return e > 0; });
}

long long WeightVector::dot(const std::vector<int>& x) const {
    long long acc = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) acc += entries_[i] * x[i];
    return acc;
}

std::vector<SupportPoint> support(const MixedPolynomial& f) {
    if (f.is_zero()) throw EmptyPolynomial();
    std::map<std::vector<int>, std::vector<int>> by_point;
    const auto& terms = f.terms();
    for (int t = 0; t < static_cast<int>(terms.size()); ++t) {
        std::vector<int> p(f.n());
        for (int i = 0; i < f.n(); ++i) p[i] = terms[t].exps.nu[i] + terms[t].exps.mu[i];
        by_point[p].push_back(t);
    }
    std::vector<SupportPoint> out;
    out.reserve(by_point.size());
    for (auto& [point, idx] : by_point) out.push_back({point, idx});
    return out;
}

long long weight_min(const MixedPolynomial& f, const WeightVector& P) {
    if (f.is_zero()) throw EmptyPolynomial();
    if (P.n() != f.n()) throw Error("weight arity", "weight must have n entries");
    bool first = true;
    long long best = 0;
    for (const auto& s : support(f)) {
        long long v = P.dot(s.point);
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

namespace {

// Affine dimension of a point set, exact over the rationals.
int affine_dim(const std::vector<std::vector<int>>& pts) {
    if (pts.size() <= 1) return 0;
    const std::size_t n = pts[0].size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = Rational(pts[i][j] - pts[0][j]);
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (std::size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < n; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Face face(const MixedPolynomial& f, const WeightVector& P) {
    Face out{P};
    out.d = weight_min(f, P);
    for (const auto& s : support(f))
        if (P.dot(s.point) == out.d) out.points.push_back(s);
    std::vector<std::vector<int>> pts;
    for (const auto& s : out.points) pts.push_back(s.point);
    out.dim = affine_dim(pts);
    for (int j = 0; j < P.n(); ++j)
        if (P[j] == 0) out.recession.push_back(j + 1);
    out.compact = out.recession.empty();
    return out;
}

namespace {

// Vertices of the boundary staircase for n = 2: Pareto-minimal support points
// that survive the lower convex hull, ordered x descending.
std::vector<std::vector<int>> staircase_vertices(const std::vector<SupportPoint>& sup) {
    std::vector<std::vector<int>> pts;
    for (const auto& s : sup) pts.push_back(s.point);
    // Pareto filter: drop points dominated componentwise.
    std::vector<std::vector<int>> pareto;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (q != p && q[0] <= p[0] && q[1] <= p[1]) dominated = true;
        if (!dominated) pareto.push_back(p);
    }
    std::sort(pareto.begin(), pareto.end(),
              [](const auto& a, const auto& b) { return a[0] > b[0]; });
    // Walking x descending, keep only convex turns (cross product <= 0 culls
    // points on or above the segment between neighbours).
    std::vector<std::vector<int>> hull;
    for (const auto& p : pareto) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            long long cross = static_cast<long long>(b[0] - a[0]) * (p[1] - a[1]) -
                              static_cast<long long>(b[1] - a[1]) * (p[0] - a[0]);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

}  // namespace

NewtonBoundary newton_boundary(const MixedPolynomial& f) {
    if (f.is_zero()) throw EmptyPolynomial();
    if (f.n() != 2) throw UnsupportedDimension("newton_boundary");
    ConvenienceReport conv = is_convenient(f);
    if (!conv.convenient) throw NotConvenient(conv.missing_axis);

    NewtonBoundary nb;
    nb.vertices = staircase_vertices(support(f));
    for (std::size_t i = 0; i + 1 < nb.vertices.size(); ++i) {
        const auto& a = nb.vertices[i];
        const auto& b = nb.vertices[i + 1];
        // a has the larger x; the primitive inward normal is (b_y - a_y, a_x - b_x).
        WeightVector normal({static_cast<long long>(b[1] - a[1]), static_cast<long long>(a[0] - b[0])});
        nb.edges.push_back({a, b, normal});
    }
    return nb;
}

DualDiagram2D dual_diagram(const MixedPolynomial& f) {
    NewtonBoundary nb = newton_boundary(f);
    DualDiagram2D dd;
    for (auto it = nb.edges.rbegin(); it != nb.edges.rend(); ++it)
        dd.edge_normals.push_back(it->normal);  // staircase order reversed = slope ascending

    dd.rays.emplace_back(std::vector<long long>{1, 0});
    for (const auto& normals : dd.edge_normals) dd.rays.push_back(normals);
    dd.rays.emplace_back(std::vector<long long>{0, 1});

    auto face_points_of = [&f](const WeightVector& w) {
        std::vector<std::vector<int>> pts;
        for (const auto& s : face(f, w).points) pts.push_back(s.point);
        return pts;
    };

    // Sweep order: sector, ray, sector, ..., ray, sector (2m + 1 classes).
    for (std::size_t i = 0; i + 1 < dd.rays.size(); ++i) {
        const auto& a = dd.rays[i];
        const auto& b = dd.rays[i + 1];
        WeightVector rep({a[0] + b[0], a[1] + b[1]});
        dd.classes.push_back(
            WeightClass{WeightClass::Kind::Sector, rep, {a, b}, face_points_of(rep)});
        if (i + 2 < dd.rays.size())
            dd.classes.push_back(
                WeightClass{WeightClass::Kind::EdgeRay, b, {}, face_points_of(b)});
    }
    return dd;
}

}  // namespace mixres
