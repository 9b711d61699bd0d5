#include "mixres/fan.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "mixres/errors.hpp"
#include "mixres/rational.hpp"

namespace mixres {

namespace {

long long det2(const WeightVector& a, const WeightVector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// Slope order on rays of the nonnegative quadrant: angle from the x-axis.
bool slope_less(const WeightVector& a, const WeightVector& b) { return det2(a, b) > 0; }

// Exact rank of the vertex matrix over Q.
int rank_of(const std::vector<WeightVector>& vs) {
    if (vs.empty()) return 0;
    const int n = vs[0].n();
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vs) {
        std::vector<Rational> r(n);
        for (int j = 0; j < n; ++j) r[j] = Rational(static_cast<long>(v[j]));
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (int j = col; j < n; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

long long det_recursive(std::vector<std::vector<long long>> m) {
    const int k = static_cast<int>(m.size());
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    long long acc = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<long long>> minor;
        for (int r = 1; r < k; ++r) {
            std::vector<long long> row;
            for (int c = 0; c < k; ++c)
                if (c != i) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        long long term = m[0][i] * det_recursive(std::move(minor));
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

WeightVector SimplicialCone::interior_point() const {
    std::vector<long long> sum(n(), 0);
    for (const auto& v : vertices)
        for (int i = 0; i < n(); ++i) sum[i] += v[i];
    return WeightVector(sum);
}

SimplicialCone make_cone(const std::vector<std::vector<long long>>& vertices) {
    if (vertices.empty()) throw Error("simplicial cone", "cone needs at least one vertex");
    SimplicialCone c;
    for (const auto& v : vertices) c.vertices.emplace_back(v);  // normalizes, checks sign
    if (rank_of(c.vertices) != c.k()) throw DependentVertices();
    return c;
}

bool is_regular(const SimplicialCone& c) {
    const int n = c.n();
    const int k = c.k();
    if (k == n) {
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = c.vertices[j][i];
        long long d = det_recursive(std::move(m));
        return d == 1 || d == -1;
    }
    // k < n: part of a lattice basis iff the gcd over all k x k minors is 1.
    long long g = 0;
    // Enumerate k-subsets of the n coordinates.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (int r = 0; r < k; ++r)
            for (int ccol = 0; ccol < k; ++ccol) m[r][ccol] = c.vertices[r][idx[ccol]];
        g = std::gcd(g, std::abs(det_recursive(std::move(m))));
        if (g == 1) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g == 1;
}

std::vector<WeightVector> ConeSubdivision::rays() {
    std::set<std::vector<long long>> seen;
    std::vector<WeightVector> out;
    for (const auto& c : max_cones)
        for (const auto& v : c.vertices)
            if (seen.insert(v.entries()).second) out.push_back(v);
    std::sort(out.begin(), out.end(), slope_less);
    return out;
}

std::vector<WeightVector> ConeSubdivision::strictly_positive_rays() {
    std::vector<WeightVector> out;
    for (const auto& r : rays())
        if (r.strictly_positive()) out.push_back(r);
    return out;
}

bool ConeSubdivision::covers_quadrant() {
    auto rs = rays();
    if (rs.size() < 2) return false;
    if (!(rs.front() == WeightVector({1, 0}))) return false;
    if (!(rs.back() == WeightVector({0, 1}))) return false;
    std::set<std::pair<std::vector<long long>, std::vector<long long>>> pairs;
    for (const auto& c : max_cones) {
        if (c.k() != 2) continue;
        auto a = c.vertices[0], b = c.vertices[1];
        if (slope_less(b, a)) std::swap(a, b);
        pairs.insert({a.entries(), b.entries()});
    }
    for (std::size_t i = 0; i + 1 < rs.size(); ++i)
        if (!pairs.count({rs[i].entries(), rs[i + 1].entries()})) return false;
    return true;
}

std::vector<WeightVector> unimodular_chain(const WeightVector& a, const WeightVector& b) {
    if (a.n() != 2 || b.n() != 2) throw UnsupportedDimension("unimodular_chain");
    if (det2(a, b) < 1) throw Error("slope-ordered ray pair", "chain requires det(a, b) >= 1");
    std::vector<WeightVector> chain;
    WeightVector v = a;
    while (det2(v, b) > 1) {
        // Solve det(v, w) = 1; among w = w0 + t v pick the one on the b-side
        // with the smallest nonnegative det(w, b). That w is primitive and
        // the unique next ray of the minimal regular chain.
        long long x0 = 0, y0 = 0;
        {
            // Find u, s with v0 * u + v1 * s = 1, then det(v, (x, y)) = v0 y - v1 x.
            long long r0 = v[0], r1 = v[1];
            long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (r1 != 0) {
                long long q = r0 / r1;
                std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
            }
            // r0 = gcd = v0 s0 + v1 t0 = 1. Take w0 = (-t0, s0): v0*s0 - v1*(-t0) = 1.
            x0 = -t0;
            y0 = s0;
        }
        long long d = det2(v, b);
        long long c0 = x0 * b[1] - y0 * b[0];  // det(w0, b)
        // Shift by t*v: det(w0 + t v, b) = c0 + t d; reduce into [0, d).
        long long t = -(c0 / d);
        long long val = c0 + t * d;
        if (val < 0) {
            t += 1;
            val += d;
        }
        WeightVector w({x0 + t * v[0], y0 + t * v[1]});
        if (val == 0) break;  // w parallel to b: nothing strictly between
        chain.push_back(w);
        v = w;
    }
    return chain;
}

ConeSubdivision canonical_subdivision(const MixedPolynomial& f) {
    if (f.n() != 2) throw UnsupportedDimension("canonical_subdivision");
    DualDiagram2D dd = dual_diagram(f);
    std::vector<WeightVector> rays;
    for (std::size_t i = 0; i < dd.rays.size(); ++i) {
        rays.push_back(dd.rays[i]);
        if (i + 1 < dd.rays.size())
            for (const auto& w : unimodular_chain(dd.rays[i], dd.rays[i + 1])) rays.push_back(w);
    }
    ConeSubdivision s;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        s.max_cones.push_back(SimplicialCone{{rays[i], rays[i + 1]}});
    return s;
}

bool is_admissible(const SimplicialCone& c, const MixedPolynomial& f) {
    if (c.n() != 2) throw UnsupportedDimension("is_admissible");
    if (c.k() == 1) return true;  // a single ray sits inside exactly one class

    DualDiagram2D dd = dual_diagram(f);
    auto a = c.vertices[0], b = c.vertices[1];
    if (slope_less(b, a)) std::swap(a, b);
    for (const auto& ray : dd.rays)
        if (det2(a, ray) > 0 && det2(ray, b) > 0) return false;

    // Cross-check: on an admissible cone the interior-point face equals the
    // intersection of the vertex faces.
    auto points_of = [&f](const WeightVector& w) {
        std::set<std::vector<int>> pts;
        for (const auto& s : face(f, w).points) pts.insert(s.point);
        return pts;
    };
    std::set<std::vector<int>> inter = points_of(c.vertices[0]);
    for (int i = 1; i < c.k(); ++i) {
        auto next = points_of(c.vertices[i]);
        std::set<std::vector<int>> keep;
        for (const auto& p : inter)
            if (next.count(p)) keep.insert(p);
        inter = std::move(keep);
    }
    if (points_of(c.interior_point()) != inter)
        throw Error("face intersection identity",
                    "admissible cone violates the face intersection identity");
    return true;
}

bool is_convenient_subdivision(ConeSubdivision& s, const MixedPolynomial& f) {
    ConvenienceReport conv = is_convenient(f);
    if (!conv.convenient) throw NotConvenient(conv.missing_axis);
    bool has_e1 = false, has_e2 = false;
    WeightVector e1({1, 0}), e2({0, 1});
    for (const auto& c : s.max_cones)
        for (const auto& v : c.vertices) {
            if (v == e1) has_e1 = true;
            if (v == e2) has_e2 = true;
        }
    return has_e1 && has_e2;
}

std::vector<std::vector<long long>> cone_matrix(const SimplicialCone& c) {
    std::vector<std::vector<long long>> m(c.n(), std::vector<long long>(c.k()));
    for (int i = 0; i < c.n(); ++i)
        for (int j = 0; j < c.k(); ++j) m[i][j] = c.vertices[j][i];
    return m;
}

}  // namespace mixres
