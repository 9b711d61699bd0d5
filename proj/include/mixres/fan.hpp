#pragma once

#include <optional>
#include <vector>

#include "mixres/newton.hpp"

namespace mixres {

// Simplicial rational cone spanned by primitive, linearly independent,
// nonnegative vertices. Vertex order is meaningful: chart coordinates and
// factorizations follow it.
struct SimplicialCone {
    std::vector<WeightVector> vertices;

    int n() const { return vertices.empty() ? 0 : vertices[0].n(); }
    int k() const { return static_cast<int>(vertices.size()); }
    // Sum of the vertices; lies in the relative interior.
    WeightVector interior_point() const;

    friend bool operator==(const SimplicialCone& a, const SimplicialCone& b) {
        return a.vertices == b.vertices;
    }
};

// Validates and normalizes the vertex list. Throws ZeroVector, NegativeEntry
// or DependentVertices.
SimplicialCone make_cone(const std::vector<std::vector<long long>>& vertices);

// Unimodularity: for k = n, |det| = 1; for k < n, the vertices extend to a
// lattice basis (all k x k minors coprime).
bool is_regular(const SimplicialCone& c);

// Fan structure on the nonnegative quadrant, n = 2: maximal cones listed by
// slope-sorted adjacent ray pairs.
struct ConeSubdivision {
    std::vector<SimplicialCone> max_cones;
    std::vector<WeightVector> rays();                    // every vertex, slope ascending
    std::vector<WeightVector> strictly_positive_rays();  // subset with all entries > 0
    // True when the maximal cones are the consecutive pairs of the slope-sorted
    // ray list and the extreme rays are the two axes.
    bool covers_quadrant();
};

// Minimal chain of rays turning the wedge between consecutive rays of the
// dual diagram into unimodular cones: repeated insertion of the unique
// primitive vector forming a determinant-1 pair with the current ray and
// lying closest to the far ray. Result: rays E1 .. E2 with every adjacent
// pair of determinant 1; n = 2, convenient f.
ConeSubdivision canonical_subdivision(const MixedPolynomial& f);

// The chain inserted strictly between a and b (excluding both), for
// det(a, b) >= 1 in slope order.
std::vector<WeightVector> unimodular_chain(const WeightVector& a, const WeightVector& b);

// A cone is admissible for f when its relative interior stays inside one
// weight class of the dual diagram; for n = 2 a 2-cone fails exactly when
// some dual-diagram ray passes strictly through its interior. Also
// cross-checks the face identity face(P_1 + .. + P_k) = intersection of the
// face point sets.
bool is_admissible(const SimplicialCone& c, const MixedPolynomial& f);

// The fan contains both axis rays Cone(E1) and Cone(E2) (as cones or faces of
// cones). Requires convenient f (NotConvenient otherwise).
bool is_convenient_subdivision(ConeSubdivision& s, const MixedPolynomial& f);

// Column-per-vertex integer matrix [[v1_x, v2_x], [v1_y, v2_y]] for display
// and serialization of a 2-dimensional cone.
std::vector<std::vector<long long>> cone_matrix(const SimplicialCone& c);

}  // namespace mixres
