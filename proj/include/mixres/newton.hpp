#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mixres/mixed_poly.hpp"

namespace mixres {

// Primitive integer weight: nonnegative entries, not all zero, gcd 1.
// Constructors divide out the gcd, so two proportional inputs compare equal.
class WeightVector {
public:
    explicit WeightVector(std::vector<long long> entries);

    const std::vector<long long>& entries() const { return entries_; }
    long long operator[](int i) const { return entries_[i]; }
    int n() const { return static_cast<int>(entries_.size()); }
    bool strictly_positive() const;

    long long dot(const std::vector<int>& x) const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }
    friend bool operator<(const WeightVector& a, const WeightVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<long long> entries_;
};

// Support point nu + mu with the indices of the terms landing on it.
struct SupportPoint {
    std::vector<int> point;
    std::vector<int> term_indices;
};

// Multiset-collapsed radial support of f, sorted by point.
std::vector<SupportPoint> support(const MixedPolynomial& f);

// d(P) = min of P over the support. Throws EmptyPolynomial on 0.
long long weight_min(const MixedPolynomial& f, const WeightVector& P);

// Face of the Newton polyhedron selected by a weight: the argmin of P over
// the support, plus the recession directions {j : p_j = 0} of the unbounded
// part. Compact exactly when the weight is strictly positive.
struct Face {
    WeightVector weight;
    long long d = 0;
    std::vector<SupportPoint> points;  // sorted by point
    int dim = 0;                       // affine dimension of the points
    std::vector<int> recession;        // 1-based variable indices with p_j = 0
    bool compact = false;
};

Face face(const MixedPolynomial& f, const WeightVector& P);

// Compact 1-faces of the boundary staircase, n = 2 only.
struct BoundaryEdge {
    std::vector<int> from;  // larger first coordinate
    std::vector<int> to;
    WeightVector normal;
};

// Vertices and edges of the Newton boundary for a convenient two-variable
// germ. Vertices are sorted by first coordinate descending. Throws
// EmptyPolynomial, UnsupportedDimension or NotConvenient.
struct NewtonBoundary {
    std::vector<std::vector<int>> vertices;
    std::vector<BoundaryEdge> edges;
};

NewtonBoundary newton_boundary(const MixedPolynomial& f);

// One equivalence class of weights: either the ray through an edge normal, or
// the open sector between two consecutive rays of the dual diagram. All
// weights in a class select the same face; `face_points` records it.
struct WeightClass {
    enum class Kind { EdgeRay, Sector };
    Kind kind;
    WeightVector representative;       // the normal itself, or primitive(A + B)
    std::vector<WeightVector> bounds;  // sector only: the two bounding rays
    std::vector<std::vector<int>> face_points;
};

// Dual Newton diagram for n = 2: the full ray sequence E1, edge normals in
// slope order, E2, and the induced weight classes.
struct DualDiagram2D {
    std::vector<WeightVector> rays;
    std::vector<WeightVector> edge_normals;
    std::vector<WeightClass> classes;
};

DualDiagram2D dual_diagram(const MixedPolynomial& f);

}  // namespace mixres
