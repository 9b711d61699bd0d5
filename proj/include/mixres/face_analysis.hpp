#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mixres/newton.hpp"

namespace mixres {

enum class PolarSign { positive, zero, negative, mixed };

// Radial and polar degree data of one face function f_P. `pdeg` is present
// exactly when every face term has the same value of P(nu - mu); then f_P is
// strongly mixed weighted homogeneous for P and rdeg +- pdeg are both even.
struct FaceDegreeRecord {
    WeightVector weight;
    std::vector<std::vector<int>> face_points;
    long long rdeg = 0;
    std::optional<long long> pdeg;
    bool strongly_mixed = false;
    PolarSign polar_sign = PolarSign::mixed;
    // Per face term: (index into f.terms(), P(nu + mu), P(nu - mu)).
    struct TermDegrees {
        int term_index;
        long long radial;
        long long polar;
    };
    std::vector<TermDegrees> terms;
};

// Sum of the terms on the compact face selected by a strictly positive
// weight. Throws NonCompactFace when P has a zero entry.
MixedPolynomial face_function(const MixedPolynomial& f, const WeightVector& P);

FaceDegreeRecord degrees(const MixedPolynomial& f, const WeightVector& P);

enum class FaceType { StronglyPolarPositive, StronglyPolarNonNegative, NotOfType };

// Verdict over every compact face of the boundary, n = 2. Each face is
// examined through every adjacent candidate weight (edge normals; for
// vertices, the canonical refinement rays of the surrounding sector plus the
// sector's mediant). NotOfType records one offending weight.
struct FaceTypeVerdict {
    FaceType type = FaceType::NotOfType;
    std::vector<FaceDegreeRecord> table;
    std::optional<FaceDegreeRecord> offending_face;
};

FaceTypeVerdict classify_face_type(const MixedPolynomial& f);

// Randomised check that every strictly positive weight yields a polar
// homogeneous face function with nonnegative polar degree. Requires the
// classifier verdict to be of strongly polar non-negative type first; throws
// PreconditionNotVerified otherwise.
struct WeightTransferReport {
    int trials = 0;
    int failures = 0;
    std::vector<WeightVector> failed_weights;
};

WeightTransferReport check_weight_transfer(const MixedPolynomial& f, int trials, std::uint64_t seed);

}  // namespace mixres
