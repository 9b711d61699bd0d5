#include "mixres/face_analysis.hpp"

#include <random>

#include "mixres/errors.hpp"
#include "mixres/fan.hpp"

namespace mixres {

MixedPolynomial face_function(const MixedPolynomial& f, const WeightVector& P) {
    if (!P.strictly_positive()) throw NonCompactFace();
    Face fc = face(f, P);
    std::vector<MixedTerm> terms;
    for (const auto& s : fc.points)
        for (int t : s.term_indices) terms.push_back(f.terms()[t]);
    return MixedPolynomial(f.n(), std::move(terms));
}

FaceDegreeRecord degrees(const MixedPolynomial& f, const WeightVector& P) {
    if (!P.strictly_positive()) throw NonCompactFace();
    Face fc = face(f, P);
    FaceDegreeRecord rec{P};
    rec.rdeg = fc.d;
    for (const auto& s : fc.points) {
        rec.face_points.push_back(s.point);
        for (int t : s.term_indices) {
            const auto& e = f.terms()[t].exps;
            std::vector<int> diff(f.n());
            for (int i = 0; i < f.n(); ++i) diff[i] = e.nu[i] - e.mu[i];
            long long polar = 0;
            for (int i = 0; i < f.n(); ++i) polar += P[i] * diff[i];
            rec.terms.push_back({t, rec.rdeg, polar});
        }
    }
    bool common = true;
    for (const auto& t : rec.terms)
        if (t.polar != rec.terms.front().polar) common = false;
    if (common && !rec.terms.empty()) {
        rec.pdeg = rec.terms.front().polar;
        rec.strongly_mixed = true;
        if ((rec.rdeg + *rec.pdeg) % 2 != 0 || (rec.rdeg - *rec.pdeg) % 2 != 0)
            throw NonIntegerHalfDegrees();
        rec.polar_sign = (*rec.pdeg > 0)   ? PolarSign::positive
                         : (*rec.pdeg < 0) ? PolarSign::negative
                                           : PolarSign::zero;
    } else {
        rec.strongly_mixed = false;
        rec.polar_sign = PolarSign::mixed;
    }
    return rec;
}

FaceTypeVerdict classify_face_type(const MixedPolynomial& f) {
    if (f.n() != 2) throw UnsupportedDimension("classify_face_type");
    DualDiagram2D dd = dual_diagram(f);

    // Candidate weights in slope order: for each sector between consecutive
    // rays the canonical refinement chain (or the sector mediant when the
    // wedge is already unimodular), and each edge normal ray itself.
    std::vector<WeightVector> candidates;
    for (std::size_t i = 0; i + 1 < dd.rays.size(); ++i) {
        auto chain = unimodular_chain(dd.rays[i], dd.rays[i + 1]);
        if (chain.empty())
            chain.emplace_back(std::vector<long long>{dd.rays[i][0] + dd.rays[i + 1][0],
                                                      dd.rays[i][1] + dd.rays[i + 1][1]});
        for (const auto& w : chain) candidates.push_back(w);
        if (i + 2 < dd.rays.size()) candidates.push_back(dd.rays[i + 1]);
    }

    FaceTypeVerdict verdict;
    bool all_positive = true;
    for (const auto& w : candidates) {
        FaceDegreeRecord rec = degrees(f, w);
        bool bad = !rec.strongly_mixed || *rec.pdeg < 0;
        if (rec.strongly_mixed && *rec.pdeg == 0) all_positive = false;
        verdict.table.push_back(rec);
        if (bad && !verdict.offending_face) verdict.offending_face = rec;
    }
    if (verdict.offending_face)
        verdict.type = FaceType::NotOfType;
    else
        verdict.type = all_positive ? FaceType::StronglyPolarPositive
                                    : FaceType::StronglyPolarNonNegative;
    return verdict;
}

WeightTransferReport check_weight_transfer(const MixedPolynomial& f, int trials, std::uint64_t seed) {
    FaceTypeVerdict verdict = classify_face_type(f);
    if (verdict.type == FaceType::NotOfType)
        throw PreconditionNotVerified(
            "weight transfer requires a strongly polar non-negative face type verdict");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> entry(1, 50);
    WeightTransferReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        WeightVector P({entry(rng), entry(rng)});
        FaceDegreeRecord rec = degrees(f, P);
        if (!rec.strongly_mixed || *rec.pdeg < 0) {
            ++report.failures;
            report.failed_weights.push_back(P);
        }
    }
    return report;
}

}  // namespace mixres
