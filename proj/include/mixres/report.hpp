// Aggregated analysis results and their canonical JSON serialization
// (schema "mixres/1").  Field order is fixed so equal inputs and seeds give
// byte-identical output.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixres/face_analysis.hpp"
#include "mixres/fan.hpp"
#include "mixres/mixed_poly.hpp"
#include "mixres/newton.hpp"
#include "mixres/toric.hpp"

namespace mixres {

struct ReportOptions {
    int samples = 256;
    std::uint64_t seed = 0;
    bool with_certificate = false;
};

struct AnalysisReport {
    std::string expression;
    int n = 2;
    ReportOptions options;
    MixedPolynomial f{0};
    ConvenienceReport convenience;
    std::vector<SupportPoint> support_points;
    std::optional<NewtonBoundary> boundary;
    std::optional<DualDiagram2D> diagram;
    std::optional<FaceTypeVerdict> verdict;
    std::optional<ConeSubdivision> subdivision;
    std::vector<ChartFactorization> pullbacks;  // filled on demand
    std::optional<SmoothnessCertificate> certificate;
};

// Full pipeline on a parsed expression.  Two variables get the boundary, the
// dual diagram, the face table, the canonical subdivision, and (on request)
// the certificate; other arities stop after support and convenience.
AnalysisReport analyze(const std::string& expression, int n, const ReportOptions& options);

// UTF-8 JSON with schema field "mixres/1".  Integers are exact; Gaussian
// rational coefficients appear as {"re":[num,den],"im":[num,den]}; weights
// and lattice points as integer arrays.
std::string emit_report_json(const AnalysisReport& report);

std::string to_string(ProbeStatus s);
std::string to_string(StarStatus s);
std::string to_string(FaceType t);
std::string to_string(PolarSign s);

}  // namespace mixres
