#pragma once

#include <stdexcept>
#include <string>

namespace mixres {

// Base for all failures raised by the toolkit. `concept_name` identifies the
// violated definition or precondition in a form suitable for CLI messages.
class Error : public std::runtime_error {
public:
    Error(std::string concept_name, const std::string& message)
        : std::runtime_error(message), concept_(std::move(concept_name)) {}
    const std::string& concept_name() const { return concept_; }

private:
    std::string concept_;
};

// Input text does not conform to the expression grammar.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : Error("expression grammar",
                "syntax error at position " + std::to_string(position) +
                    ": expected " + expected),
          position_(position), expected_(expected) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// Variable index outside 1..n.
class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(int index, int n)
        : Error("variable index",
                "variable index " + std::to_string(index) +
                    " outside 1.." + std::to_string(n)) {}
};

struct EmptyPolynomial : Error {
    EmptyPolynomial() : Error("nonzero polynomial", "operation requires a nonzero polynomial") {}
};

struct NotAGerm : Error {
    NotAGerm() : Error("germ at the origin", "polynomial has a constant term, so it does not vanish at 0") {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& what_op)
        : Error("two-variable restriction", what_op + " is only implemented for n = 2") {}
};

struct NotConvenient : Error {
    explicit NotConvenient(int missing_axis)
        : Error("convenient germ",
                "not convenient: no term supported on axis " + std::to_string(missing_axis) + " alone") {}
};

struct NonCompactFace : Error {
    NonCompactFace() : Error("compact face", "face function requires a strictly positive weight (compact face)") {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("nonzero lattice vector", "zero vector is not a valid cone vertex or weight") {}
};

struct NegativeEntry : Error {
    NegativeEntry() : Error("nonnegative lattice vector", "cone vertices and weights must have nonnegative entries") {}
};

struct DependentVertices : Error {
    DependentVertices() : Error("simplicial cone", "cone vertices are linearly dependent") {}
};

struct NotRegular : Error {
    NotRegular() : Error("regular simplicial cone", "cone vertices do not extend to a basis of the lattice") {}
};

struct NotFullDimensional : Error {
    NotFullDimensional() : Error("full-dimensional cone", "chart requires an n-dimensional cone") {}
};

struct NonStrictVertex : Error {
    explicit NonStrictVertex(int j)
        : Error("strictly positive vertex",
                "cone vertex " + std::to_string(j) + " is not strictly positive") {}
};

struct NotStronglyMixedHomogeneous : Error {
    explicit NotStronglyMixedHomogeneous(int j)
        : Error("strongly mixed weighted homogeneous face function",
                "face function of cone vertex " + std::to_string(j) +
                    " has no common polar degree"),
          vertex_index(j) {}
    int vertex_index;
};

struct NonIntegerHalfDegrees : Error {
    NonIntegerHalfDegrees()
        : Error("even radial/polar degree split",
                "(rdeg + pdeg)/2 and (rdeg - pdeg)/2 must be integers") {}
};

struct EmptyFaceIntersection : Error {
    EmptyFaceIntersection()
        : Error("admissible cone", "face intersection over the cone vertices is empty") {}
};

struct NotASingleMonomialVertex : Error {
    NotASingleMonomialVertex()
        : Error("single-monomial vertex face",
                "weight does not support a vertex face carried by exactly one term") {}
};

struct PreconditionNotVerified : Error {
    explicit PreconditionNotVerified(const std::string& message)
        : Error("verified precondition", message) {}
};

// Evaluation request outside the domain (e.g. a derivative at 0).
struct DomainError : Error {
    explicit DomainError(const std::string& message) : Error("function domain", message) {}
};

}  // namespace mixres
