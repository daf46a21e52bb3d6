#pragma once

#include <stdexcept>
#include <string>

namespace i1 {

// Base of all domain errors thrown by the kernel. kind() is the stable
// machine-readable name surfaced by the CLI as {"error": kind, ...}.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& detail) : Error("NotAUnit", detail) {}
};

struct ZeroScalar : Error {
    explicit ZeroScalar(const std::string& detail) : Error("ZeroScalar", detail) {}
};

struct ElementOfF : Error {
    explicit ElementOfF(const std::string& detail) : Error("ElementOfF", detail) {}
};

struct ZeroOperator : Error {
    explicit ZeroOperator(const std::string& detail) : Error("ZeroOperator", detail) {}
};

struct NotStabilized : Error {
    explicit NotStabilized(const std::string& detail) : Error("NotStabilized", detail) {}
};

struct InvalidComponent : Error {
    explicit InvalidComponent(const std::string& detail) : Error("InvalidComponent", detail) {}
};

struct NotOnePlusF : Error {
    explicit NotOnePlusF(const std::string& detail) : Error("NotOnePlusF", detail) {}
};

// One of the four defining relations failed under substitution.
struct RelationViolated : Error {
    RelationViolated(std::string which_relation, std::string residual_json)
        : Error("RelationViolated",
                "relation " + which_relation + " violated, residual " + residual_json),
          which(std::move(which_relation)), residual(std::move(residual_json)) {}
    std::string which;
    std::string residual;  // canonical JSON of the nonzero residual
};

// A validated endomorphism contradicted a step the decomposition theorem
// guarantees; reaching this means the kernel itself is broken.
struct TheoremViolation : Error {
    TheoremViolation(std::string at_step, const std::string& detail)
        : Error("TheoremViolation", "step " + at_step + ": " + detail), step(std::move(at_step)) {}
    std::string step;
};

struct ReconstructionMismatch : Error {
    explicit ReconstructionMismatch(const std::string& detail)
        : Error("ReconstructionMismatch", detail) {}
};

struct SyntaxError : Error {
    SyntaxError(std::size_t at, const std::string& detail)
        : Error("SyntaxError", detail + " (at position " + std::to_string(at) + ")"),
          position(at) {}
    std::size_t position;
};

struct DialectError : Error {
    explicit DialectError(const std::string& detail) : Error("DialectError", detail) {}
};

}  // namespace i1
