#ifndef ODDBLOCK_ERRORS_HPP
#define ODDBLOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oddblock {

// Exit-code classes used by the CLI:
//   2 validation failure, 3 hypothesis failure, 4 inconclusive precision,
//   5 internal cross-check mismatch.
enum class ErrorClass { Validation = 2, Hypothesis = 3, Inconclusive = 4, Internal = 5 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), cls_(cls), kind_(std::move(kind)) {}
    ErrorClass error_class() const { return cls_; }
    const std::string& kind() const { return kind_; }

private:
    ErrorClass cls_;
    std::string kind_;
};

struct NotOddBlock : Error {
    explicit NotOddBlock(const std::string& m) : Error(ErrorClass::Validation, "NotOddBlock", m) {}
};
struct NoPhiExists : Error {
    explicit NoPhiExists(const std::string& m) : Error(ErrorClass::Validation, "NoPhiExists", m) {}
};
struct AmbiguousPhi : Error {
    explicit AmbiguousPhi(const std::string& m) : Error(ErrorClass::Validation, "AmbiguousPhi", m) {}
};
struct Singular : Error {
    explicit Singular(const std::string& m) : Error(ErrorClass::Validation, "Singular", m) {}
};
struct NotAperiodic : Error {
    explicit NotAperiodic(const std::string& m) : Error(ErrorClass::Validation, "NotAperiodic", m) {}
};
struct NoRealization : Error {
    explicit NoRealization(const std::string& m) : Error(ErrorClass::Validation, "NoRealization", m) {}
};
struct BadInput : Error {
    explicit BadInput(const std::string& m) : Error(ErrorClass::Validation, "BadInput", m) {}
};

struct BothSides : Error {
    explicit BothSides(const std::string& m) : Error(ErrorClass::Hypothesis, "BothSides", m) {}
};
struct AlignmentConflict : Error {
    explicit AlignmentConflict(const std::string& m) : Error(ErrorClass::Hypothesis, "AlignmentConflict", m) {}
};
struct AlignmentUnderdetermined : Error {
    explicit AlignmentUnderdetermined(const std::string& m)
        : Error(ErrorClass::Hypothesis, "AlignmentUnderdetermined", m) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& m) : Error(ErrorClass::Hypothesis, "HypothesisViolated", m) {}
};
struct TilingMismatch : Error {
    explicit TilingMismatch(const std::string& m) : Error(ErrorClass::Hypothesis, "TilingMismatch", m) {}
};

struct Inconclusive : Error {
    explicit Inconclusive(const std::string& m) : Error(ErrorClass::Inconclusive, "Inconclusive", m) {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& m) : Error(ErrorClass::Internal, "InexactDivision", m) {}
};
struct DegenerateResult : Error {
    explicit DegenerateResult(const std::string& m) : Error(ErrorClass::Internal, "DegenerateResult", m) {}
};
struct CrossCheckMismatch : Error {
    explicit CrossCheckMismatch(const std::string& m) : Error(ErrorClass::Internal, "CrossCheckMismatch", m) {}
};
struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& m) : Error(ErrorClass::Internal, "VerificationFailed", m) {}
};

} // namespace oddblock

#endif
