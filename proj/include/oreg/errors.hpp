#pragma once

#include <stdexcept>
#include <string>

namespace oreg {

// Base class for every error raised by the library. The what() string is
// human-readable; `code()` is a stable machine-readable tag used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define OREG_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                        \
    public:                                                            \
        explicit NAME(const std::string& message)                      \
            : Error(#NAME, std::string(#NAME) + ": " + message) {}     \
    }

// Graph construction and queries.
OREG_DEFINE_ERROR(UndeclaredVertex);
OREG_DEFINE_ERROR(DuplicateVertex);
OREG_DEFINE_ERROR(NonPositiveWeight);
OREG_DEFINE_ERROR(SelfLoop);
OREG_DEFINE_ERROR(DuplicateEdge);
OREG_DEFINE_ERROR(UnknownEdge);

// Monomial ideals.
OREG_DEFINE_ERROR(ZeroIdeal);
OREG_DEFINE_ERROR(UnitIdeal);
OREG_DEFINE_ERROR(NotSquarefree);

// Homology oracle.
OREG_DEFINE_ERROR(TooLarge);
OREG_DEFINE_ERROR(NotAPartition);

// Regularity formulas.
OREG_DEFINE_ERROR(NonPositiveLength);
OREG_DEFINE_ERROR(LengthTooSmall);
OREG_DEFINE_ERROR(EmptyEdgeSet);
OREG_DEFINE_ERROR(OverlappingComponents);
OREG_DEFINE_ERROR(NotASinkPath);
OREG_DEFINE_ERROR(NoApplicableMethod);
OREG_DEFINE_ERROR(SearchBudgetExceeded);

// Family generators.
OREG_DEFINE_ERROR(LengthMismatch);
OREG_DEFINE_ERROR(BadParameters);
OREG_DEFINE_ERROR(DuplicateChord);
OREG_DEFINE_ERROR(BadCrossEdge);
OREG_DEFINE_ERROR(TooFewParts);
OREG_DEFINE_ERROR(InfeasibleSinkPlacement);

// File input.
OREG_DEFINE_ERROR(ParseError);

#undef OREG_DEFINE_ERROR

// A formula was asked to fire on an input that does not satisfy its
// hypotheses. `reason()` names the violated predicate.
class PreconditionFailed : public Error {
public:
    PreconditionFailed(std::string reason, const std::string& message)
        : Error("PreconditionFailed",
                "PreconditionFailed(" + reason + "): " + message),
          reason_(std::move(reason)) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

}  // namespace oreg
