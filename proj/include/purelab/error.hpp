#pragma once

#include <stdexcept>
#include <string>

namespace purelab {

enum class ErrorKind {
    OutOfRange,
    NonAdjacent,
    NotReduced,
    IllegalMove,
    NotAComplementationSet,
    NotInvertible,
    NotPure,
    NotASplit,
    RootIsolated,
    BudgetExceeded,
    NotADecomposition,
    DegreeTooSmall,
    LoopObstruction,
    NotEulerian,
    NotTwoFactored,
    NotDoubleOccurrence,
    NotAlternating,
    NotAnticlique,
    NotADouble,
    NotFourRegular,
    NotConnected,
    DegreeNotFour,
    NoPerfectMatchingFound,
    Format,
    InvalidParams,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace purelab
