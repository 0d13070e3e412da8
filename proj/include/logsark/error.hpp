#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logsark {

enum class ErrorKind {
    UnknownCurve,
    DuplicateCurve,
    MissingNode,
    ReusedPointLabel,
    NotMinusOne,
    TooManyNeighbors,
    NotATree,
    InvalidChain,
    InvalidType,
    SingularSystem,
    NotNegativeDefinite,
    EmptyScript,
    NoPositiveDiscrepancy,
    NonNegativeKplusB,
    InvalidPair,
    NonContractibleResidue,
    MultipleSingularities,
    ReducibleBoundary,
    InconsistentHistory,
    InvalidResolution,
    ExtremalityFailure,
    PairMismatch,
    SpecialPosition,
    ParseError,
    SchemaError,
    UnknownReference,
    UnknownCommand,
    InternalInvariant,
};

std::string_view error_name(ErrorKind kind);

/// Process exit status for a failure of this kind: 3 for input that could not
/// be read, 4 for broken internal invariants, 2 for everything else.
int exit_status(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace logsark
