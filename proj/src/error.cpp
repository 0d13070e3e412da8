#include "logsark/error.hpp"

namespace logsark {

std::string_view error_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::DuplicateCurve: return "DuplicateCurve";
    case ErrorKind::MissingNode: return "MissingNode";
    case ErrorKind::ReusedPointLabel: return "ReusedPointLabel";
    case ErrorKind::NotMinusOne: return "NotMinusOne";
    case ErrorKind::TooManyNeighbors: return "TooManyNeighbors";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::EmptyScript: return "EmptyScript";
    case ErrorKind::NoPositiveDiscrepancy: return "NoPositiveDiscrepancy";
    case ErrorKind::NonNegativeKplusB: return "NonNegativeKplusB";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::NonContractibleResidue: return "NonContractibleResidue";
    case ErrorKind::MultipleSingularities: return "MultipleSingularities";
    case ErrorKind::ReducibleBoundary: return "ReducibleBoundary";
    case ErrorKind::InconsistentHistory: return "InconsistentHistory";
    case ErrorKind::InvalidResolution: return "InvalidResolution";
    case ErrorKind::ExtremalityFailure: return "ExtremalityFailure";
    case ErrorKind::PairMismatch: return "PairMismatch";
    case ErrorKind::SpecialPosition: return "SpecialPosition";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

int exit_status(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::UnknownReference:
    case ErrorKind::UnknownCommand:
        return 3;
    case ErrorKind::SingularSystem:
    case ErrorKind::InternalInvariant:
        return 4;
    default:
        return 2;
    }
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail)
{
}

} // namespace logsark
