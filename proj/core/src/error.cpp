#include "subext/error.hpp"

namespace subext {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::BadSemigroup:
        return "BadSemigroup";
    case ErrorCode::NotMPrimary:
        return "NotMPrimary";
    case ErrorCode::FieldTooLarge:
        return "FieldTooLarge";
    case ErrorCode::UnknownScenario:
        return "UnknownScenario";
    case ErrorCode::InfiniteLength:
        return "InfiniteLength";
    case ErrorCode::ResourceBudget:
        return "ResourceBudget";
    case ErrorCode::StabilizationBudget:
        return "StabilizationBudget";
    case ErrorCode::NoReductionFound:
        return "NoReductionFound";
    case ErrorCode::NotUlrich:
        return "NotUlrich";
    case ErrorCode::NotCM:
        return "NotCM";
    case ErrorCode::WrongFamily:
        return "WrongFamily";
    case ErrorCode::Regular:
        return "Regular";
    case ErrorCode::NoNZD:
        return "NoNZD";
    case ErrorCode::LiftFailure:
        return "LiftFailure";
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::Internal:
        return "Internal";
    }
    return "Unknown";
}

} // namespace subext
