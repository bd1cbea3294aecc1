#include "mcthresh/error.hpp"

namespace mcthresh {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NegativeComponent: return "NegativeComponent";
        case ErrorKind::SumNotOne: return "SumNotOne";
        case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::EmptyThresholdSet: return "EmptyThresholdSet";
        case ErrorKind::EmptyCloud: return "EmptyCloud";
        case ErrorKind::DegenerateClass: return "DegenerateClass";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::MalformedHeader: return "MalformedHeader";
        case ErrorKind::RowValidation: return "RowValidation";
        case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace mcthresh
