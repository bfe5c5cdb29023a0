#include "hrg/error.hpp"

namespace hrg {

const char* err_name(Err e) {
    switch (e) {
    case Err::Parse: return "Parse";
    case Err::UnknownVertex: return "UnknownVertex";
    case Err::UnknownEdge: return "UnknownEdge";
    case Err::NonComposable: return "NonComposable";
    case Err::DegreeOutOfRange: return "DegreeOutOfRange";
    case Err::SkeletonMismatch: return "SkeletonMismatch";
    case Err::RangeMismatch: return "RangeMismatch";
    case Err::InvalidSkeleton: return "InvalidSkeleton";
    case Err::InvalidAction: return "InvalidAction";
    case Err::NonSingletonDegree: return "NonSingletonDegree";
    case Err::BadCocycle: return "BadCocycle";
    case Err::NoSources: return "NoSources";
    case Err::NoSinks: return "NoSinks";
    case Err::RankUnsupported: return "RankUnsupported";
    case Err::Inapplicable: return "Inapplicable";
    case Err::BadParameter: return "BadParameter";
    case Err::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace hrg
