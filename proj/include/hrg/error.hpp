#ifndef HRG_ERROR_HPP
#define HRG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hrg {

enum class Err {
    Parse,
    UnknownVertex,
    UnknownEdge,
    NonComposable,
    DegreeOutOfRange,
    SkeletonMismatch,
    RangeMismatch,
    InvalidSkeleton,
    InvalidAction,
    NonSingletonDegree,
    BadCocycle,
    NoSources,
    NoSinks,
    RankUnsupported,
    Inapplicable,
    BadParameter,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

} // namespace hrg

#endif
