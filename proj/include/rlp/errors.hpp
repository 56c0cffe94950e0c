#ifndef RLP_ERRORS_HPP
#define RLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rlp {

/** Base class for all errors thrown by this library. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionTooHigh : Error {
    explicit DimensionTooHigh(const std::string& msg) : Error(msg) {}
};

struct Degenerate : Error {
    explicit Degenerate(const std::string& msg) : Error(msg) {}
};

// Horn evaluation hit a zero linear form raised to a nonzero power.
struct ZeroBase : Error {
    explicit ZeroBase(const std::string& msg) : Error(msg) {}
};

struct DegenerateClass : Error {
    explicit DegenerateClass(const std::string& msg) : Error(msg) {}
};

struct MixedSignRow : Error {
    explicit MixedSignRow(const std::string& msg) : Error(msg) {}
};

struct StageReuseOnPath : Error {
    explicit StageReuseOnPath(const std::string& msg) : Error(msg) {}
};

struct NonBijectiveLabelling : Error {
    explicit NonBijectiveLabelling(const std::string& msg) : Error(msg) {}
};

struct EmptyStage : Error {
    explicit EmptyStage(const std::string& msg) : Error(msg) {}
};

struct EmptyStageData : Error {
    explicit EmptyStageData(const std::string& msg) : Error(msg) {}
};

struct UnsupportedSize : Error {
    explicit UnsupportedSize(const std::string& msg) : Error(msg) {}
};

struct TooManyParams : Error {
    explicit TooManyParams(const std::string& msg) : Error(msg) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

struct NotToric : Error {
    explicit NotToric(const std::string& msg) : Error(msg) {}
};

struct StarRequired : Error {
    explicit StarRequired(const std::string& msg) : Error(msg) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& msg) : Error(msg) {}
};

struct InvalidVariant : Error {
    explicit InvalidVariant(const std::string& msg) : Error(msg) {}
};

struct UnclassifiedParams : Error {
    explicit UnclassifiedParams(const std::string& msg) : Error(msg) {}
};

struct BoundaryPoint : Error {
    explicit BoundaryPoint(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace rlp

#endif  // RLP_ERRORS_HPP
