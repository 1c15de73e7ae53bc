#pragma once

#include <stdexcept>
#include <string>

namespace ucc {

enum class ErrorCode {
    // ingestion / validation
    EmptyDataset,
    NonFiniteValue,
    NegativeBand,
    LengthMismatch,
    BoundOrderViolation,
    ParseError,
    MissingColumn,
    FileNotFound,
    // computation
    ZeroVariance,
    AsymmetricBands,
    InvalidAxes,
    AllScalesInfinite,
    InfiniteScalesPresent,
    InvalidRange,
    MismatchedBase,
    ZeroReferenceArea,
    TargetUnreachable,
};

/// Did the failure happen while reading/validating input, or while computing on
/// data that was already accepted?  The CLI maps these to distinct exit codes.
enum class ErrorClass { ingestion, computation };

ErrorClass classify(ErrorCode code);
const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, long index = -1)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    ErrorCode code() const noexcept { return code_; }

    /// Record index or line number the error refers to, -1 when not applicable.
    long index() const noexcept { return index_; }

private:
    ErrorCode code_;
    long index_;
};

}  // namespace ucc
