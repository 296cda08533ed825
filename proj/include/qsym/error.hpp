#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

enum class ErrorCode {
    parse,
    out_of_range,
    degenerate,
    arity_mismatch,
    invalid_argument,
};

/// Exception type thrown by every qsym operation; the code maps onto the
/// C API status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_out_of_range(const std::string& detail)
{
    throw Error(ErrorCode::out_of_range, "index out of range: " + detail);
}

}  // namespace qsym
