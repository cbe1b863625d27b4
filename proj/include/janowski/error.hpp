#pragma once

#include <stdexcept>
#include <string>

namespace janowski {

enum class ErrorCode {
    InvalidParams,    ///< (A, B) outside -1 <= B < A <= 1
    NoBracket,        ///< sign scan found no sign change
    MultipleBrackets, ///< sign scan found more than one sign change
    Domain,           ///< argument outside an operation's domain
};

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace janowski
