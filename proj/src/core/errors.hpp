#pragma once

#include <stdexcept>
#include <string>

namespace zeroacf {

// Error categories; the numeric values double as CLI exit codes and as
// C-API status codes.
enum class ErrorCode : int {
    validation = 2,
    io = 3,
    degenerate = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_validation(const std::string& what) {
    throw Error(ErrorCode::validation, what);
}

[[noreturn]] inline void throw_io(const std::string& what) {
    throw Error(ErrorCode::io, what);
}

[[noreturn]] inline void throw_degenerate(const std::string& what) {
    throw Error(ErrorCode::degenerate, what);
}

} // namespace zeroacf
