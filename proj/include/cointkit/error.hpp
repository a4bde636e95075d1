#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cointkit {

enum class ErrorKind {
    InvalidInput,
    Domain,
    InsufficientObservations,
    Singular,
    UnsupportedSample,
    Configuration,
    Schema,
    Continuity,
    Parse,
    Degenerate,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cointkit
