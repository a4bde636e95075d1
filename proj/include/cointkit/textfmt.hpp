#pragma once

#include <string>

// Locale-independent number formatting (std::to_chars based).
namespace cointkit::textfmt {

/// Shortest representation that round-trips through std::from_chars.
[[nodiscard]] std::string shortest(double value);

/// Fixed notation with `digits` decimals; "-0.00" is printed as "0.00".
[[nodiscard]] std::string fixed(double value, int digits);

/// Parses a whole cell (surrounding blanks allowed) as a double.
[[nodiscard]] bool parse_double(const std::string& text, double& out);

}  // namespace cointkit::textfmt
