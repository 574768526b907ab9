#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evmvec {

// Locale-independent decimal formatting with 17 significant digits; exact
// round trip for IEEE doubles. All persisted numbers go through this.
std::string format_double(double v);

// Locale-independent parse; returns nullopt unless the whole token is a
// valid floating-point literal.
std::optional<double> parse_double(std::string_view token);

std::optional<long long> parse_int(std::string_view token);

std::string to_upper(std::string_view s);

std::string_view trim(std::string_view s);

// Split on any run of the given separators; no empty tokens.
std::vector<std::string_view> split_tokens(std::string_view s,
                                           std::string_view seps = " \t\r\n");

// Split on a single delimiter, keeping empty fields (CSV-style).
std::vector<std::string_view> split_fields(std::string_view s, char delim);

std::vector<std::string_view> split_lines(std::string_view s);

}  // namespace evmvec
