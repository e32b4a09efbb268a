#pragma once

#include <string>
#include <string_view>

namespace bartree {

/// Shortest decimal representation that parses back to the same binary value.
/// Used for all numeric file output so re-runs are byte-identical.
std::string format_double(double value);

/// Parses a full string as a double; rejects trailing garbage and empty input.
double parse_double(std::string_view text);

}  // namespace bartree
