#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "vlrs/code.hpp"

namespace vlrs {

/// Parses the code-spec text format without running validation.
/// Throws ParseError with a line number on syntax errors.
Vlrs parse_code_spec_raw(std::string_view text);

/// Parses and validates; throws InvalidCodeError when validation fails.
Vlrs parse_code_spec(std::string_view text);

/// Canonical rendering; parse(render(v)) == v.
std::string render_code_spec(const Vlrs& code);

std::uint64_t fnv1a64(std::string_view data);

/// Hash binding containers to the code they were encoded with.
std::uint64_t code_spec_hash(const Vlrs& code);

}  // namespace vlrs
