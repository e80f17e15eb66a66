#pragma once

#include <string>
#include <string_view>

#include "sqcx/scheme.hpp"

namespace sqcx {

/// Serializes a scheme to the JSON document format. Rational entries are
/// emitted as strings ("p/q", or "p" when the denominator is 1), never
/// as binary floats. Deterministic: same scheme, same bytes.
std::string scheme_to_json(const Scheme& s);

/// Parses a JSON scheme document. Throws ParseError with the offending
/// location (e.g. "stages[1].ops[0].c") on malformed input, unknown
/// stage/op kinds, or non-rational entry strings.
Scheme scheme_from_json(std::string_view text);

} // namespace sqcx
