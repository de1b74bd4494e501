#pragma once

#include <string>
#include <string_view>

#include "degset/eps.hpp"
#include "degset/fiber.hpp"

namespace degset {

/// JSON configuration documents. Top-level keys: residue_field,
/// components, points, metadata. See README for the schema.
///
/// Syntax errors, unknown keys and ill-typed values all throw ParseError,
/// whose issues() carry a JSON pointer (or byte offset) each. With
/// check = true the parsed config also goes through validate(), and any
/// violations are thrown as ValidationError.
SpecialFiberConfig parse_config(std::string_view text, bool check = true);

/// Pretty-printed document; parse_config(render_config(c)) == c.
std::string render_config(const SpecialFiberConfig& cfg);

/// "finite-field(q=3,g=0,counts=[4])"
std::string to_string(const ff::CurveCountData& d);
ff::CurveCountData parse_curve_counts(std::string_view text);

std::string to_string(const ResidueField& f);
ResidueField parse_residue_field(std::string_view text);

enum class ResultFormat { Text, Json };

/// Text: the eps serialization (with shorthands). Json: an object with
/// explicit, from, period and residues.
std::string render_result(const EPS& s, ResultFormat format = ResultFormat::Text);

}  // namespace degset
