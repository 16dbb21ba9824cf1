#pragma once

#include <string>

#include <json.hpp>

#include "infalg/algebra.hpp"
#include "infalg/duality.hpp"

namespace infalg {

using Json = nlohmann::ordered_json;

/// Algebra document:
///   {"n": int, "join": [[int]] | "leq": [[bool]], "unit": int, "zero": int,
///    "extractors": {label: [int]}, "meet": [[int]]?, "labels": [string]?}
/// Shape problems throw FormatError; law violations (including two labels
/// carrying the same map) throw StructureError.
InfoAlgebra parse_algebra(const Json& doc);
Json algebra_to_json(const InfoAlgebra& a);

/// Space document:
///   {"n": int, "leq": [[bool]], "equivalences": {label: [block id]},
///    "points": [int]?}
/// "points" is informational (the elements a dual came from) and ignored.
QSpace parse_qspace(const Json& doc);
Json qspace_to_json(const QSpace& s);
Json dual_to_json(const Dual& d);

/// Map document: {"f": [int], "g": {label of a: label of b}}.
AlgebraMorphism parse_morphism(const Json& doc, const InfoAlgebra& a, const InfoAlgebra& b);
Json morphism_to_json(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b);

/// Parses text; syntax errors throw FormatError.
Json parse_json(const std::string& text);
/// Reads and parses a file; unreadable files throw FormatError.
Json read_json_file(const std::string& path);

/// Deterministic layout: objects one member per line, arrays of scalars on
/// one line, nested arrays one row per line. Ends with a newline.
std::string print_json(const Json& doc);

}  // namespace infalg
