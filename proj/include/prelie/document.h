#pragma once

#include "prelie/algebra.h"
#include "prelie/catalog.h"

#include <string>
#include <string_view>

namespace prelie {

inline constexpr int schema_version = 1;

/// JSON algebra file:
///   {"schema_version": 1, "dim": n, "kind": "algebra" | "lie",
///    "products": [{"i": 1, "j": 2, "out": [[k, "coeff"], ...]}, ...],
///    "params": {"name": "scalar", ...}}
/// Indices are 1-based, omitted products are zero, unknown fields are errors.
struct AlgebraDocument
{
	FixtureKind kind = FixtureKind::algebra;
	Algebra algebra{1};
	ParamMap params;
};

// Throws DocumentError with a JSON path (or byte offset) on malformed input;
// "lie" documents are also run through validate_lie.
AlgebraDocument parse_document(std::string_view text);

std::string serialize_document(AlgebraDocument const &doc);

} // namespace prelie
