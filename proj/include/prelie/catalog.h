#pragma once

#include "prelie/algebra.h"
#include "prelie/lie.h"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

using ParamMap = std::map<std::string, Scalar, std::less<>>;

enum class FixtureKind
{
	algebra,
	lie
};

struct CatalogEntry
{
	std::string name;
	FixtureKind kind;
	std::string summary;
	ParamMap defaults; // every accepted parameter, with its default
};

std::vector<CatalogEntry> const &catalog_entries();
CatalogEntry const &catalog_entry(std::string_view name); // LookupError lists available names

// Missing parameters take their defaults; unknown ones raise LookupError.
Algebra catalog(std::string_view name, ParamMap const &params = {});
LieAlgebra catalog_lie(std::string_view name, ParamMap const &params = {});

} // namespace prelie
