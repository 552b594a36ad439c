#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prelie {

struct CheckResult
{
	std::string group; // e.g. "ex5.1", "prop2.2", "thm5.1"
	std::string check;
	bool passed = false;
	std::string detail; // witness or measured value
};

struct RegressionOptions
{
	std::string only;           // empty runs every group
	unsigned trials = 100;      // per Lie algebra in thm5.1
	unsigned sweep = 500;       // randomized algebras per property group
	std::uint64_t seed = 0;
};

std::vector<std::string> const &regression_groups();

// Throws LookupError for an unknown `only` group.
std::vector<CheckResult> run_regression(RegressionOptions const &opts);

} // namespace prelie
