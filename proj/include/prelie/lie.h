#pragma once

#include "prelie/algebra.h"
#include "prelie/error.h"

#include <vector>

namespace prelie {

/// Bracket algebra known to be skew and to satisfy Jacobi; obtain one via
/// validate_lie.
class LieAlgebra
{
  public:
	Algebra const &base() const noexcept { return c_; }
	std::size_t dim() const noexcept { return c_.dim(); }
	Scalar const &operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

	friend bool operator==(LieAlgebra const &, LieAlgebra const &) = default;

  private:
	explicit LieAlgebra(Algebra c) : c_(std::move(c)) {}
	friend LieAlgebra validate_lie(Algebra const &a);

	Algebra c_;
};

// Throws ValidationError (skew or jacobi) at the lexicographically first bad triple.
LieAlgebra validate_lie(Algebra const &a);

struct DerivedSeries
{
	std::vector<std::size_t> dims; // dim g⁽⁰⁾, dim g⁽¹⁾, ... up to the stable term
	bool solvable = false;
};

struct KillingAnalysis
{
	OperatorMatrix form; // κ(e_a, e_b)
	std::size_t rank = 0;
	bool semisimple = false;
};

struct StructureAnalysis
{
	DerivedSeries series;
	KillingAnalysis killing;
};

DerivedSeries derived_series(LieAlgebra const &l);
KillingAnalysis killing_semisimple(LieAlgebra const &l);
StructureAnalysis analyze(LieAlgebra const &l);

} // namespace prelie
