#pragma once

#include "prelie/algebra.h"
#include "prelie/lie.h"

#include <random>

namespace prelie {

using Rng = std::mt19937_64;

// re, im = p/q with |p| ≤ max_num, 1 ≤ q ≤ max_den; im is zero about half the time
Scalar random_scalar(Rng &rng, int max_num = 4, int max_den = 3);

OperatorMatrix random_invertible(Rng &rng, std::size_t n);

enum class RandomKind
{
	dense,
	sparse,
	basis_change, // random basis change of a dim-3 catalog algebra
	prestructure  // random pre-algebraic structure on a catalog Lie algebra
};

Algebra random_algebra(Rng &rng, std::size_t dim, RandomKind kind);

// Uniform mix of the four kinds with dim drawn from 1..max_dim.
Algebra random_algebra(Rng &rng, std::size_t max_dim);

Algebra random_commutative(Rng &rng, std::size_t max_dim);

// Random d with d(i,j,k) − d(j,i,k) = c(i,j,k).
Algebra random_prestructure(Rng &rng, LieAlgebra const &l);

} // namespace prelie
