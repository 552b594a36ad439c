#include "prelie/sweeps.h"

#include "prelie/catalog.h"
#include "prelie/solver.h"

#include <array>
#include <string_view>

namespace prelie {

namespace {

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng &rng, int max_num, int max_den)
{
	return make_rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

Scalar small_scalar(Rng &rng)
{
	static std::array<Scalar, 7> const pool = {Scalar(1),  Scalar(-1), Scalar(make_rational(1, 2)),
	                                           Scalar(2),  Scalar::i(), -Scalar::i(),
	                                           Scalar(make_rational(1, 2), make_rational(1, 2))};
	return pool[static_cast<std::size_t>(uniform(rng, 0, pool.size() - 1))];
}

LieAlgebra random_lie(Rng &rng, std::size_t dim)
{
	if (dim == 3)
	{
		static std::array<std::string_view, 7> const names = {"sl2c",          "su2",          "ex2.1-bracket",
		                                                      "ex2.2-bracket", "ex2.2-extended", "e1e2-e1",
		                                                      "abelian3"};
		return catalog_lie(names[static_cast<std::size_t>(uniform(rng, 0, names.size() - 1))]);
	}
	// any bracket supported on span{e1,e2} with the rest central is Lie
	Algebra c(dim);
	if (dim >= 2)
	{
		Scalar a = random_scalar(rng), b = random_scalar(rng);
		c.set(0, 1, 0, a);
		c.set(1, 0, 0, -a);
		c.set(0, 1, 1, b);
		c.set(1, 0, 1, -b);
	}
	return validate_lie(c);
}

} // namespace

Scalar random_scalar(Rng &rng, int max_num, int max_den)
{
	Rational re = random_rational(rng, max_num, max_den);
	Rational im = uniform(rng, 0, 1) ? random_rational(rng, max_num, max_den) : Rational(0);
	return {re, im};
}

OperatorMatrix random_invertible(Rng &rng, std::size_t n)
{
	for (;;)
	{
		OperatorMatrix p(n);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				p(r, c) = random_scalar(rng, 2, 2);
		if (inverse(p))
			return p;
	}
}

Algebra random_algebra(Rng &rng, std::size_t dim, RandomKind kind)
{
	switch (kind)
	{
	case RandomKind::dense: {
		Algebra a(dim);
		for (std::size_t i = 0; i < dim; ++i)
			for (std::size_t j = 0; j < dim; ++j)
				for (std::size_t k = 0; k < dim; ++k)
					a.set(i, j, k, random_scalar(rng));
		return a;
	}
	case RandomKind::sparse: {
		Algebra a(dim);
		for (std::size_t i = 0; i < dim; ++i)
			for (std::size_t j = 0; j < dim; ++j)
				for (std::size_t k = 0; k < dim; ++k)
					if (uniform(rng, 0, 3) == 0)
						a.set(i, j, k, small_scalar(rng));
		return a;
	}
	case RandomKind::basis_change: {
		if (dim != 3)
			return random_algebra(rng, dim, RandomKind::sparse);
		static std::array<std::string_view, 7> const names = {"sl2c-afa",         "su2-afa",       "cross-product",
		                                                      "dihedral-quandle", "s3-alpha-beta", "ex2.1-afa",
		                                                      "ex2.2-afa"};
		Algebra base = catalog(names[static_cast<std::size_t>(uniform(rng, 0, names.size() - 1))]);
		return change_basis(base, random_invertible(rng, dim));
	}
	case RandomKind::prestructure:
		return random_prestructure(rng, random_lie(rng, dim));
	}
	return Algebra(dim);
}

Algebra random_algebra(Rng &rng, std::size_t max_dim)
{
	auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_dim)));
	auto kind = static_cast<RandomKind>(uniform(rng, 0, 3));
	return random_algebra(rng, dim, kind);
}

Algebra random_commutative(Rng &rng, std::size_t max_dim)
{
	auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_dim)));
	Algebra a(dim);
	if (uniform(rng, 0, 3) == 0)
	{
		// commutative and associative: orthogonal idempotents in a random basis
		for (std::size_t i = 0; i < dim; ++i)
			a.set(i, i, i, 1);
		return change_basis(a, random_invertible(rng, dim));
	}
	bool sparse = uniform(rng, 0, 1) == 0;
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = i; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
			{
				if (sparse && uniform(rng, 0, 2) != 0)
					continue;
				Scalar v = sparse ? small_scalar(rng) : random_scalar(rng);
				a.set(i, j, k, v);
				a.set(j, i, k, v);
			}
	return a;
}

Algebra random_prestructure(Rng &rng, LieAlgebra const &l)
{
	AnsatzSupport s = build_ansatz(l, SupportPolicy::full);
	std::vector<Scalar> values;
	for (std::size_t v = 0; v < s.free_vars.size(); ++v)
		values.push_back(uniform(rng, 0, 2) == 0 ? Scalar() : random_scalar(rng));
	return s.assemble(values);
}

} // namespace prelie
