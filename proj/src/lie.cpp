#include "prelie/lie.h"

#include "prelie/identities.h"

namespace prelie {

LieAlgebra validate_lie(Algebra const &a)
{
	std::size_t const n = a.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!(a(i, j, k) == -a(j, i, k)))
					throw ValidationError(ValidationError::Kind::skew, {i, j, k},
					                      "c" + format_triple({i, j, k}) + " = " + format_scalar(a(i, j, k)) +
					                          " but c" + format_triple({j, i, k}) + " = " +
					                          format_scalar(a(j, i, k)));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t m = 0; m < n; ++m)
			{
				Vector jac = jacobinator(a, {i, j, m});
				if (is_zero(jac))
					continue;
				std::string detail = "Jacobinator is (";
				for (std::size_t k = 0; k < n; ++k)
					detail += (k ? ", " : "") + format_scalar(jac[k]);
				throw ValidationError(ValidationError::Kind::jacobi, {i, j, m}, detail + ")");
			}
	return LieAlgebra(a);
}

namespace {

// span of [u, v] for u, v running over the given spanning sets
std::vector<Vector> bracket_span(Algebra const &c, std::vector<Vector> const &u, std::vector<Vector> const &v)
{
	std::vector<Vector> rows;
	for (auto const &x : u)
		for (auto const &y : v)
		{
			Vector b = product(c, x, y);
			if (!is_zero(b))
				rows.push_back(std::move(b));
		}
	return row_space_basis(std::move(rows));
}

} // namespace

DerivedSeries derived_series(LieAlgebra const &l)
{
	std::size_t const n = l.dim();
	std::vector<Vector> cur;
	for (std::size_t i = 0; i < n; ++i)
		cur.push_back(basis_vector(n, i));

	DerivedSeries s;
	s.dims.push_back(n);
	while (!cur.empty())
	{
		auto next = bracket_span(l.base(), cur, cur);
		if (next.size() == cur.size())
			break;
		cur = std::move(next);
		s.dims.push_back(cur.size());
	}
	s.solvable = cur.empty();
	return s;
}

KillingAnalysis killing_semisimple(LieAlgebra const &l)
{
	std::size_t const n = l.dim();
	std::vector<OperatorMatrix> ad;
	for (std::size_t a = 0; a < n; ++a)
		ad.push_back(mult_operator(l.base(), basis_vector(n, a), OperatorKind::left));

	KillingAnalysis k;
	k.form = OperatorMatrix(n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			k.form(a, b) = (ad[a] * ad[b]).trace();
	k.rank = rank(k.form);
	k.semisimple = k.rank == n;
	return k;
}

StructureAnalysis analyze(LieAlgebra const &l) { return {derived_series(l), killing_semisimple(l)}; }

} // namespace prelie
