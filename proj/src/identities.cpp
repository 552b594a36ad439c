#include "prelie/identities.h"

#include <stdexcept>

namespace prelie {

// All identities here are trilinear in (x1,x2,x3), so checking them on basis
// triples decides them on the whole algebra.

std::string_view subgroup_tag(SubgroupId g)
{
	switch (g)
	{
	case SubgroupId::trivial:
		return "Trivial";
	case SubgroupId::t12:
		return "T12";
	case SubgroupId::t23:
		return "T23";
	case SubgroupId::t13:
		return "T13";
	case SubgroupId::a3:
		return "A3";
	case SubgroupId::s3:
		return "S3";
	}
	return "?";
}

std::string_view subgroup_class(SubgroupId g)
{
	switch (g)
	{
	case SubgroupId::trivial:
		return "associative";
	case SubgroupId::t12:
		return "LSA";
	case SubgroupId::t23:
		return "RSA";
	case SubgroupId::t13:
		return "AFA";
	case SubgroupId::a3:
		return "A3";
	case SubgroupId::s3:
		return "S3";
	}
	return "?";
}

Permutation Permutation::transposition(std::uint8_t a, std::uint8_t b)
{
	if (a > 2 || b > 2)
		throw std::out_of_range("transposition slot out of range");
	Permutation p;
	std::swap(p.image[a], p.image[b]);
	return p;
}

int Permutation::sign() const
{
	int inversions = 0;
	for (int a = 0; a < 3; ++a)
		for (int b = a + 1; b < 3; ++b)
			if (image[a] > image[b])
				++inversions;
	return inversions % 2 == 0 ? 1 : -1;
}

Triple Permutation::apply(Triple const &t) const { return {t[image[0]], t[image[1]], t[image[2]]}; }

Permutation operator*(Permutation const &s, Permutation const &t)
{
	Permutation r;
	for (int k = 0; k < 3; ++k)
		r.image[k] = s.image[t.image[k]];
	return r;
}

std::vector<Permutation> subgroup_elements(SubgroupId g)
{
	Permutation const id;
	Permutation const c1{{1, 2, 0}};
	Permutation const c2{{2, 0, 1}};
	switch (g)
	{
	case SubgroupId::trivial:
		return {id};
	case SubgroupId::t12:
		return {id, Permutation::transposition(0, 1)};
	case SubgroupId::t23:
		return {id, Permutation::transposition(1, 2)};
	case SubgroupId::t13:
		return {id, Permutation::transposition(0, 2)};
	case SubgroupId::a3:
		return {id, c1, c2};
	case SubgroupId::s3:
		return {id,
		        c1,
		        c2,
		        Permutation::transposition(0, 1),
		        Permutation::transposition(1, 2),
		        Permutation::transposition(0, 2)};
	}
	return {id};
}

AssociatorTable::AssociatorTable(Algebra const &a) : n_(a.dim())
{
	table_.reserve(n_ * n_ * n_);
	for (std::size_t i = 0; i < n_; ++i)
		for (std::size_t j = 0; j < n_; ++j)
			for (std::size_t m = 0; m < n_; ++m)
				table_.push_back(basis_associator(a, i, j, m));
}

namespace {

template <class F> void for_each_triple(std::size_t n, F &&f)
{
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t m = 0; m < n; ++m)
				if (!f(Triple{i, j, m}))
					return;
}

std::vector<OperatorMatrix> basis_operators(Algebra const &a, OperatorKind kind)
{
	std::vector<OperatorMatrix> out;
	for (std::size_t i = 0; i < a.dim(); ++i)
		out.push_back(mult_operator(a, basis_vector(a.dim(), i), kind));
	return out;
}

// Σ_k v_k ops[k]
OperatorMatrix combine(std::vector<OperatorMatrix> const &ops, std::span<Scalar const> v)
{
	OperatorMatrix out(ops.front().dim());
	for (std::size_t k = 0; k < v.size(); ++k)
	{
		if (v[k].is_zero())
			continue;
		for (std::size_t r = 0; r < out.dim(); ++r)
			for (std::size_t c = 0; c < out.dim(); ++c)
				out(r, c).add_product(v[k], ops[k](r, c));
	}
	return out;
}

} // namespace

IdentityCheck sigma_symmetric(AssociatorTable const &t, Permutation const &sigma)
{
	IdentityCheck res;
	for_each_triple(t.dim(), [&](Triple const &x) {
		auto const &lhs = t(x);
		auto const &rhs = t(sigma.apply(x));
		if (lhs == rhs)
			return true;
		res.holds = false;
		res.witness = Witness{x, lhs, rhs};
		return false;
	});
	return res;
}

IdentityCheck sigma_symmetric(Algebra const &a, Permutation const &sigma)
{
	return sigma_symmetric(AssociatorTable(a), sigma);
}

Vector subgroup_sum(AssociatorTable const &t, SubgroupId g, Triple const &x)
{
	Vector sum(t.dim());
	for (auto const &sigma : subgroup_elements(g))
	{
		auto const &v = t(sigma.apply(x));
		if (sigma.sign() > 0)
			for (std::size_t k = 0; k < sum.size(); ++k)
				sum[k] += v[k];
		else
			for (std::size_t k = 0; k < sum.size(); ++k)
				sum[k] -= v[k];
	}
	return sum;
}

IdentityCheck subgroup_defect(AssociatorTable const &t, SubgroupId g)
{
	IdentityCheck res;
	for_each_triple(t.dim(), [&](Triple const &x) {
		Vector sum = subgroup_sum(t, g, x);
		if (is_zero(sum))
			return true;
		res.holds = false;
		res.witness = Witness{x, std::move(sum), zero_vector(t.dim())};
		return false;
	});
	return res;
}

IdentityCheck subgroup_defect(Algebra const &a, SubgroupId g) { return subgroup_defect(AssociatorTable(a), g); }

Vector afa_defect(Algebra const &a, Triple const &t)
{
	for (auto idx : t)
		if (idx >= a.dim())
			throw ShapeError("triple index out of range");
	return basis_associator(a, t[0], t[1], t[2]) - basis_associator(a, t[2], t[1], t[0]);
}

bool is_commutative(Algebra const &a)
{
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = i + 1; j < a.dim(); ++j)
			for (std::size_t k = 0; k < a.dim(); ++k)
				if (!(a(i, j, k) == a(j, i, k)))
					return false;
	return true;
}

bool is_anticommutative(Algebra const &a)
{
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = i; j < a.dim(); ++j)
			for (std::size_t k = 0; k < a.dim(); ++k)
				if (!(a(i, j, k) == -a(j, i, k)))
					return false;
	return true;
}

ClassificationReport classify(Algebra const &a)
{
	AssociatorTable const table(a);
	ClassificationReport r;
	for (auto g : all_subgroups)
	{
		IdentityCheck c;
		switch (g)
		{
		case SubgroupId::t12:
			c = sigma_symmetric(table, Permutation::transposition(0, 1));
			break;
		case SubgroupId::t23:
			c = sigma_symmetric(table, Permutation::transposition(1, 2));
			break;
		case SubgroupId::t13:
			c = sigma_symmetric(table, Permutation::transposition(0, 2));
			break;
		default:
			c = subgroup_defect(table, g);
			break;
		}
		auto idx = static_cast<std::size_t>(g);
		r.flags[idx] = c.holds;
		r.witnesses[idx] = std::move(c.witness);
	}
	r.commutative = is_commutative(a);
	r.anticommutative = is_anticommutative(a);
	return r;
}

bool check_two_implies_third(Algebra const &a)
{
	auto r = classify(a);
	int held = r.flag(SubgroupId::t12) + r.flag(SubgroupId::t23) + r.flag(SubgroupId::t13);
	return held != 2;
}

OperatorEquivalence check_operator_equivalences(Algebra const &a)
{
	std::size_t const n = a.dim();
	OperatorEquivalence out;
	out.afa = sigma_symmetric(a, Permutation::transposition(0, 2)).holds;

	auto const left = basis_operators(a, OperatorKind::left);
	auto const right = basis_operators(a, OperatorKind::right);
	auto const sym = basis_operators(a, OperatorKind::sym);
	auto const ad = basis_operators(a, OperatorKind::ad);

	out.left_right_commute = true;
	out.sym_matches_ad = true;
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
		{
			if (out.left_right_commute && !(commutator(left[x], right[y]) == commutator(left[y], right[x])))
				out.left_right_commute = false;
			if (out.sym_matches_ad && !(commutator(sym[x], sym[y]) == combine(ad, a.basis_product(x, y)) -
			                                                               combine(ad, a.basis_product(y, x))))
				out.sym_matches_ad = false;
		}
	return out;
}

BianchiReport check_bianchi(Algebra const &a)
{
	std::size_t const n = a.dim();
	BianchiReport out;
	out.a3_precondition = subgroup_defect(a, SubgroupId::a3).holds;

	auto const left = basis_operators(a, OperatorKind::left);
	auto const right = basis_operators(a, OperatorKind::right);
	Algebra const bracket = commutator_algebra(a);

	// curvature operators on basis pairs
	std::vector<OperatorMatrix> rl, rr;
	rl.reserve(n * n);
	rr.reserve(n * n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
		{
			auto xy = bracket.basis_product(x, y);
			rl.push_back(commutator(left[x], left[y]) - combine(left, xy));
			rr.push_back(commutator(right[x], right[y]) + combine(right, xy));
		}

	auto cyclic = [&](std::vector<OperatorMatrix> const &r, Triple const &t) {
		auto [x, y, z] = t;
		return r[x * n + y].column(z) + r[y * n + z].column(x) + r[z * n + x].column(y);
	};

	out.left = out.right = true;
	for_each_triple(n, [&](Triple const &t) {
		bool l = is_zero(cyclic(rl, t));
		bool r = is_zero(cyclic(rr, t));
		if (l && r)
			return true;
		out.left = out.left && l;
		out.right = out.right && r;
		if (!out.witness)
			out.witness = t;
		return true;
	});
	return out;
}

bool check_commutative_exclusion(Algebra const &a)
{
	auto r = classify(a);
	bool symmetric = r.commutative || r.anticommutative;
	bool in_class = r.flag(SubgroupId::t12) || r.flag(SubgroupId::t23) || r.flag(SubgroupId::t13);
	return !(symmetric && in_class) || r.flag(SubgroupId::trivial);
}

Vector jacobinator(Algebra const &bracket, Triple const &t)
{
	std::size_t const n = bracket.dim();
	auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
		Vector xy(bracket.basis_product(x, y).begin(), bracket.basis_product(x, y).end());
		return product(bracket, xy, basis_vector(n, z));
	};
	auto [x, y, z] = t;
	return term(x, y, z) + term(y, z, x) + term(z, x, y);
}

Vector akivis_residual(Algebra const &a, Triple const &t)
{
	AssociatorTable const table(a);
	return jacobinator(commutator_algebra(a), t) - subgroup_sum(table, SubgroupId::s3, t);
}

} // namespace prelie
