#include "fixtures.h"

#include "prelie/catalog.h"
#include "prelie/solver.h"
#include "prelie/sweeps.h"

#include <gtest/gtest.h>

#include <algorithm>

using namespace prelie;
using namespace prelie::test;

namespace {

bool has(std::vector<Triple> const &v, Triple const &t) { return std::find(v.begin(), v.end(), t) != v.end(); }

std::size_t diagonal_count(std::vector<Triple> const &v)
{
	return std::count_if(v.begin(), v.end(), [](Triple const &t) { return t[0] == t[1]; });
}

std::map<std::size_t, Scalar> zero_diagonals(AnsatzSupport const &s)
{
	std::map<std::size_t, Scalar> fixed;
	for (std::size_t v = 0; v < s.free_vars.size(); ++v)
		if (s.free_vars[v][0] == s.free_vars[v][1])
			fixed[v] = Scalar();
	return fixed;
}

} // namespace

TEST(Ansatz, LieSupportEx31)
{
	auto s = build_ansatz(catalog_lie("ex2.2-bracket"), SupportPolicy::lie);
	EXPECT_EQ(s.free_vars.size(), 11u);
	EXPECT_EQ(diagonal_count(s.free_vars), 9u);
	EXPECT_TRUE(has(s.free_vars, T(1, 2, 2)));
	EXPECT_TRUE(has(s.free_vars, T(3, 1, 3)));
	// partner follows d(j,i,k) = d(i,j,k) − c(i,j,k)
	auto const &p = s.entry(1, 0, 1);
	ASSERT_TRUE(p.var);
	EXPECT_EQ(s.free_vars[*p.var], T(1, 2, 2));
	EXPECT_EQ(p.constant, Scalar(-1));
	// outside the support
	EXPECT_FALSE(s.entry(0, 1, 0).var);
	EXPECT_TRUE(s.entry(0, 1, 0).constant.is_zero());
}

TEST(Ansatz, AbelianAndFull)
{
	auto ab = build_ansatz(catalog_lie("abelian3"), SupportPolicy::lie);
	EXPECT_EQ(ab.free_vars.size(), 9u);
	EXPECT_EQ(diagonal_count(ab.free_vars), 9u);

	auto full = build_ansatz(catalog_lie("sl2c"), SupportPolicy::full);
	EXPECT_EQ(full.free_vars.size(), 18u);
}

TEST(Ansatz, ActiveSupport)
{
	auto s = build_ansatz(catalog_lie("e1e2-e1"), SupportPolicy::active);
	for (auto const &t : s.free_vars)
		EXPECT_TRUE(t[0] < 2 && t[1] < 2 && t[2] < 2) << format_triple(t);
	EXPECT_TRUE(has(s.free_vars, T(1, 2, 1)));
}

TEST(Ansatz, AssembleAndCoordinatesRoundTrip)
{
	Rng rng(21);
	auto lie = catalog_lie("sl2c");
	auto s = build_ansatz(lie, SupportPolicy::full);
	for (int t = 0; t < 20; ++t)
	{
		Algebra d = random_prestructure(rng, lie);
		auto coords = s.coordinates(d);
		ASSERT_TRUE(coords);
		EXPECT_EQ(s.assemble(*coords), d);
		EXPECT_EQ(commutator_algebra(d), lie.base());
	}
	auto lie_support = build_ansatz(lie, SupportPolicy::lie);
	Algebra dense = random_prestructure(rng, lie);
	dense.set(0, 1, 2, dense(0, 1, 2) + Scalar(1));
	dense.set(1, 0, 2, dense(1, 0, 2) + Scalar(1));
	EXPECT_FALSE(lie_support.coordinates(dense));
}

TEST(Ansatz, CustomSupportErrors)
{
	auto lie = catalog_lie("ex2.2-bracket");
	EXPECT_NO_THROW(build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(3, 1, 3)}));
	EXPECT_NO_THROW(build_ansatz(lie, SupportPolicy::custom, {T(2, 1, 2), T(1, 3, 3)}));
	EXPECT_THROW(build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2)}), SupportError);
	EXPECT_THROW(build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(2, 1, 2), T(3, 1, 3)}), SupportError);
	EXPECT_THROW(build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(1, 2, 2), T(3, 1, 3)}), SupportError);
	EXPECT_THROW(build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(3, 1, 4)}), SupportError);
}

TEST(System, Ex31TwoQuadratics)
{
	// oracle: tests/oracles/derive_expected.py
	auto lie = catalog_lie("ex2.2-bracket");
	auto s = build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(3, 1, 3)});
	auto sys = build_afa_system(lie, s);
	EXPECT_EQ(sys.polynomials.size(), sys.provenance.size());
	auto distinct = sys.distinct();
	ASSERT_EQ(distinct.size(), 2u);
	EXPECT_EQ(format_polynomial(distinct[0], s.free_vars), "d(1,2,2)^2 - d(1,2,2) + 1/2");
	EXPECT_EQ(format_polynomial(distinct[1], s.free_vars), "d(3,1,3)^2 - d(3,1,3) + 1/2");
	for (auto const &p : sys.polynomials)
	{
		EXPECT_FALSE(p.is_zero());
		for (auto const &[m, c] : p.terms)
		{
			EXPECT_LE(m.degree(), 2);
			EXPECT_LT(m.a, int(s.free_vars.size()));
			EXPECT_LT(m.b, int(s.free_vars.size()));
		}
	}
}

TEST(System, LieSupportWithZeroDiagonalsReduces)
{
	auto lie = catalog_lie("ex2.2-bracket");
	auto s = build_ansatz(lie, SupportPolicy::lie);
	auto reduced = build_afa_system(lie, s).substitute(zero_diagonals(s));
	auto distinct = reduced.distinct();
	ASSERT_EQ(distinct.size(), 2u);
	EXPECT_EQ(format_polynomial(distinct[0], reduced.unknowns), "d(1,2,2)^2 - d(1,2,2) + 1/2");
	EXPECT_EQ(format_polynomial(distinct[1], reduced.unknowns), "d(3,1,3)^2 - d(3,1,3) + 1/2");
}

TEST(System, Sl2cFullSatisfiedByEx51)
{
	auto lie = catalog_lie("sl2c");
	auto s = build_ansatz(lie, SupportPolicy::full);
	auto sys = build_afa_system(lie, s);
	auto coords = s.coordinates(catalog("sl2c-afa"));
	ASSERT_TRUE(coords);
	EXPECT_TRUE(sys.satisfied_by(*coords));
	auto bad = s.coordinates(catalog("sl2c-afa", {{"lambda", 1}}));
	ASSERT_TRUE(bad);
	EXPECT_FALSE(sys.satisfied_by(*bad));
}

TEST(System, AbelianHasNoLinearOrConstantTerms)
{
	auto lie = catalog_lie("abelian3");
	auto sys = build_afa_system(lie, build_ansatz(lie, SupportPolicy::lie));
	for (auto const &p : sys.polynomials)
		for (auto const &[m, c] : p.terms)
			EXPECT_EQ(m.degree(), 2);
}

TEST(Counts, Formulas)
{
	auto c = constraint_counts(catalog_lie("sl2c"), 1);
	EXPECT_EQ(c.max_params, 3u);
	EXPECT_EQ(c.max_pair_conds, 6u);
	EXPECT_EQ(c.max_triple_conds, 12u);
	EXPECT_EQ(c.actual_params, 3u);

	for (std::uint64_t n = 1; n <= 5; ++n)
		for (std::uint64_t p = 1; p <= 4; ++p)
		{
			auto r = constraint_counts(catalog_lie("abelian", {{"n", long(n)}}), p);
			EXPECT_EQ(r.max_params, p * n * (n - 1) / 2);
			EXPECT_EQ(r.max_pair_conds, p * p * n * (n - 1));
			EXPECT_EQ(r.max_triple_conds, n < 2 ? 0 : 2 * p * p * n * (n - 1) * (n - 2));
		}
}

TEST(Classes, ClassIIInvariant)
{
	auto lie = catalog_lie("ex2.2-bracket");
	auto recs = class_candidates(lie, SolutionClass::II);
	ASSERT_EQ(recs.size(), 4u);
	Scalar const i = Scalar::i();
	for (auto const &r : recs)
	{
		EXPECT_TRUE(r.verified);
		EXPECT_EQ(r.class_label, "II");
		EXPECT_EQ(r.branch.size(), 2u);
		std::size_t pairs = 0;
		for (std::size_t a = 0; a < 3; ++a)
			for (std::size_t b = 0; b < 3; ++b)
			{
				if (a == b || r.tensor(a, b, a).is_zero())
					continue;
				++pairs;
				Scalar ratio = r.tensor(b, a, a) / r.tensor(a, b, a);
				EXPECT_TRUE(ratio == i || ratio == -i) << format_scalar(ratio);
			}
		EXPECT_EQ(pairs, 2u);
	}
}

TEST(Classes, Ex31BranchValues)
{
	auto recs = class_candidates(catalog_lie("ex2.2-bracket"), SolutionClass::II);
	Scalar const plus = S("1/2+1/2i"), minus = S("1/2-1/2i");
	for (auto const &r : recs)
	{
		Scalar a = r.tensor(0, 1, 1), b = r.tensor(2, 0, 2);
		EXPECT_TRUE(a == plus || a == minus);
		EXPECT_TRUE(b == plus || b == minus);
	}
	EXPECT_NE(recs[0].tensor, recs[3].tensor);
}

TEST(Classes, ClassIIIAndIVOnE1E2)
{
	auto lie = catalog_lie("e1e2-e1");
	Algebra literal = table(3, {{1, 1, 1, 1}, {2, 2, 2, 1}, {1, 2, 1, 1}});
	auto iii = class_candidates(lie, SolutionClass::III);
	EXPECT_TRUE(std::any_of(iii.begin(), iii.end(), [&](auto const &r) { return r.tensor == literal; }));
	for (auto const &r : iii)
		EXPECT_EQ(r.verified, verify_prestructure(lie, r.tensor).ok());
	auto iv = class_candidates(lie, SolutionClass::IV);
	ASSERT_FALSE(iv.empty());
	for (auto const &r : iv)
	{
		EXPECT_TRUE(r.verified);
		EXPECT_EQ(r.tensor(1, 0, 0), S("-1/2"));
		EXPECT_EQ(r.tensor(1, 1, 0), S("1/4"));
	}
}

TEST(Verify, Examples)
{
	auto v = verify_prestructure(catalog_lie("sl2c"), catalog("sl2c-afa"));
	EXPECT_TRUE(v.ok());
	EXPECT_TRUE(v.classes.flag(SubgroupId::t13));

	auto zero = verify_prestructure(catalog_lie("abelian3"), Algebra(3));
	EXPECT_TRUE(zero.prealgebraic);
	EXPECT_TRUE(zero.afa);
	EXPECT_FALSE(zero.nontrivial);

	auto wrong = verify_prestructure(catalog_lie("sl2c"), catalog("su2-afa"));
	EXPECT_FALSE(wrong.prealgebraic);
	EXPECT_TRUE(wrong.commutator_mismatch);

	EXPECT_THROW(verify_prestructure(catalog_lie("sl2c"), Algebra(2)), ShapeError);
}

TEST(BruteForce, Ex31FindsExactlyClassII)
{
	auto lie = catalog_lie("ex2.2-bracket");
	auto s = build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(3, 1, 3)});
	auto found = brute_force_search(lie, s, default_candidates());
	auto expected = class_candidates(lie, SolutionClass::II);
	ASSERT_EQ(found.size(), 4u);
	for (auto const &r : found)
	{
		EXPECT_TRUE(r.verified);
		EXPECT_TRUE(std::any_of(expected.begin(), expected.end(), [&](auto const &x) { return x.tensor == r.tensor; }));
	}
}

TEST(BruteForce, AbelianDim2MatchesDirectEnumeration)
{
	auto lie = catalog_lie("abelian", {{"n", 2}});
	auto s = build_ansatz(lie, SupportPolicy::lie);
	ASSERT_EQ(s.free_vars.size(), 4u);
	std::vector<Scalar> const cands = {0, 1};
	auto found = brute_force_search(lie, s, cands);

	std::vector<Algebra> expected;
	for (unsigned mask = 0; mask < 16; ++mask)
	{
		std::vector<Scalar> values;
		for (unsigned b = 0; b < 4; ++b)
			values.push_back((mask >> b) & 1u ? 1 : 0);
		Algebra d = s.assemble(values);
		if (verify_prestructure(lie, d).ok())
			expected.push_back(d);
	}
	std::sort(expected.begin(), expected.end());
	ASSERT_EQ(found.size(), expected.size());
	for (std::size_t k = 0; k < found.size(); ++k)
		EXPECT_EQ(found[k].tensor, expected[k]);
}

TEST(BruteForce, Budget)
{
	auto lie = catalog_lie("ex2.2-bracket");
	auto s = build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 2), T(3, 1, 3)});
	SearchOptions small;
	small.limit = 10;
	try
	{
		brute_force_search(lie, s, default_candidates(), small);
		FAIL();
	}
	catch (BudgetError const &err)
	{
		EXPECT_EQ(err.required(), 169u);
	}
	small.override_limit = true;
	EXPECT_EQ(brute_force_search(lie, s, default_candidates(), small).size(), 4u);

	auto sl2 = catalog_lie("sl2c");
	try
	{
		brute_force_search(sl2, build_ansatz(sl2, SupportPolicy::full), default_candidates());
		FAIL();
	}
	catch (BudgetError const &err)
	{
		EXPECT_EQ(err.required(), 0u); // beyond 64 bits
	}
}

TEST(BruteForce, WorkerAndCandidateOrderInvariance)
{
	auto lie = catalog_lie("e1e2-e1");
	auto s = build_ansatz(lie, SupportPolicy::custom, {T(1, 2, 1), T(1, 1, 1), T(2, 2, 1)});
	auto cands = default_candidates();
	auto one = brute_force_search(lie, s, cands);
	SearchOptions many;
	many.workers = 3;
	auto three = brute_force_search(lie, s, cands, many);
	std::reverse(cands.begin(), cands.end());
	auto reversed = brute_force_search(lie, s, cands);
	ASSERT_FALSE(one.empty());
	ASSERT_EQ(one.size(), three.size());
	ASSERT_EQ(one.size(), reversed.size());
	for (std::size_t k = 0; k < one.size(); ++k)
	{
		EXPECT_EQ(one[k].tensor, three[k].tensor);
		EXPECT_EQ(one[k].tensor, reversed[k].tensor);
	}
}

TEST(Agreement, SystemMatchesVerifierOnFullSupport)
{
	Rng rng(22);
	for (auto name : {"sl2c", "ex2.2-bracket", "e1e2-e1"})
	{
		auto lie = catalog_lie(name);
		auto s = build_ansatz(lie, SupportPolicy::full);
		auto sys = build_afa_system(lie, s);
		for (int t = 0; t < 20; ++t)
		{
			Algebra d = random_prestructure(rng, lie);
			auto coords = s.coordinates(d);
			ASSERT_TRUE(coords);
			EXPECT_EQ(sys.satisfied_by(*coords), verify_prestructure(lie, d).afa) << name;
		}
		for (auto cls : {SolutionClass::I, SolutionClass::II, SolutionClass::III, SolutionClass::IV})
			for (auto const &r : class_candidates(lie, cls))
			{
				auto coords = s.coordinates(r.tensor);
				if (!coords)
				{
					// not pre-algebraic, so never verified
					EXPECT_FALSE(r.verified);
					continue;
				}
				EXPECT_EQ(sys.satisfied_by(*coords), verify_prestructure(lie, r.tensor).afa);
				if (r.verified)
					EXPECT_TRUE(sys.satisfied_by(*coords));
			}
	}
}

TEST(Universality, S3OnCatalogBrackets)
{
	for (auto name : {"sl2c", "su2", "abelian3", "ex2.1-bracket", "ex2.2-bracket"})
		EXPECT_TRUE(check_s3_universality(catalog_lie(name), 20, 5)) << name;
}
