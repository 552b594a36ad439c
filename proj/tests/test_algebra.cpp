#include "fixtures.h"

#include "prelie/catalog.h"
#include "prelie/error.h"
#include "prelie/identities.h"
#include "prelie/sweeps.h"

#include <gtest/gtest.h>

using namespace prelie;
using namespace prelie::test;

namespace {

// upper triangular 2x2 matrices: E11, E12, E22
Algebra upper_triangular()
{
	return table(3, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 2, 1}, {3, 3, 3, 1}});
}

// LSA on [e1,e2]=e2
Algebra lsa_fixture() { return table(2, {{1, 1, 1, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}}); }

Vector random_vector(Rng &rng, std::size_t n)
{
	Vector v;
	for (std::size_t k = 0; k < n; ++k)
		v.push_back(random_scalar(rng));
	return v;
}

} // namespace

TEST(Algebra, DimensionBounds)
{
	EXPECT_THROW(Algebra(0), ShapeError);
	EXPECT_THROW(Algebra(9), ShapeError);
	EXPECT_NO_THROW(Algebra(8));
}

TEST(Algebra, ProductExamples)
{
	Algebra sl2 = catalog("sl2c-afa");
	EXPECT_EQ(product(sl2, e(3, 1), e(3, 2)), vec({"0", "2", "0"})); // H·E = 2E

	Algebra ex22 = catalog("ex2.2-afa", {{"delta", 1}});
	EXPECT_EQ(product(ex22, e(3, 2), e(3, 1)), vec({"0", "-i", "0"}));

	Rng rng(1);
	Vector y = random_vector(rng, 3);
	EXPECT_TRUE(is_zero(product(sl2, zero_vector(3), y)));
	EXPECT_THROW(product(sl2, e(2, 1), y), ShapeError);
}

TEST(Algebra, AssociatorExamples)
{
	Algebra sl2 = catalog("sl2c-afa");
	EXPECT_TRUE(is_zero(associator(sl2, e(3, 1), e(3, 2), e(3, 3))));

	Algebra ut = upper_triangular();
	for (std::size_t i = 1; i <= 3; ++i)
		for (std::size_t j = 1; j <= 3; ++j)
			for (std::size_t m = 1; m <= 3; ++m)
				EXPECT_TRUE(is_zero(associator(ut, e(3, i), e(3, j), e(3, m))));

	// oracle: tests/oracles/derive_expected.py
	Algebra ex22 = catalog("ex2.2-afa", {{"delta", 1}});
	EXPECT_EQ(associator(ex22, e(3, 1), e(3, 1), e(3, 2)), vec({"0", "-1", "0"}));
}

TEST(Algebra, CommutatorExamples)
{
	EXPECT_EQ(commutator(catalog("sl2c-afa"), e(3, 2), e(3, 3)), vec({"1", "0", "0"})); // [E,F] = H
	EXPECT_EQ(commutator(catalog("su2-afa"), e(3, 1), e(3, 2)), vec({"0", "0", "2"}));
	Rng rng(2);
	Vector x = random_vector(rng, 3);
	EXPECT_TRUE(is_zero(commutator(catalog("su2-afa"), x, x)));
}

TEST(Algebra, CommutatorAlgebraExamples)
{
	EXPECT_EQ(commutator_algebra(catalog("sl2c-afa")), catalog("sl2c"));
	EXPECT_TRUE(commutator_algebra(catalog("dihedral-quandle")).is_zero());

	Algebra c = commutator_algebra(catalog("s3-alpha-beta", {{"alpha", 1}, {"beta", 2}}));
	Algebra eps = catalog("cross-product");
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			for (std::size_t k = 0; k < 3; ++k)
				EXPECT_EQ(c(i, j, k), Scalar(-1) * eps(i, j, k));
}

TEST(Algebra, CommutatorAlgebraIsSkew)
{
	Rng rng(3);
	for (int t = 0; t < 50; ++t)
	{
		Algebra c = commutator_algebra(random_algebra(rng, 4));
		for (std::size_t i = 0; i < c.dim(); ++i)
			for (std::size_t j = 0; j < c.dim(); ++j)
				for (std::size_t k = 0; k < c.dim(); ++k)
					ASSERT_EQ(c(i, j, k), -c(j, i, k));
	}
}

TEST(Algebra, OppositeExamples)
{
	Rng rng(4);
	for (int t = 0; t < 50; ++t)
	{
		Algebra a = random_algebra(rng, 4);
		EXPECT_EQ(opposite(opposite(a)), a);
	}
	EXPECT_TRUE(classify(lsa_fixture()).flag(SubgroupId::t12));
	EXPECT_TRUE(classify(opposite(lsa_fixture())).flag(SubgroupId::t23));
	EXPECT_TRUE(classify(opposite(catalog("sl2c-afa"))).flag(SubgroupId::t13));
}

TEST(Algebra, MultOperatorExamples)
{
	Algebra sl2 = catalog("sl2c-afa");
	EXPECT_EQ(mult_operator(sl2, e(3, 1), OperatorKind::ad).apply(e(3, 2)), vec({"0", "2", "0"}));
	EXPECT_TRUE(mult_operator(sl2, zero_vector(3), OperatorKind::left).is_zero());

	Algebra ut = upper_triangular();
	for (std::size_t x = 1; x <= 3; ++x)
		for (std::size_t y = 1; y <= 3; ++y)
		{
			auto l = mult_operator(ut, e(3, x), OperatorKind::left);
			auto r = mult_operator(ut, e(3, y), OperatorKind::right);
			EXPECT_TRUE(commutator(l, r).is_zero());
		}
}

TEST(Algebra, AdIsLeftMinusRightAndMatchesBracket)
{
	Rng rng(5);
	for (int t = 0; t < 30; ++t)
	{
		Algebra a = random_algebra(rng, 3);
		std::size_t n = a.dim();
		Vector x = random_vector(rng, n), y = random_vector(rng, n);
		auto ad = mult_operator(a, x, OperatorKind::ad);
		EXPECT_EQ(ad, mult_operator(a, x, OperatorKind::left) - mult_operator(a, x, OperatorKind::right));
		EXPECT_EQ(ad.apply(y), product(commutator_algebra(a), x, y));
		EXPECT_EQ(mult_operator(a, x, OperatorKind::sym),
		          mult_operator(a, x, OperatorKind::left) + mult_operator(a, x, OperatorKind::right));
	}
}

TEST(Algebra, ChangeBasisExamples)
{
	Algebra sl2 = catalog("sl2c-afa");
	EXPECT_EQ(change_basis(sl2, OperatorMatrix::identity(3)), sl2);

	EXPECT_EQ(change_basis(catalog("ex2.2-extended"), OperatorMatrix::scalar(3, 2)), catalog("sl2c"));

	Scalar delta = S("1/2+1/2i");
	Algebra comm = commutator_algebra(catalog("ex2.2-afa"));
	Scalar s = (delta * S("1+i")).inverse();
	EXPECT_EQ(change_basis(comm, OperatorMatrix::scalar(3, s)), catalog("ex2.2-bracket"));

	OperatorMatrix singular(3);
	singular(0, 0) = 1;
	singular(1, 0) = 1;
	EXPECT_THROW(change_basis(sl2, singular), InvertibilityError);
	EXPECT_THROW(change_basis(sl2, OperatorMatrix::identity(2)), ShapeError);
}

TEST(Algebra, ChangeBasisColumnConvention)
{
	// swap e1 and e2 in the [e1,e2]=e2 LSA: new e'1 = e2, e'2 = e1
	OperatorMatrix p(2);
	p(1, 0) = 1;
	p(0, 1) = 1;
	Algebra b = change_basis(lsa_fixture(), p);
	EXPECT_EQ(b(1, 1, 1), Scalar(2)); // e'2·e'2 = e1·e1 = 2e1 = 2e'2
	EXPECT_EQ(b(0, 0, 1), Scalar(1)); // e'1·e'1 = e2·e2 = e1 = e'2
}

TEST(Algebra, ChangeBasisPreservesClasses)
{
	Rng rng(6);
	for (auto name : {"sl2c-afa", "su2-afa", "cross-product", "dihedral-quandle", "s3-alpha-beta"})
	{
		Algebra a = catalog(name);
		Algebra b = change_basis(a, random_invertible(rng, 3));
		EXPECT_EQ(classify(a).flags, classify(b).flags) << name;
	}
}

TEST(Algebra, ProjectionOrderExamples)
{
	EXPECT_EQ(projection_order(catalog("sl2c-afa")), 1u);
	EXPECT_EQ(projection_order(catalog("su2-afa")), 2u);
	EXPECT_EQ(projection_order(Algebra(3)), 0u);
}

TEST(Algebra, CurvatureExamples)
{
	Algebra lsa = lsa_fixture();
	for (std::size_t x = 1; x <= 2; ++x)
		for (std::size_t y = 1; y <= 2; ++y)
			for (std::size_t z = 1; z <= 2; ++z)
				EXPECT_TRUE(is_zero(curvature(lsa, Side::left, e(2, x), e(2, y), e(2, z))));

	Algebra cross = catalog("cross-product");
	for (std::size_t x = 1; x <= 3; ++x)
		for (std::size_t y = 1; y <= 3; ++y)
			for (std::size_t z = 1; z <= 3; ++z)
			{
				Vector sum = curvature(cross, Side::left, e(3, x), e(3, y), e(3, z)) +
				             curvature(cross, Side::left, e(3, y), e(3, z), e(3, x)) +
				             curvature(cross, Side::left, e(3, z), e(3, x), e(3, y));
				EXPECT_TRUE(is_zero(sum));
			}

	Rng rng(7);
	Algebra zero(3);
	EXPECT_TRUE(
	    is_zero(curvature(zero, Side::right, random_vector(rng, 3), random_vector(rng, 3), random_vector(rng, 3))));
}

TEST(Algebra, CurvatureMatchingOnAfa)
{
	// AFA: [L_x,L_y] − L_[x,y] = −([R_x,R_y] + R_[x,y])
	Rng rng(8);
	std::vector<Algebra> afas = {catalog("sl2c-afa"), catalog("su2-afa"), catalog("ex2.1-afa"),
	                             catalog("ex2.2-afa")};
	afas.push_back(change_basis(catalog("sl2c-afa"), random_invertible(rng, 3)));
	for (auto const &a : afas)
	{
		ASSERT_TRUE(classify(a).flag(SubgroupId::t13));
		for (std::size_t x = 1; x <= 3; ++x)
			for (std::size_t y = 1; y <= 3; ++y)
				for (std::size_t z = 1; z <= 3; ++z)
				{
					Vector l = curvature(a, Side::left, e(3, x), e(3, y), e(3, z));
					Vector r = curvature(a, Side::right, e(3, x), e(3, y), e(3, z));
					EXPECT_TRUE(is_zero(l + r));
				}
	}
}

TEST(Algebra, AssociatorIsTrilinear)
{
	Rng rng(9);
	for (int t = 0; t < 40; ++t)
	{
		Algebra a = random_algebra(rng, 3);
		std::size_t n = a.dim();
		Vector x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
		Vector expanded(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t m = 0; m < n; ++m)
					expanded = expanded + (x[i] * y[j] * z[m]) * basis_associator(a, i, j, m);
		EXPECT_EQ(associator(a, x, y, z), expanded);
	}
}

TEST(Algebra, AkivisIdentityOnRandomAlgebras)
{
	Rng rng(0);
	for (int t = 0; t < 200; ++t)
	{
		Algebra a = random_algebra(rng, 4);
		std::size_t n = a.dim();
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t m = 0; m < n; ++m)
					ASSERT_TRUE(is_zero(akivis_residual(a, {i, j, m}))) << "sample " << t;
	}
}

TEST(Algebra, AkivisIdentityOnFixtures)
{
	for (auto const &entry : catalog_entries())
	{
		Algebra a = catalog(entry.name);
		for (std::size_t i = 0; i < a.dim(); ++i)
			for (std::size_t j = 0; j < a.dim(); ++j)
				for (std::size_t m = 0; m < a.dim(); ++m)
					EXPECT_TRUE(is_zero(akivis_residual(a, {i, j, m}))) << entry.name;
	}
}
