#pragma once

#include "prelie/algebra.h"
#include "prelie/error.h"
#include "prelie/identities.h"
#include "prelie/lie.h"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prelie {

enum class SupportPolicy
{
	lie,    // nonzero-c positions plus every diagonal (i,i,k)
	full,   // (i,j,k) with i < j plus every diagonal
	active, // lie, with diagonals (i,i,k) only for i, k touched by the bracket
	custom
};

/// d(i,j,k) as an affine form: constant + (var ? x_var : 0).
struct AffineEntry
{
	Scalar constant;
	std::optional<std::size_t> var;
};

/// Unknowns of the pre-algebraic ansatz. Each free (i,j,k) off the diagonal
/// determines its partner through d(j,i,k) = d(i,j,k) − c(i,j,k); entries
/// outside the support are zero.
struct AnsatzSupport
{
	std::size_t dim = 0;
	std::vector<Triple> free_vars;
	std::vector<AffineEntry> entries; // n³, row-major like Algebra

	AffineEntry const &entry(std::size_t i, std::size_t j, std::size_t k) const
	{
		return entries[(i * dim + j) * dim + k];
	}

	Algebra assemble(std::vector<Scalar> const &values) const;
	// values of the free vars if D lies in the image of the ansatz
	std::optional<std::vector<Scalar>> coordinates(Algebra const &d) const;
};

AnsatzSupport build_ansatz(LieAlgebra const &l, SupportPolicy policy, std::vector<Triple> const &custom = {});

// x_a x_b, x_a, or 1; absent slots are −1 and a ≤ b.
struct Monomial
{
	int a = -1;
	int b = -1;

	int degree() const { return (a >= 0) + (b >= 0); }
	friend bool operator==(Monomial const &, Monomial const &) = default;
	// graded: quadratic terms first, then linear, then the constant
	friend std::strong_ordering operator<=>(Monomial const &x, Monomial const &y)
	{
		if (auto c = y.degree() <=> x.degree(); c != 0)
			return c;
		if (auto c = x.a <=> y.a; c != 0)
			return c;
		return x.b <=> y.b;
	}
};

struct Polynomial
{
	std::map<Monomial, Scalar> terms; // no zero coefficients

	bool is_zero() const { return terms.empty(); }
	void add(Monomial const &m, Scalar const &c);
	void add_product(AffineEntry const &p, AffineEntry const &q, Scalar const &sign);
	Polynomial normalized() const; // leading coefficient 1
	Scalar evaluate(std::vector<Scalar> const &values) const;

	friend bool operator==(Polynomial const &, Polynomial const &) = default;
};

struct Provenance
{
	Triple triple;      // (i,j,m) of (e_i,e_j,e_m) − (e_m,e_j,e_i)
	std::size_t output; // component l
};

struct QuadraticSystem
{
	std::vector<Triple> unknowns;
	std::vector<Polynomial> polynomials;
	std::vector<Provenance> provenance;

	// distinct polynomials up to a nonzero scalar factor, normalized and sorted
	std::vector<Polynomial> distinct() const;
	// fix some unknowns and drop the polynomials that become zero
	QuadraticSystem substitute(std::map<std::size_t, Scalar> const &fixed) const;
	bool satisfied_by(std::vector<Scalar> const &values) const;
};

QuadraticSystem build_afa_system(LieAlgebra const &l, AnsatzSupport const &s);

std::string format_polynomial(Polynomial const &p, std::vector<Triple> const &unknowns);

struct CountReport
{
	std::uint64_t max_params = 0;     // p·n(n−1)/2
	std::uint64_t max_pair_conds = 0; // p²·n(n−1)
	std::uint64_t max_triple_conds = 0; // 2p²·n(n−1)(n−2)
	std::size_t actual_params = 0;      // off-diagonal unknowns under lie-support
	std::size_t actual_conditions = 0;  // distinct AFA polynomials under lie-support
};

CountReport constraint_counts(LieAlgebra const &l, std::uint64_t p);

struct SolutionRecord
{
	Algebra tensor{1};
	std::map<Triple, Scalar> assignment; // nonzero structure constants
	std::string class_label;              // I, II, III, IV, search
	std::vector<int> branch;              // ±1 choices; empty when none apply
	bool verified = false;
};

enum class SolutionClass
{
	I,
	II,
	III,
	IV
};

std::vector<SolutionRecord> class_candidates(LieAlgebra const &l, SolutionClass cls);

struct VerificationReport
{
	bool prealgebraic = false;
	std::optional<Triple> commutator_mismatch;
	bool afa = false;
	std::optional<Witness> afa_witness;
	bool nontrivial = false;
	ClassificationReport classes;

	bool ok() const { return prealgebraic && afa && nontrivial; }
};

VerificationReport verify_prestructure(LieAlgebra const &l, Algebra const &d);

inline constexpr std::uint64_t default_search_limit = 2'000'000;

struct SearchOptions
{
	std::uint64_t limit = default_search_limit;
	bool override_limit = false;
	unsigned workers = 1;
};

std::vector<Scalar> default_candidates();

// Throws BudgetError when |candidates|^|free| exceeds the limit without override.
std::vector<SolutionRecord> brute_force_search(LieAlgebra const &l, AnsatzSupport const &s,
                                               std::vector<Scalar> candidates, SearchOptions const &opts = {});

bool check_s3_universality(LieAlgebra const &l, unsigned trials, std::uint64_t seed = 0);

} // namespace prelie
