#pragma once

#include "prelie/algebra.h"
#include "prelie/error.h"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace prelie {

/// The six subgroups of S3; each labels a class of Lie-admissible algebras.
enum class SubgroupId
{
	trivial, // associative
	t12,     // left-symmetric (LSA)
	t23,     // right-symmetric (RSA)
	t13,     // anti-flexible (AFA)
	a3,
	s3
};

inline constexpr std::array<SubgroupId, 6> all_subgroups = {SubgroupId::trivial, SubgroupId::t12, SubgroupId::t23,
                                                            SubgroupId::t13,     SubgroupId::a3,  SubgroupId::s3};

std::string_view subgroup_tag(SubgroupId g);   // "Trivial", "T12", ...
std::string_view subgroup_class(SubgroupId g); // "associative", "LSA", ...

/// Permutation of three argument slots; image[k] = σ(k), zero-based.
struct Permutation
{
	std::array<std::uint8_t, 3> image{0, 1, 2};

	static Permutation identity() { return {}; }
	static Permutation transposition(std::uint8_t a, std::uint8_t b);

	int sign() const;
	// (x_σ(1), x_σ(2), x_σ(3)) for x = t
	Triple apply(Triple const &t) const;

	friend Permutation operator*(Permutation const &s, Permutation const &t); // s∘t
	friend bool operator==(Permutation const &, Permutation const &) = default;
};

std::vector<Permutation> subgroup_elements(SubgroupId g);

/// All n³ basis associators, computed once.
class AssociatorTable
{
  public:
	explicit AssociatorTable(Algebra const &a);
	std::size_t dim() const noexcept { return n_; }
	Vector const &operator()(Triple const &t) const { return table_[(t[0] * n_ + t[1]) * n_ + t[2]]; }

  private:
	std::size_t n_;
	std::vector<Vector> table_;
};

struct Witness
{
	Triple triple;
	Vector lhs; // associator (x1,x2,x3), or the signed sum for subgroup checks
	Vector rhs; // permuted associator, or zero
};

struct IdentityCheck
{
	bool holds = true;
	std::optional<Witness> witness; // lexicographically first failing basis triple

	explicit operator bool() const { return holds; }
};

// (x1,x2,x3) = (x_σ(1),x_σ(2),x_σ(3)) on every basis triple
IdentityCheck sigma_symmetric(Algebra const &a, Permutation const &sigma);
IdentityCheck sigma_symmetric(AssociatorTable const &t, Permutation const &sigma);

// Σ_{σ∈G} sgn(σ)(x_σ(1),x_σ(2),x_σ(3)) = 0 on every basis triple
IdentityCheck subgroup_defect(Algebra const &a, SubgroupId g);
IdentityCheck subgroup_defect(AssociatorTable const &t, SubgroupId g);

Vector subgroup_sum(AssociatorTable const &t, SubgroupId g, Triple const &x);

// (e_i,e_j,e_m) − (e_m,e_j,e_i)
Vector afa_defect(Algebra const &a, Triple const &t);

bool is_commutative(Algebra const &a);
bool is_anticommutative(Algebra const &a);

struct ClassificationReport
{
	std::array<bool, 6> flags{};
	std::array<std::optional<Witness>, 6> witnesses;
	bool commutative = false;
	bool anticommutative = false;

	bool flag(SubgroupId g) const { return flags[static_cast<std::size_t>(g)]; }
	std::optional<Witness> const &witness(SubgroupId g) const { return witnesses[static_cast<std::size_t>(g)]; }
};

ClassificationReport classify(Algebra const &a);

// Any two of {LSA, RSA, AFA} imply the third.
bool check_two_implies_third(Algebra const &a);

struct OperatorEquivalence
{
	bool afa = false;
	bool left_right_commute = false; // [L_x,R_y] = [L_y,R_x]
	bool sym_matches_ad = false;     // [S_x,S_y] = ad_[x,y]

	bool agree() const { return afa == left_right_commute && afa == sym_matches_ad; }
};

OperatorEquivalence check_operator_equivalences(Algebra const &a);

struct BianchiReport
{
	bool a3_precondition = false; // reported, not required
	bool left = false;
	bool right = false;
	std::optional<Triple> witness;

	bool holds() const { return left && right; }
};

// cyclic sums of ([L_x,L_y] − L_[x,y]) z and ([R_x,R_y] + R_[x,y]) z
BianchiReport check_bianchi(Algebra const &a);

// (commutative or anticommutative) and (LSA, RSA or AFA) ⇒ associative
bool check_commutative_exclusion(Algebra const &a);

// [[x,y],z] + [[y,z],x] + [[z,x],y] for the bracket tensor c on basis vectors
Vector jacobinator(Algebra const &bracket, Triple const &t);

// Jacobinator of the commutator minus the signed S3 sum of associators.
Vector akivis_residual(Algebra const &a, Triple const &t);

} // namespace prelie
