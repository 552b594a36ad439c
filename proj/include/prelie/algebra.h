#pragma once

#include "prelie/linalg.h"
#include "prelie/scalar.h"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace prelie {

inline constexpr std::size_t max_dim = 8;

/// Finite-dimensional algebra given by dense structure constants:
/// e_i · e_j = Σ_k d(i,j,k) e_k  (indices zero-based internally).
///
/// Bracket algebras (Lie algebras, commutator algebras) use the same type
/// with the tensor read as c(i,j,k).
class Algebra
{
  public:
	explicit Algebra(std::size_t dim); // zero product; throws ShapeError outside 1..max_dim

	std::size_t dim() const noexcept { return n_; }

	Scalar const &operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return d_[(i * n_ + j) * n_ + k];
	}
	void set(std::size_t i, std::size_t j, std::size_t k, Scalar value);

	// e_i · e_j as a coordinate vector
	std::span<Scalar const> basis_product(std::size_t i, std::size_t j) const
	{
		return {d_.data() + (i * n_ + j) * n_, n_};
	}

	std::span<Scalar const> tensor() const noexcept { return d_; }
	bool is_zero() const { return prelie::is_zero(d_); }

	friend bool operator==(Algebra const &a, Algebra const &b) = default;
	friend auto operator<=>(Algebra const &a, Algebra const &b)
	{
		if (a.n_ != b.n_)
			return a.n_ <=> b.n_;
		return std::lexicographical_compare_three_way(a.d_.begin(), a.d_.end(), b.d_.begin(), b.d_.end());
	}

  private:
	std::size_t n_;
	std::vector<Scalar> d_;
};

Vector product(Algebra const &a, std::span<Scalar const> x, std::span<Scalar const> y);

// (x·y)·z − x·(y·z)
Vector associator(Algebra const &a, std::span<Scalar const> x, std::span<Scalar const> y,
                  std::span<Scalar const> z);

// (e_i·e_j)·e_m − e_i·(e_j·e_m), skipping zero structure constants
Vector basis_associator(Algebra const &a, std::size_t i, std::size_t j, std::size_t m);

Vector commutator(Algebra const &a, std::span<Scalar const> x, std::span<Scalar const> y);

// c(i,j,k) = d(i,j,k) − d(j,i,k)
Algebra commutator_algebra(Algebra const &a);

// d'(i,j,k) = d(j,i,k)
Algebra opposite(Algebra const &a);

enum class OperatorKind
{
	left,  // y ↦ x·y
	right, // y ↦ y·x
	sym,   // L_x + R_x
	ad     // L_x − R_x
};

OperatorMatrix mult_operator(Algebra const &a, std::span<Scalar const> x, OperatorKind kind);

/// Structure constants in the basis e'_i = Σ_j P(j,i) e_j (columns of P are
/// the new basis vectors). Throws InvertibilityError for singular P.
Algebra change_basis(Algebra const &a, OperatorMatrix const &p);

/// Largest number of nonzero components over all products e_i·e_j in the
/// given basis; 0 only for the zero product.
std::size_t projection_order(Algebra const &a);

enum class Side
{
	left,
	right
};

/// left:  ([L_x, L_y] − L_[x,y]) z
/// right: ([R_x, R_y] + R_[x,y]) z
Vector curvature(Algebra const &a, Side side, std::span<Scalar const> x, std::span<Scalar const> y,
                 std::span<Scalar const> z);

} // namespace prelie
