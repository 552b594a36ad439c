#pragma once

#include "prelie/scalar.h"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace prelie {

// Coordinates of an algebra element in the basis e_1..e_n.
using Vector = std::vector<Scalar>;

Vector basis_vector(std::size_t n, std::size_t i);
Vector zero_vector(std::size_t n);
bool is_zero(std::span<Scalar const> v);
Vector operator+(Vector a, Vector const &b);
Vector operator-(Vector a, Vector const &b);
Vector operator*(Scalar const &s, Vector v);

/// Square matrix acting on coordinate column vectors (L_x, R_x, ad_x, ...).
class OperatorMatrix
{
  public:
	explicit OperatorMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}

	static OperatorMatrix identity(std::size_t n);
	static OperatorMatrix scalar(std::size_t n, Scalar const &s);

	std::size_t dim() const noexcept { return n_; }
	Scalar const &operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
	Scalar &operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

	Vector apply(std::span<Scalar const> v) const;
	Vector column(std::size_t col) const;
	Scalar trace() const;
	bool is_zero() const;

	OperatorMatrix &operator+=(OperatorMatrix const &b);
	OperatorMatrix &operator-=(OperatorMatrix const &b);
	friend OperatorMatrix operator+(OperatorMatrix a, OperatorMatrix const &b) { return a += b; }
	friend OperatorMatrix operator-(OperatorMatrix a, OperatorMatrix const &b) { return a -= b; }
	friend OperatorMatrix operator*(OperatorMatrix const &a, OperatorMatrix const &b);
	friend bool operator==(OperatorMatrix const &a, OperatorMatrix const &b) = default;

  private:
	std::size_t n_;
	std::vector<Scalar> entries_;
};

// AB − BA
OperatorMatrix commutator(OperatorMatrix const &a, OperatorMatrix const &b);

/// Reduced row echelon basis of the span of `rows` (all of equal length).
std::vector<Vector> row_space_basis(std::vector<Vector> rows);

std::size_t rank(std::vector<Vector> rows);
std::size_t rank(OperatorMatrix const &m);

std::optional<OperatorMatrix> inverse(OperatorMatrix const &m);

} // namespace prelie
