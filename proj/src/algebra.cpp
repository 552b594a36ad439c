#include "prelie/algebra.h"

#include "prelie/error.h"

#include <algorithm>

namespace prelie {

namespace {

void require_length(Algebra const &a, std::span<Scalar const> v)
{
	if (v.size() != a.dim())
		throw ShapeError("vector of length " + std::to_string(v.size()) + " used with algebra of dimension " +
		                 std::to_string(a.dim()));
}

} // namespace

Algebra::Algebra(std::size_t dim) : n_(dim)
{
	if (dim < 1 || dim > max_dim)
		throw ShapeError("algebra dimension must be in 1.." + std::to_string(max_dim) + ", got " +
		                 std::to_string(dim));
	d_.resize(n_ * n_ * n_);
}

void Algebra::set(std::size_t i, std::size_t j, std::size_t k, Scalar value)
{
	if (i >= n_ || j >= n_ || k >= n_)
		throw ShapeError("structure constant index out of range");
	d_[(i * n_ + j) * n_ + k] = std::move(value);
}

Vector product(Algebra const &a, std::span<Scalar const> x, std::span<Scalar const> y)
{
	require_length(a, x);
	require_length(a, y);
	std::size_t const n = a.dim();
	Vector out(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (y[j].is_zero())
				continue;
			Scalar xy = x[i] * y[j];
			auto row = a.basis_product(i, j);
			for (std::size_t k = 0; k < n; ++k)
				out[k].add_product(xy, row[k]);
		}
	}
	return out;
}

Vector associator(Algebra const &a, std::span<Scalar const> x, std::span<Scalar const> y,
                  std::span<Scalar const> z)
{
	return product(a, product(a, x, y), z) - product(a, x, product(a, y, z));
}

Vector basis_associator(Algebra const &a, std::size_t i, std::size_t j, std::size_t m)
{
	std::size_t const n = a.dim();
	Vector out(n);
	// (e_i e_j) e_m = Σ_k d(i,j,k) e_k e_m
	auto ij = a.basis_product(i, j);
	for (std::size_t k = 0; k < n; ++k)
	{
		if (ij[k].is_zero())
			continue;
		auto km = a.basis_product(k, m);
		for (std::size_t l = 0; l < n; ++l)
			out[l].add_product(ij[k], km[l]);
	}
	// e_i (e_j e_m) = Σ_k d(j,m,k) e_i e_k
	auto jm = a.basis_product(j, m);
	for (std::size_t k = 0; k < n; ++k)
	{
		if (jm[k].is_zero())
			continue;
		Scalar neg = -jm[k];
		auto ik = a.basis_product(i, k);
		for (std::size_t l = 0; l < n; ++l)
			out[l].add_product(neg, ik[l]);
	}
	return out;
}

Vector commutator(Algebra const &a, std::span<Scalar const> x, std::span<Scalar const> y)
{
	return product(a, x, y) - product(a, y, x);
}

Algebra commutator_algebra(Algebra const &a)
{
	std::size_t const n = a.dim();
	Algebra c(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				c.set(i, j, k, a(i, j, k) - a(j, i, k));
	return c;
}

Algebra opposite(Algebra const &a)
{
	std::size_t const n = a.dim();
	Algebra o(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				o.set(i, j, k, a(j, i, k));
	return o;
}

OperatorMatrix mult_operator(Algebra const &a, std::span<Scalar const> x, OperatorKind kind)
{
	require_length(a, x);
	std::size_t const n = a.dim();
	OperatorMatrix m(n);
	// column y = e_col
	for (std::size_t col = 0; col < n; ++col)
	{
		Vector e = basis_vector(n, col);
		Vector image;
		switch (kind)
		{
		case OperatorKind::left:
			image = product(a, x, e);
			break;
		case OperatorKind::right:
			image = product(a, e, x);
			break;
		case OperatorKind::sym:
			image = product(a, x, e) + product(a, e, x);
			break;
		case OperatorKind::ad:
			image = product(a, x, e) - product(a, e, x);
			break;
		}
		for (std::size_t r = 0; r < n; ++r)
			m(r, col) = std::move(image[r]);
	}
	return m;
}

Algebra change_basis(Algebra const &a, OperatorMatrix const &p)
{
	std::size_t const n = a.dim();
	if (p.dim() != n)
		throw ShapeError("basis change matrix has dimension " + std::to_string(p.dim()) + ", algebra has " +
		                 std::to_string(n));
	auto pinv = inverse(p);
	if (!pinv)
		throw InvertibilityError("basis change matrix is singular over Q(i)");

	Algebra out(n);
	for (std::size_t x = 0; x < n; ++x)
		for (std::size_t y = 0; y < n; ++y)
		{
			// e'_x · e'_y in old coordinates
			Vector prod = product(a, p.column(x), p.column(y));
			Vector coords = pinv->apply(prod);
			for (std::size_t z = 0; z < n; ++z)
				out.set(x, y, z, std::move(coords[z]));
		}
	return out;
}

std::size_t projection_order(Algebra const &a)
{
	std::size_t const n = a.dim();
	std::size_t p = 0;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto row = a.basis_product(i, j);
			auto nonzero = static_cast<std::size_t>(
			    std::count_if(row.begin(), row.end(), [](Scalar const &s) { return !s.is_zero(); }));
			p = std::max(p, nonzero);
		}
	return p;
}

Vector curvature(Algebra const &a, Side side, std::span<Scalar const> x, std::span<Scalar const> y,
                 std::span<Scalar const> z)
{
	require_length(a, z);
	Vector xy = commutator(a, x, y);
	auto kind = side == Side::left ? OperatorKind::left : OperatorKind::right;
	OperatorMatrix ox = mult_operator(a, x, kind);
	OperatorMatrix oy = mult_operator(a, y, kind);
	OperatorMatrix obr = mult_operator(a, xy, kind);
	OperatorMatrix r = side == Side::left ? commutator(ox, oy) - obr : commutator(ox, oy) + obr;
	return r.apply(z);
}

} // namespace prelie
