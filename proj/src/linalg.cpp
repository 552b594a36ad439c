#include "prelie/linalg.h"

#include "prelie/error.h"

namespace prelie {

Vector basis_vector(std::size_t n, std::size_t i)
{
	Vector v(n);
	v.at(i) = 1;
	return v;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero(std::span<Scalar const> v)
{
	for (auto const &x : v)
		if (!x.is_zero())
			return false;
	return true;
}

Vector operator+(Vector a, Vector const &b)
{
	if (a.size() != b.size())
		throw ShapeError("vector length mismatch");
	for (std::size_t k = 0; k < a.size(); ++k)
		a[k] += b[k];
	return a;
}

Vector operator-(Vector a, Vector const &b)
{
	if (a.size() != b.size())
		throw ShapeError("vector length mismatch");
	for (std::size_t k = 0; k < a.size(); ++k)
		a[k] -= b[k];
	return a;
}

Vector operator*(Scalar const &s, Vector v)
{
	for (auto &x : v)
		x *= s;
	return v;
}

OperatorMatrix OperatorMatrix::identity(std::size_t n) { return scalar(n, 1); }

OperatorMatrix OperatorMatrix::scalar(std::size_t n, Scalar const &s)
{
	OperatorMatrix m(n);
	for (std::size_t k = 0; k < n; ++k)
		m(k, k) = s;
	return m;
}

Vector OperatorMatrix::apply(std::span<Scalar const> v) const
{
	if (v.size() != n_)
		throw ShapeError("operator of dimension " + std::to_string(n_) + " applied to vector of length " +
		                 std::to_string(v.size()));
	Vector out(n_);
	for (std::size_t r = 0; r < n_; ++r)
		for (std::size_t c = 0; c < n_; ++c)
			out[r].add_product((*this)(r, c), v[c]);
	return out;
}

Vector OperatorMatrix::column(std::size_t col) const
{
	Vector out(n_);
	for (std::size_t r = 0; r < n_; ++r)
		out[r] = (*this)(r, col);
	return out;
}

Scalar OperatorMatrix::trace() const
{
	Scalar t;
	for (std::size_t k = 0; k < n_; ++k)
		t += (*this)(k, k);
	return t;
}

bool OperatorMatrix::is_zero() const { return prelie::is_zero(entries_); }

OperatorMatrix &OperatorMatrix::operator+=(OperatorMatrix const &b)
{
	if (n_ != b.n_)
		throw ShapeError("matrix dimension mismatch");
	for (std::size_t k = 0; k < entries_.size(); ++k)
		entries_[k] += b.entries_[k];
	return *this;
}

OperatorMatrix &OperatorMatrix::operator-=(OperatorMatrix const &b)
{
	if (n_ != b.n_)
		throw ShapeError("matrix dimension mismatch");
	for (std::size_t k = 0; k < entries_.size(); ++k)
		entries_[k] -= b.entries_[k];
	return *this;
}

OperatorMatrix operator*(OperatorMatrix const &a, OperatorMatrix const &b)
{
	if (a.n_ != b.n_)
		throw ShapeError("matrix dimension mismatch");
	OperatorMatrix out(a.n_);
	for (std::size_t r = 0; r < a.n_; ++r)
		for (std::size_t k = 0; k < a.n_; ++k)
		{
			auto const &ark = a(r, k);
			if (ark.is_zero())
				continue;
			for (std::size_t c = 0; c < a.n_; ++c)
				out(r, c).add_product(ark, b(k, c));
		}
	return out;
}

OperatorMatrix commutator(OperatorMatrix const &a, OperatorMatrix const &b) { return a * b - b * a; }

std::vector<Vector> row_space_basis(std::vector<Vector> rows)
{
	if (rows.empty())
		return {};
	std::size_t const cols = rows.front().size();
	std::size_t pivot_row = 0;
	for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col)
	{
		std::size_t sel = pivot_row;
		while (sel < rows.size() && rows[sel][col].is_zero())
			++sel;
		if (sel == rows.size())
			continue;
		std::swap(rows[pivot_row], rows[sel]);
		Scalar inv = rows[pivot_row][col].inverse();
		for (auto &x : rows[pivot_row])
			x *= inv;
		for (std::size_t r = 0; r < rows.size(); ++r)
		{
			if (r == pivot_row || rows[r][col].is_zero())
				continue;
			Scalar f = rows[r][col];
			for (std::size_t c = 0; c < cols; ++c)
				rows[r][c] -= f * rows[pivot_row][c];
		}
		++pivot_row;
	}
	rows.resize(pivot_row);
	return rows;
}

std::size_t rank(std::vector<Vector> rows) { return row_space_basis(std::move(rows)).size(); }

std::size_t rank(OperatorMatrix const &m)
{
	std::vector<Vector> rows;
	for (std::size_t r = 0; r < m.dim(); ++r)
	{
		Vector row(m.dim());
		for (std::size_t c = 0; c < m.dim(); ++c)
			row[c] = m(r, c);
		rows.push_back(std::move(row));
	}
	return rank(std::move(rows));
}

std::optional<OperatorMatrix> inverse(OperatorMatrix const &m)
{
	std::size_t const n = m.dim();
	// Gauss-Jordan on [m | I]
	std::vector<Vector> aug;
	for (std::size_t r = 0; r < n; ++r)
	{
		Vector row(2 * n);
		for (std::size_t c = 0; c < n; ++c)
			row[c] = m(r, c);
		row[n + r] = 1;
		aug.push_back(std::move(row));
	}
	auto reduced = row_space_basis(std::move(aug));
	if (reduced.size() < n)
		return std::nullopt;
	for (std::size_t r = 0; r < n; ++r)
		if (!(reduced[r][r] == Scalar(1)))
			return std::nullopt;
	OperatorMatrix out(n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			out(r, c) = reduced[r][n + c];
	return out;
}

} // namespace prelie
