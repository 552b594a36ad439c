#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace prelie {

// Canonical arbitrary-precision rational (positive denominator, reduced).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Exact element re + im·i of the Gaussian rationals Q(i).
///
/// Every coefficient handled by the engine lives here; there is no
/// floating-point path. Both components are kept canonical, so equality
/// is component-wise equality.
class GaussianRational
{
  public:
	GaussianRational() = default;
	GaussianRational(int value) : re_(value) {}
	GaussianRational(long value) : re_(value) {}
	GaussianRational(Rational re, Rational im = 0);

	static GaussianRational i() { return {0, 1}; }

	Rational const &re() const noexcept { return re_; }
	Rational const &im() const noexcept { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	GaussianRational conj() const { return {re_, -im_}; }
	Rational norm() const { return re_ * re_ + im_ * im_; }
	GaussianRational inverse() const; // throws DomainError on zero

	GaussianRational operator-() const { return {-re_, -im_}; }
	GaussianRational &operator+=(GaussianRational const &b);
	GaussianRational &operator-=(GaussianRational const &b);
	GaussianRational &operator*=(GaussianRational const &b);
	GaussianRational &operator/=(GaussianRational const &b);

	// this += a * b without temporaries for the real/imag split
	void add_product(GaussianRational const &a, GaussianRational const &b);

	friend GaussianRational operator+(GaussianRational a, GaussianRational const &b) { return a += b; }
	friend GaussianRational operator-(GaussianRational a, GaussianRational const &b) { return a -= b; }
	friend GaussianRational operator*(GaussianRational a, GaussianRational const &b) { return a *= b; }
	friend GaussianRational operator/(GaussianRational a, GaussianRational const &b) { return a /= b; }

	friend bool operator==(GaussianRational const &a, GaussianRational const &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}

	// Total order (real part first); used only for canonical sorting.
	friend std::strong_ordering operator<=>(GaussianRational const &a, GaussianRational const &b);

  private:
	Rational re_ = 0;
	Rational im_ = 0;
};

using Scalar = GaussianRational;

enum class ArithOp
{
	add,
	sub,
	mul,
	div
};

GaussianRational arith(GaussianRational const &a, GaussianRational const &b, ArithOp op);

/// Parses `[±]R [± R i]` where R = int[/posint]; `i`, `-i` and `Ri` are
/// accepted as imaginary terms. Whitespace is ignored.
GaussianRational parse_scalar(std::string_view text);

std::string format_scalar(GaussianRational const &x);

std::ostream &operator<<(std::ostream &os, GaussianRational const &x);

} // namespace prelie
