#include "prelie/scalar.h"

#include "prelie/error.h"

#include <cctype>
#include <ostream>
#include <vector>

namespace prelie {

std::string format_triple(Triple const &t)
{
	return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
	       std::to_string(t[2] + 1) + ")";
}

ValidationError::ValidationError(Kind kind, Triple where, std::string const &detail)
    : std::runtime_error((kind == Kind::skew ? "skew-symmetry violated at " : "Jacobi identity violated at ") +
                         format_triple(where) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind), where_(where)
{}

BudgetError::BudgetError(unsigned long long required, unsigned long long limit)
    : std::runtime_error("enumeration needs " + (required == 0 ? std::string("more than 2^64") : std::to_string(required)) +
                         " assignments, limit is " + std::to_string(limit) + " (pass an explicit override to run anyway)"),
      required_(required)
{}

Rational make_rational(long numerator, long denominator)
{
	if (denominator == 0)
		throw DomainError("rational with zero denominator");
	Rational q(numerator, denominator);
	q.canonicalize();
	return q;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
	re_.canonicalize();
	im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const
{
	if (is_zero())
		throw DomainError("division by zero in Q(i)");
	Rational n = norm();
	return {re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator+=(GaussianRational const &b)
{
	re_ += b.re_;
	im_ += b.im_;
	return *this;
}

GaussianRational &GaussianRational::operator-=(GaussianRational const &b)
{
	re_ -= b.re_;
	im_ -= b.im_;
	return *this;
}

GaussianRational &GaussianRational::operator*=(GaussianRational const &b)
{
	if (sgn(b.im_) == 0)
	{
		re_ *= b.re_;
		im_ *= b.re_;
		return *this;
	}
	Rational re = re_ * b.re_ - im_ * b.im_;
	im_ = re_ * b.im_ + im_ * b.re_;
	re_ = std::move(re);
	return *this;
}

GaussianRational &GaussianRational::operator/=(GaussianRational const &b) { return *this *= b.inverse(); }

void GaussianRational::add_product(GaussianRational const &a, GaussianRational const &b)
{
	if (a.is_zero() || b.is_zero())
		return;
	if (sgn(a.im_) == 0 && sgn(b.im_) == 0)
	{
		re_ += a.re_ * b.re_;
		return;
	}
	re_ += a.re_ * b.re_ - a.im_ * b.im_;
	im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::strong_ordering operator<=>(GaussianRational const &a, GaussianRational const &b)
{
	if (int c = cmp(a.re_, b.re_); c != 0)
		return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
	int c = cmp(a.im_, b.im_);
	if (c == 0)
		return std::strong_ordering::equal;
	return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

GaussianRational arith(GaussianRational const &a, GaussianRational const &b, ArithOp op)
{
	switch (op)
	{
	case ArithOp::add:
		return a + b;
	case ArithOp::sub:
		return a - b;
	case ArithOp::mul:
		return a * b;
	case ArithOp::div:
		return a / b;
	}
	throw std::logic_error("unknown arithmetic op");
}

namespace {

// Cursor over the input with whitespace removed; positions refer to the
// original text so diagnostics point at the right column.
class ScalarLexer
{
  public:
	explicit ScalarLexer(std::string_view text)
	{
		for (std::size_t p = 0; p < text.size(); ++p)
			if (!std::isspace(static_cast<unsigned char>(text[p])))
				chars_.push_back({text[p], p});
		end_pos_ = text.size();
	}

	bool done() const { return at_ == chars_.size(); }
	char peek() const { return done() ? '\0' : chars_[at_].c; }
	std::size_t pos() const { return done() ? end_pos_ : chars_[at_].pos; }
	char take() { return chars_[at_++].c; }

	bool accept(char c)
	{
		if (peek() != c || done())
			return false;
		++at_;
		return true;
	}

	std::string digits()
	{
		std::string s;
		while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
			s += take();
		return s;
	}

  private:
	struct Item
	{
		char c;
		std::size_t pos;
	};
	std::vector<Item> chars_;
	std::size_t at_ = 0;
	std::size_t end_pos_ = 0;
};

struct Term
{
	Rational value;
	bool imaginary = false;
};

Term parse_term(ScalarLexer &lex)
{
	if (lex.accept('i'))
		return {1, true};
	std::size_t start = lex.pos();
	std::string num = lex.digits();
	if (num.empty())
		throw ParseError("expected a number or 'i'", start);
	Rational value(num);
	if (lex.accept('/'))
	{
		std::size_t den_pos = lex.pos();
		std::string den = lex.digits();
		if (den.empty())
			throw ParseError("expected a denominator", den_pos);
		mpz_class d(den);
		if (d == 0)
			throw ParseError("denominator must be positive", den_pos);
		value = Rational(mpz_class(num), d);
		value.canonicalize();
	}
	bool imaginary = lex.accept('i');
	return {value, imaginary};
}

} // namespace

GaussianRational parse_scalar(std::string_view text)
{
	ScalarLexer lex(text);
	if (lex.done())
		throw ParseError("empty scalar", 0);

	bool negative = false;
	if (lex.peek() == '+' || lex.peek() == '-')
		negative = lex.take() == '-';
	Term first = parse_term(lex);
	if (negative)
		first.value = -first.value;
	if (lex.done())
		return first.imaginary ? GaussianRational(0, first.value) : GaussianRational(first.value);

	std::size_t sign_pos = lex.pos();
	if (first.imaginary)
		throw ParseError("imaginary term must come last", sign_pos);
	if (lex.peek() != '+' && lex.peek() != '-')
		throw ParseError(std::string("unexpected character '") + lex.peek() + "'", sign_pos);
	bool second_negative = lex.take() == '-';
	std::size_t term_pos = lex.pos();
	Term second = parse_term(lex);
	if (!second.imaginary)
		throw ParseError("second term must be imaginary", term_pos);
	if (!lex.done())
		throw ParseError(std::string("unexpected character '") + lex.peek() + "'", lex.pos());
	if (second_negative)
		second.value = -second.value;
	return {first.value, second.value};
}

std::string format_scalar(GaussianRational const &x)
{
	if (sgn(x.im()) == 0)
		return x.re().get_str();
	Rational mag = abs(x.im());
	std::string imag = (mag == 1 ? std::string() : mag.get_str()) + "i";
	if (sgn(x.re()) == 0)
		return (sgn(x.im()) < 0 ? "-" : "") + imag;
	return x.re().get_str() + (sgn(x.im()) < 0 ? "-" : "+") + imag;
}

std::ostream &operator<<(std::ostream &os, GaussianRational const &x) { return os << format_scalar(x); }

} // namespace prelie
