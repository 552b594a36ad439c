#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace prelie {

// Zero-based basis index triple used for witnesses and error locations.
using Triple = std::array<std::size_t, 3>;

std::string format_triple(Triple const &t); // prints 1-based "(i,j,k)"

class ParseError : public std::runtime_error
{
  public:
	ParseError(std::string const &what, std::size_t position)
	    : std::runtime_error(what + " at position " + std::to_string(position)),
	      position_(position)
	{}
	std::size_t position() const noexcept { return position_; }

  private:
	std::size_t position_;
};

class DomainError : public std::domain_error
{
	using std::domain_error::domain_error;
};

class ShapeError : public std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

class InvertibilityError : public std::runtime_error
{
	using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range
{
	using std::out_of_range::out_of_range;
};

class SupportError : public std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

class DocumentError : public std::runtime_error
{
	using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error
{
  public:
	enum class Kind
	{
		skew,
		jacobi
	};

	ValidationError(Kind kind, Triple where, std::string const &detail);
	Kind kind() const noexcept { return kind_; }
	Triple const &where() const noexcept { return where_; }

  private:
	Kind kind_;
	Triple where_;
};

class BudgetError : public std::runtime_error
{
  public:
	// required == 0 signals an enumeration size beyond 64 bits
	BudgetError(unsigned long long required, unsigned long long limit);
	unsigned long long required() const noexcept { return required_; }

  private:
	unsigned long long required_;
};

} // namespace prelie
