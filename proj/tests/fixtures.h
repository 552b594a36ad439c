#pragma once

#include "prelie/algebra.h"
#include "prelie/error.h"
#include "prelie/scalar.h"

#include <initializer_list>
#include <string_view>
#include <tuple>

namespace prelie::test {

inline Scalar S(std::string_view text) { return parse_scalar(text); }

using Entry = std::tuple<std::size_t, std::size_t, std::size_t, Scalar>;

// structure constants with 1-based indices
inline Algebra table(std::size_t n, std::initializer_list<Entry> entries)
{
	Algebra a(n);
	for (auto const &[i, j, k, v] : entries)
		a.set(i - 1, j - 1, k - 1, v);
	return a;
}

inline Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i - 1); }

inline Vector vec(std::initializer_list<char const *> xs)
{
	Vector v;
	for (auto x : xs)
		v.push_back(S(x));
	return v;
}

// 1-based triple
inline Triple T(std::size_t i, std::size_t j, std::size_t k) { return {i - 1, j - 1, k - 1}; }

} // namespace prelie::test
