#include "prelie/catalog.h"

#include "prelie/error.h"

#include <functional>

namespace prelie {

namespace {

using Builder = std::function<Algebra(ParamMap const &)>;

struct Fixture
{
	CatalogEntry entry;
	Builder build;
};

// 1-based convenience setter: e_i · e_j gets coefficient v on e_k
void put(Algebra &a, std::size_t i, std::size_t j, std::size_t k, Scalar const &v) { a.set(i - 1, j - 1, k - 1, v); }

// [e_i,e_j] = v e_k together with the skew partner
void bracket(Algebra &a, std::size_t i, std::size_t j, std::size_t k, Scalar const &v)
{
	put(a, i, j, k, v);
	put(a, j, i, k, -v);
}

Scalar const I = Scalar::i();

Algebra epsilon_table(Scalar const &along, Scalar const &against)
{
	Algebra a(3);
	for (auto [i, j, k] : {Triple{1, 2, 3}, Triple{2, 3, 1}, Triple{3, 1, 2}})
	{
		put(a, i, j, k, along);
		put(a, j, i, k, against);
	}
	return a;
}

Algebra sl2c_afa(ParamMap const &p)
{
	// basis H, E, F
	Algebra a(3);
	put(a, 1, 1, 1, p.at("lambda"));
	put(a, 1, 2, 2, 2);
	put(a, 2, 3, 1, 1);
	put(a, 3, 1, 3, 2);
	return a;
}

Algebra sl2c(ParamMap const &)
{
	Algebra a(3);
	bracket(a, 1, 2, 2, 2);
	bracket(a, 1, 3, 3, -2);
	bracket(a, 2, 3, 1, 1);
	return a;
}

Algebra su2_afa(ParamMap const &)
{
	Algebra a(3);
	put(a, 1, 1, 3, I);
	put(a, 2, 2, 3, I);
	put(a, 3, 3, 3, 2 * I);
	put(a, 1, 2, 3, 1);
	put(a, 2, 3, 1, 1);
	put(a, 2, 3, 2, I);
	put(a, 3, 1, 1, I);
	put(a, 3, 1, 2, 1);
	put(a, 2, 1, 3, -1);
	put(a, 3, 2, 1, -1);
	put(a, 3, 2, 2, I);
	put(a, 1, 3, 1, I);
	put(a, 1, 3, 2, -1);
	return a;
}

Algebra su2(ParamMap const &) { return epsilon_table(2, -2); }

Algebra cross_product(ParamMap const &) { return epsilon_table(1, -1); }

Algebra s3_alpha_beta(ParamMap const &p)
{
	Algebra a = epsilon_table(p.at("alpha"), p.at("beta"));
	for (std::size_t i = 1; i <= 3; ++i)
		put(a, i, i, i, 1);
	return a;
}

Algebra dihedral_quandle(ParamMap const &) { return s3_alpha_beta({{"alpha", 1}, {"beta", 1}}); }

Algebra ex21_afa(ParamMap const &p)
{
	Algebra a(3);
	put(a, 1, 1, 1, 1);
	put(a, 2, 2, 2, p.at("lambda2"));
	put(a, 3, 3, 3, p.at("lambda3"));
	put(a, 1, 2, 2, 1);
	put(a, 1, 3, 3, 1);
	return a;
}

Algebra ex21_bracket(ParamMap const &)
{
	Algebra a(3);
	bracket(a, 1, 2, 2, 1);
	bracket(a, 1, 3, 3, 1);
	return a;
}

Algebra ex22_afa(ParamMap const &p)
{
	Scalar const &delta = p.at("delta");
	Algebra a(3);
	put(a, 1, 2, 2, delta);
	put(a, 2, 1, 2, -I * delta);
	put(a, 3, 1, 3, delta);
	put(a, 1, 3, 3, -I * delta);
	return a;
}

Algebra ex22_bracket(ParamMap const &)
{
	Algebra a(3);
	bracket(a, 1, 2, 2, 1);
	bracket(a, 3, 1, 3, 1);
	return a;
}

Algebra ex22_extended(ParamMap const &p)
{
	Algebra a = ex22_bracket(p);
	bracket(a, 2, 3, 1, make_rational(1, 2));
	return a;
}

Algebra e1e2_e1(ParamMap const &)
{
	Algebra a(3);
	bracket(a, 1, 2, 1, 1);
	return a;
}

Algebra abelian(ParamMap const &p)
{
	Scalar const &n = p.at("n");
	if (!(n.im() == 0) || n.re().get_den() != 1 || n.re() < 1 || n.re() > static_cast<long>(max_dim))
		throw DomainError("abelian: parameter n must be an integer in 1.." + std::to_string(max_dim));
	return Algebra(n.re().get_num().get_ui());
}

std::vector<Fixture> const &fixtures()
{
	using K = FixtureKind;
	static std::vector<Fixture> const table = {
	    {{"sl2c-afa", K::algebra, "AFA on sl(2,C) in the basis H,E,F; H.H = lambda H", {{"lambda", 2}}}, sl2c_afa},
	    {{"sl2c", K::lie, "sl(2,C): [H,E]=2E, [H,F]=-2F, [E,F]=H", {}}, sl2c},
	    {{"su2-afa", K::algebra, "AFA on su(2) with projection order 2", {}}, su2_afa},
	    {{"su2", K::lie, "su(2): [X_i,X_j] = 2 eps_ijk X_k", {}}, su2},
	    {{"cross-product", K::algebra, "cross product on C^3 (A3-associative)", {}}, cross_product},
	    {{"dihedral-quandle", K::algebra, "dihedral quandle of order 3 (commutative, A3-associative)", {}},
	     dihedral_quandle},
	    {{"s3-alpha-beta",
	      K::algebra,
	      "S3-associative table with e_i.e_j = alpha e_k, e_j.e_i = beta e_k (ijk cyclic)",
	      {{"alpha", 1}, {"beta", 2}}},
	     s3_alpha_beta},
	    {{"ex2.1-afa", K::algebra, "AFA with e1.e1=e1, e2.e2=lambda2 e2, e3.e3=lambda3 e3, e1.e2=e2, e1.e3=e3",
	      {{"lambda2", 1}, {"lambda3", 1}}},
	     ex21_afa},
	    {{"ex2.1-bracket", K::lie, "solvable: [e1,e2]=e2, [e1,e3]=e3", {}}, ex21_bracket},
	    {{"ex2.2-afa", K::algebra, "AFA with e1.e2=delta e2, e2.e1=-i delta e2, e3.e1=delta e3, e1.e3=-i delta e3",
	      {{"delta", Scalar(make_rational(1, 2), make_rational(1, 2))}}},
	     ex22_afa},
	    {{"ex2.2-bracket", K::lie, "solvable: [e1,e2]=e2, [e3,e1]=e3", {}}, ex22_bracket},
	    {{"ex2.2-extended", K::lie, "[e1,e2]=e2, [e3,e1]=e3, [e2,e3]=1/2 e1 (sl(2,C) up to scaling)", {}},
	     ex22_extended},
	    {{"e1e2-e1", K::lie, "solvable, dim 3: [e1,e2]=e1", {}}, e1e2_e1},
	    {{"abelian3", K::lie, "abelian Lie algebra of dimension 3", {}},
	     [](ParamMap const &) { return Algebra(3); }},
	    {{"abelian", K::lie, "abelian Lie algebra of dimension n", {{"n", 3}}}, abelian},
	};
	return table;
}

Fixture const &find_fixture(std::string_view name)
{
	for (auto const &f : fixtures())
		if (f.entry.name == name)
			return f;
	std::string names;
	for (auto const &f : fixtures())
		names += (names.empty() ? "" : ", ") + f.entry.name;
	throw LookupError("unknown catalog name '" + std::string(name) + "'; available: " + names);
}

} // namespace

std::vector<CatalogEntry> const &catalog_entries()
{
	static std::vector<CatalogEntry> const entries = [] {
		std::vector<CatalogEntry> out;
		for (auto const &f : fixtures())
			out.push_back(f.entry);
		return out;
	}();
	return entries;
}

CatalogEntry const &catalog_entry(std::string_view name) { return find_fixture(name).entry; }

Algebra catalog(std::string_view name, ParamMap const &params)
{
	auto const &f = find_fixture(name);
	ParamMap merged = f.entry.defaults;
	for (auto const &[key, value] : params)
	{
		auto it = merged.find(key);
		if (it == merged.end())
			throw LookupError("catalog entry '" + f.entry.name + "' has no parameter '" + key + "'");
		it->second = value;
	}
	return f.build(merged);
}

LieAlgebra catalog_lie(std::string_view name, ParamMap const &params)
{
	return validate_lie(catalog(name, params));
}

} // namespace prelie
