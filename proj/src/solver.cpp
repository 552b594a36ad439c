#include "prelie/solver.h"

#include "prelie/sweeps.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace prelie {

namespace {

// orientation rule for the free variable of a bracket pair
bool positive(Scalar const &s) { return s.re() > 0 || (s.re() == 0 && s.im() > 0); }

std::size_t flat(std::size_t n, std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; }

void require_dim(LieAlgebra const &l, Algebra const &d)
{
	if (l.dim() != d.dim())
		throw ShapeError("product of dimension " + std::to_string(d.dim()) + " checked against Lie algebra of dimension " +
		                 std::to_string(l.dim()));
}

std::vector<Triple> custom_support(LieAlgebra const &l, std::vector<Triple> const &custom)
{
	std::size_t const n = l.dim();
	std::set<Triple> seen;
	for (auto const &t : custom)
	{
		if (t[0] >= n || t[1] >= n || t[2] >= n)
			throw SupportError("support entry " + format_triple(t) + " is out of range");
		if (!seen.insert(t).second)
			throw SupportError("support entry " + format_triple(t) + " is listed twice");
		if (t[0] != t[1] && seen.count({t[1], t[0], t[2]}))
			throw SupportError("support lists both " + format_triple(t) + " and its partner " +
			                   format_triple({t[1], t[0], t[2]}));
	}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!l(i, j, k).is_zero() && !seen.count({i, j, k}) && !seen.count({j, i, k}))
					throw SupportError("bracket constant c" + format_triple({i, j, k}) +
					                   " is nonzero but neither orientation is in the support");
	return {seen.begin(), seen.end()};
}

} // namespace

AnsatzSupport build_ansatz(LieAlgebra const &l, SupportPolicy policy, std::vector<Triple> const &custom)
{
	std::size_t const n = l.dim();
	std::vector<Triple> free;
	std::vector<bool> touched(n, false);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!l(i, j, k).is_zero())
					touched[i] = touched[j] = touched[k] = true;

	switch (policy)
	{
	case SupportPolicy::lie:
	case SupportPolicy::active:
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
				{
					if (i == j)
					{
						if (policy == SupportPolicy::lie || (touched[i] && touched[k]))
							free.push_back({i, j, k});
					}
					else if (positive(l(i, j, k)))
						free.push_back({i, j, k});
				}
		break;
	case SupportPolicy::full:
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i; j < n; ++j)
				for (std::size_t k = 0; k < n; ++k)
					free.push_back({i, j, k});
		break;
	case SupportPolicy::custom:
		free = custom_support(l, custom);
		break;
	}

	AnsatzSupport s;
	s.dim = n;
	s.free_vars = std::move(free);
	s.entries.resize(n * n * n);
	for (std::size_t v = 0; v < s.free_vars.size(); ++v)
	{
		auto [i, j, k] = s.free_vars[v];
		s.entries[flat(n, i, j, k)].var = v;
		if (i != j)
		{
			// d(j,i,k) = d(i,j,k) − c(i,j,k)
			auto &partner = s.entries[flat(n, j, i, k)];
			partner.var = v;
			partner.constant = -l(i, j, k);
		}
	}
	return s;
}

Algebra AnsatzSupport::assemble(std::vector<Scalar> const &values) const
{
	if (values.size() != free_vars.size())
		throw ShapeError("expected " + std::to_string(free_vars.size()) + " values, got " +
		                 std::to_string(values.size()));
	Algebra a(dim);
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = 0; j < dim; ++j)
			for (std::size_t k = 0; k < dim; ++k)
			{
				auto const &e = entry(i, j, k);
				a.set(i, j, k, e.var ? e.constant + values[*e.var] : e.constant);
			}
	return a;
}

std::optional<std::vector<Scalar>> AnsatzSupport::coordinates(Algebra const &d) const
{
	if (d.dim() != dim)
		return std::nullopt;
	std::vector<Scalar> values;
	for (auto const &[i, j, k] : free_vars)
		values.push_back(d(i, j, k));
	if (!(assemble(values) == d))
		return std::nullopt;
	return values;
}

void Polynomial::add(Monomial const &m, Scalar const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms.try_emplace(m, c);
	if (inserted)
		return;
	it->second += c;
	if (it->second.is_zero())
		terms.erase(it);
}

void Polynomial::add_product(AffineEntry const &p, AffineEntry const &q, Scalar const &sign)
{
	if (!p.var && !q.var)
	{
		add({}, sign * p.constant * q.constant);
		return;
	}
	add({}, sign * p.constant * q.constant);
	if (q.var)
		add({static_cast<int>(*q.var), -1}, sign * p.constant);
	if (p.var)
		add({static_cast<int>(*p.var), -1}, sign * q.constant);
	if (p.var && q.var)
	{
		int a = static_cast<int>(*p.var), b = static_cast<int>(*q.var);
		add({std::min(a, b), std::max(a, b)}, sign);
	}
}

Polynomial Polynomial::normalized() const
{
	if (terms.empty())
		return *this;
	Scalar inv = terms.begin()->second.inverse();
	Polynomial out;
	for (auto const &[m, c] : terms)
		out.terms.emplace(m, c * inv);
	return out;
}

Scalar Polynomial::evaluate(std::vector<Scalar> const &values) const
{
	Scalar sum;
	for (auto const &[m, c] : terms)
	{
		Scalar t = c;
		if (m.a >= 0)
			t *= values.at(static_cast<std::size_t>(m.a));
		if (m.b >= 0)
			t *= values.at(static_cast<std::size_t>(m.b));
		sum += t;
	}
	return sum;
}

std::vector<Polynomial> QuadraticSystem::distinct() const
{
	std::vector<Polynomial> out;
	for (auto const &p : polynomials)
		out.push_back(p.normalized());
	auto less = [](Polynomial const &x, Polynomial const &y) {
		return std::lexicographical_compare_three_way(x.terms.begin(), x.terms.end(), y.terms.begin(),
		                                              y.terms.end()) < 0;
	};
	std::sort(out.begin(), out.end(), less);
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

QuadraticSystem QuadraticSystem::substitute(std::map<std::size_t, Scalar> const &fixed) const
{
	QuadraticSystem out;
	std::vector<int> remap(unknowns.size(), -1);
	for (std::size_t v = 0; v < unknowns.size(); ++v)
		if (!fixed.count(v))
		{
			remap[v] = static_cast<int>(out.unknowns.size());
			out.unknowns.push_back(unknowns[v]);
		}

	for (std::size_t p = 0; p < polynomials.size(); ++p)
	{
		Polynomial q;
		for (auto const &[m, c] : polynomials[p].terms)
		{
			Scalar coef = c;
			std::vector<int> vars;
			for (int v : {m.a, m.b})
			{
				if (v < 0)
					continue;
				if (auto it = fixed.find(static_cast<std::size_t>(v)); it != fixed.end())
					coef *= it->second;
				else
					vars.push_back(remap[static_cast<std::size_t>(v)]);
			}
			std::sort(vars.begin(), vars.end());
			Monomial nm;
			if (vars.size() == 1)
				nm.a = vars[0];
			else if (vars.size() == 2)
				nm = {vars[0], vars[1]};
			q.add(nm, coef);
		}
		if (!q.is_zero())
		{
			out.polynomials.push_back(std::move(q));
			out.provenance.push_back(provenance[p]);
		}
	}
	return out;
}

bool QuadraticSystem::satisfied_by(std::vector<Scalar> const &values) const
{
	return std::all_of(polynomials.begin(), polynomials.end(),
	                   [&](Polynomial const &p) { return p.evaluate(values).is_zero(); });
}

QuadraticSystem build_afa_system(LieAlgebra const &l, AnsatzSupport const &s)
{
	std::size_t const n = l.dim();
	if (s.dim != n)
		throw ShapeError("ansatz dimension does not match the Lie algebra");
	QuadraticSystem sys;
	sys.unknowns = s.free_vars;

	auto is_null = [](AffineEntry const &e) { return !e.var && e.constant.is_zero(); };
	Scalar const one = 1, minus_one = -1;

	// (e_a,e_b,e_c)_out = Σ_k d(a,b,k) d(k,c,out) − d(b,c,k) d(a,k,out)
	auto add_associator = [&](Polynomial &p, std::size_t a, std::size_t b, std::size_t c, std::size_t out,
	                          Scalar const &sign) {
		Scalar neg = -sign;
		for (std::size_t k = 0; k < n; ++k)
		{
			auto const &ab = s.entry(a, b, k);
			auto const &kc = s.entry(k, c, out);
			if (!is_null(ab) && !is_null(kc))
				p.add_product(ab, kc, sign);
			auto const &bc = s.entry(b, c, k);
			auto const &ak = s.entry(a, k, out);
			if (!is_null(bc) && !is_null(ak))
				p.add_product(bc, ak, neg);
		}
	};

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t m = 0; m < n; ++m)
				for (std::size_t out = 0; out < n; ++out)
				{
					Polynomial p;
					add_associator(p, i, j, m, out, one);
					add_associator(p, m, j, i, out, minus_one);
					if (p.is_zero())
						continue;
					sys.polynomials.push_back(std::move(p));
					sys.provenance.push_back({{i, j, m}, out});
				}
	return sys;
}

std::string format_polynomial(Polynomial const &p, std::vector<Triple> const &unknowns)
{
	if (p.is_zero())
		return "0";
	auto var = [&](int v) {
		auto const &t = unknowns.at(static_cast<std::size_t>(v));
		return "d" + format_triple(t);
	};
	std::ostringstream os;
	bool first = true;
	for (auto const &[m, c] : p.terms)
	{
		std::string mono;
		if (m.a >= 0 && m.a == m.b)
			mono = var(m.a) + "^2";
		else if (m.b >= 0)
			mono = var(m.a) + "*" + var(m.b);
		else if (m.a >= 0)
			mono = var(m.a);

		bool complex = !(c.re() == 0) && !(c.im() == 0);
		bool negative = !complex && (c.re() < 0 || c.im() < 0);
		Scalar mag = negative ? -c : c;
		std::string coef = format_scalar(mag);
		if (complex)
			coef = "(" + coef + ")";

		if (!first)
			os << (negative ? " - " : " + ");
		else if (negative)
			os << "-";
		if (mono.empty())
			os << coef;
		else if (mag == Scalar(1))
			os << mono;
		else
			os << coef << "*" << mono;
		first = false;
	}
	return os.str();
}

CountReport constraint_counts(LieAlgebra const &l, std::uint64_t p)
{
	std::uint64_t const n = l.dim();
	CountReport r;
	r.max_params = p * n * (n - 1) / 2;
	r.max_pair_conds = p * p * n * (n - 1);
	r.max_triple_conds = n >= 2 ? 2 * p * p * n * (n - 1) * (n - 2) : 0;

	AnsatzSupport s = build_ansatz(l, SupportPolicy::lie);
	r.actual_params = static_cast<std::size_t>(
	    std::count_if(s.free_vars.begin(), s.free_vars.end(), [](Triple const &t) { return t[0] != t[1]; }));
	r.actual_conditions = build_afa_system(l, s).distinct().size();
	return r;
}

VerificationReport verify_prestructure(LieAlgebra const &l, Algebra const &d)
{
	require_dim(l, d);
	std::size_t const n = d.dim();
	VerificationReport r;
	Algebra c = commutator_algebra(d);
	for (std::size_t i = 0; i < n && !r.commutator_mismatch; ++i)
		for (std::size_t j = 0; j < n && !r.commutator_mismatch; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!(c(i, j, k) == l(i, j, k)))
				{
					r.commutator_mismatch = Triple{i, j, k};
					break;
				}
	r.prealgebraic = !r.commutator_mismatch;
	r.classes = classify(d);
	r.afa = r.classes.flag(SubgroupId::t13);
	r.afa_witness = r.classes.witness(SubgroupId::t13);
	r.nontrivial = !r.classes.flag(SubgroupId::trivial);
	return r;
}

namespace {

SolutionRecord make_record(LieAlgebra const &l, Algebra d, std::string label, std::vector<int> branch)
{
	SolutionRecord r;
	std::size_t const n = d.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!d(i, j, k).is_zero())
					r.assignment.emplace(Triple{i, j, k}, d(i, j, k));
	r.verified = verify_prestructure(l, d).ok();
	r.tensor = std::move(d);
	r.class_label = std::move(label);
	r.branch = std::move(branch);
	return r;
}

// d = c on the positive orientation of every bracket pair, zero elsewhere
Algebra class_one_base(LieAlgebra const &l)
{
	std::size_t const n = l.dim();
	Algebra d(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (i != j && positive(l(i, j, k)))
					d.set(i, j, k, l(i, j, k));
	return d;
}

// ordered pairs (i,j), i ≠ j, with c(i,j,target) ≠ 0 where target is i or j
std::vector<std::pair<std::size_t, std::size_t>> pairs_with(LieAlgebra const &l, bool on_first)
{
	std::vector<std::pair<std::size_t, std::size_t>> out;
	for (std::size_t i = 0; i < l.dim(); ++i)
		for (std::size_t j = 0; j < l.dim(); ++j)
			if (i != j && !l(i, j, on_first ? i : j).is_zero())
				out.emplace_back(i, j);
	return out;
}

Scalar half_one_plus(int sign) { return {make_rational(1, 2), make_rational(sign, 2)}; }

} // namespace

std::vector<SolutionRecord> class_candidates(LieAlgebra const &l, SolutionClass cls)
{
	std::vector<SolutionRecord> out;
	Scalar const I = Scalar::i();
	switch (cls)
	{
	case SolutionClass::I:
		out.push_back(make_record(l, class_one_base(l), "I", {}));
		break;

	case SolutionClass::II: {
		auto pairs = pairs_with(l, true);
		if (pairs.empty())
			break;
		std::size_t const count = std::size_t{1} << pairs.size();
		for (std::size_t mask = 0; mask < count; ++mask)
		{
			Algebra d(l.dim());
			std::vector<int> branch;
			for (std::size_t p = 0; p < pairs.size(); ++p)
			{
				auto [i, j] = pairs[p];
				int sign = (mask >> (pairs.size() - 1 - p)) & 1 ? -1 : 1;
				Scalar const &c = l(i, j, i);
				Scalar dij = half_one_plus(sign) * c; // δ c_iji
				d.set(j, i, i, Scalar(sign) * I * dij);
				d.set(i, j, i, std::move(dij));
				branch.push_back(sign);
			}
			out.push_back(make_record(l, std::move(d), "II", std::move(branch)));
		}
		break;
	}

	case SolutionClass::III:
		for (auto [i, j] : pairs_with(l, true))
		{
			Scalar const &c = l(i, j, i);
			Algebra a = class_one_base(l);
			a.set(i, j, i, c);
			a.set(j, i, i, 0);
			a.set(i, i, i, c);
			a.set(j, j, j, c);
			out.push_back(make_record(l, std::move(a), "III", {}));
			for (int sign : {1, -1})
			{
				Scalar delta = half_one_plus(sign);
				Algebra b = class_one_base(l);
				b.set(j, j, i, c);
				b.set(i, j, i, delta * c);
				b.set(j, i, i, (delta - 1) * c);
				out.push_back(make_record(l, std::move(b), "III", {sign}));
			}
		}
		break;

	case SolutionClass::IV:
		for (auto [i, j] : pairs_with(l, false))
		{
			Scalar const &c = l(i, j, j);
			Scalar const &cj = l(j, i, j);
			Algebra d = class_one_base(l);
			d.set(i, j, j, c * Scalar(make_rational(1, 2)));
			d.set(j, i, j, c * Scalar(make_rational(-1, 2)));
			d.set(j, j, j, cj);
			d.set(i, i, j, cj * Scalar(make_rational(1, 4)));
			out.push_back(make_record(l, std::move(d), "IV", {}));
		}
		break;
	}
	return out;
}

std::vector<Scalar> default_candidates()
{
	Rational const h = make_rational(1, 2);
	return {Scalar(0),     Scalar(1),        Scalar(-1),        Scalar(h),     Scalar(-h),
	        Scalar::i(),   -Scalar::i(),     Scalar(0, h),      Scalar(0, -h), Scalar(h, h),
	        Scalar(h, -h), Scalar(-h, -h),   Scalar(-h, h)};
}

namespace {

// Gaussian integer used by the search filter after clearing denominators.
struct GaussInt
{
	long long re = 0;
	long long im = 0;
};

inline void mul_add(GaussInt &acc, GaussInt const &x, GaussInt const &y, long long sign)
{
	acc.re += sign * (x.re * y.re - x.im * y.im);
	acc.im += sign * (x.re * y.im + x.im * y.re);
}

// Integer image of the ansatz: every entry scaled by a common denominator.
// Associators scale by its square, so zero tests are unchanged.
struct ScaledAnsatz
{
	std::size_t n = 0;
	std::vector<GaussInt> constants;            // per entry
	std::vector<std::vector<std::size_t>> uses; // entries driven by each var
	std::vector<GaussInt> cand;
	bool ok = false;
};

ScaledAnsatz scale_ansatz(AnsatzSupport const &s, std::vector<Scalar> const &cand)
{
	ScaledAnsatz out;
	out.n = s.dim;
	mpz_class den = 1;
	auto absorb = [&](Scalar const &x) {
		mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.re().get_den_mpz_t());
		mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.im().get_den_mpz_t());
	};
	for (auto const &e : s.entries)
		absorb(e.constant);
	for (auto const &c : cand)
		absorb(c);

	mpz_class bound = 0;
	auto to_int = [&](Scalar const &x, GaussInt &g) {
		mpq_class re = x.re() * den, im = x.im() * den;
		mpz_class r = re.get_num(), i = im.get_num();
		mpz_class mag = abs(r) + abs(i);
		if (mag > bound)
			bound = mag;
		if (!r.fits_slong_p() || !i.fits_slong_p())
			return false;
		g = {r.get_si(), i.get_si()};
		return true;
	};

	out.constants.resize(s.entries.size());
	out.uses.resize(s.free_vars.size());
	mpz_class max_const = 0, max_cand = 0;
	for (std::size_t e = 0; e < s.entries.size(); ++e)
	{
		bound = 0;
		if (!to_int(s.entries[e].constant, out.constants[e]))
			return out;
		max_const = std::max(max_const, bound);
		if (s.entries[e].var)
			out.uses[*s.entries[e].var].push_back(e);
	}
	for (auto const &c : cand)
	{
		GaussInt g;
		bound = 0;
		if (!to_int(c, g))
			return out;
		max_cand = std::max(max_cand, bound);
		out.cand.push_back(g);
	}
	// entries are bounded by M; associator components by 4nM²
	mpz_class m = max_const + max_cand;
	mpz_class worst = 8 * mpz_class(static_cast<unsigned long>(out.n)) * m * m;
	out.ok = worst < mpz_class("1000000000000000000");
	return out;
}

// AFA condition on the integer tensor; i < m suffices since (i,j,m) ↔ (m,j,i).
bool afa_holds(std::vector<GaussInt> const &d, std::size_t n)
{
	auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> GaussInt const & { return d[(i * n + j) * n + k]; };
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t m = i + 1; m < n; ++m)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t out = 0; out < n; ++out)
				{
					GaussInt acc;
					for (std::size_t k = 0; k < n; ++k)
					{
						mul_add(acc, at(i, j, k), at(k, m, out), 1);
						mul_add(acc, at(j, m, k), at(i, k, out), -1);
						mul_add(acc, at(m, j, k), at(k, i, out), -1);
						mul_add(acc, at(j, i, k), at(m, k, out), 1);
					}
					if (acc.re != 0 || acc.im != 0)
						return false;
				}
	return true;
}

bool afa_holds_exact(Algebra const &a)
{
	std::size_t const n = a.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t m = i + 1; m < n; ++m)
			for (std::size_t j = 0; j < n; ++j)
				if (!(basis_associator(a, i, j, m) == basis_associator(a, m, j, i)))
					return false;
	return true;
}

std::uint64_t enumeration_size(std::size_t radix, std::size_t vars)
{
	std::uint64_t total = 1;
	for (std::size_t v = 0; v < vars; ++v)
	{
		if (radix != 0 && total > UINT64_MAX / radix)
			return 0;
		total *= radix;
	}
	return total;
}

} // namespace

std::vector<SolutionRecord> brute_force_search(LieAlgebra const &l, AnsatzSupport const &s,
                                               std::vector<Scalar> candidates, SearchOptions const &opts)
{
	if (s.dim != l.dim())
		throw ShapeError("ansatz dimension does not match the Lie algebra");
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

	std::size_t const vars = s.free_vars.size();
	std::size_t const radix = candidates.size();
	std::uint64_t const total = enumeration_size(radix, vars);
	if (total == 0 && radix != 0)
		throw BudgetError(0, opts.limit);
	if (total > opts.limit && !opts.override_limit)
		throw BudgetError(total, opts.limit);
	if (radix == 0 && vars > 0)
		return {};

	ScaledAnsatz const scaled = scale_ansatz(s, candidates);
	std::size_t const n = s.dim;
	unsigned const workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));

	std::vector<std::vector<Algebra>> found(workers);
	auto run = [&](unsigned w) {
		std::uint64_t const begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
		std::uint64_t const end = begin + total / workers + (w < total % workers ? 1 : 0);
		if (begin >= end)
			return;

		// mixed-radix digits of `begin`, first variable most significant
		std::vector<std::size_t> digit(vars);
		{
			std::uint64_t rest = begin;
			for (std::size_t v = vars; v-- > 0;)
			{
				digit[v] = static_cast<std::size_t>(rest % radix);
				rest /= radix;
			}
		}

		std::vector<GaussInt> tensor = scaled.constants;
		auto load = [&](std::size_t v) {
			for (auto e : scaled.uses[v])
			{
				tensor[e].re = scaled.constants[e].re + scaled.cand[digit[v]].re;
				tensor[e].im = scaled.constants[e].im + scaled.cand[digit[v]].im;
			}
		};
		if (scaled.ok)
			for (std::size_t v = 0; v < vars; ++v)
				load(v);

		std::vector<Scalar> values(vars);
		for (std::uint64_t idx = begin; idx < end; ++idx)
		{
			bool pass;
			if (scaled.ok)
				pass = afa_holds(tensor, n);
			else
			{
				for (std::size_t v = 0; v < vars; ++v)
					values[v] = candidates[digit[v]];
				pass = afa_holds_exact(s.assemble(values));
			}
			if (pass)
			{
				for (std::size_t v = 0; v < vars; ++v)
					values[v] = candidates[digit[v]];
				Algebra d = s.assemble(values);
				if (verify_prestructure(l, d).ok())
					found[w].push_back(std::move(d));
			}
			// increment, least significant variable last
			for (std::size_t v = vars; v-- > 0;)
			{
				if (++digit[v] < radix)
				{
					if (scaled.ok)
						load(v);
					break;
				}
				digit[v] = 0;
				if (scaled.ok)
					load(v);
			}
		}
	};

	if (workers == 1)
		run(0);
	else
	{
		std::vector<std::thread> pool;
		for (unsigned w = 0; w < workers; ++w)
			pool.emplace_back(run, w);
		for (auto &t : pool)
			t.join();
	}

	std::vector<Algebra> all;
	for (auto &f : found)
		for (auto &d : f)
			all.push_back(std::move(d));
	std::sort(all.begin(), all.end());
	all.erase(std::unique(all.begin(), all.end()), all.end());

	std::vector<SolutionRecord> out;
	for (auto &d : all)
		out.push_back(make_record(l, std::move(d), "search", {}));
	return out;
}

bool check_s3_universality(LieAlgebra const &l, unsigned trials, std::uint64_t seed)
{
	Rng rng(seed);
	for (unsigned t = 0; t < trials; ++t)
	{
		Algebra d = random_prestructure(rng, l);
		if (!(commutator_algebra(d) == l.base()))
			return false;
		if (!subgroup_defect(d, SubgroupId::s3).holds)
			return false;
	}
	return true;
}

} // namespace prelie
