#include "prelie/regression.h"

#include "prelie/catalog.h"
#include "prelie/error.h"
#include "prelie/identities.h"
#include "prelie/lie.h"
#include "prelie/solver.h"
#include "prelie/sweeps.h"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <tuple>

namespace prelie {

namespace {

struct Recorder
{
	std::string group;
	std::vector<CheckResult> &out;

	void add(std::string check, bool passed, std::string detail = {})
	{
		out.push_back({group, std::move(check), passed, std::move(detail)});
	}
};

using Entry = std::tuple<std::size_t, std::size_t, std::size_t, Scalar>;

// 1-based structure constants
Algebra table(std::size_t n, std::initializer_list<Entry> entries)
{
	Algebra a(n);
	for (auto const &[i, j, k, v] : entries)
		a.set(i - 1, j - 1, k - 1, v);
	return a;
}

std::string vec(Vector const &v)
{
	std::string s = "(";
	for (std::size_t k = 0; k < v.size(); ++k)
		s += (k ? ", " : "") + format_scalar(v[k]);
	return s + ")";
}

std::string witness_text(std::optional<Witness> const &w)
{
	if (!w)
		return "";
	return "first failure at " + format_triple(w->triple) + ": " + vec(w->lhs) + " vs " + vec(w->rhs);
}

Scalar const I = Scalar::i();
Scalar half(long num = 1) { return Scalar(make_rational(num, 2)); }
Scalar delta(int sign) { return {make_rational(1, 2), make_rational(sign, 2)}; }

bool flag(Algebra const &a, SubgroupId g) { return classify(a).flag(g); }

void check_flags(Recorder &r, std::string const &name, Algebra const &a,
                 std::initializer_list<std::pair<SubgroupId, bool>> expected)
{
	auto rep = classify(a);
	for (auto [g, want] : expected)
	{
		bool got = rep.flag(g);
		std::string check = name + " " + std::string(subgroup_class(g)) + (want ? " holds" : " fails");
		r.add(check, got == want, got ? "" : witness_text(rep.witness(g)));
	}
}

std::vector<Algebra> sweep_algebras(RegressionOptions const &o)
{
	Rng rng(o.seed);
	std::vector<Algebra> out;
	for (unsigned t = 0; t < o.sweep; ++t)
		out.push_back(random_algebra(rng, 3));
	return out;
}

// first index at which pred fails, or nullopt
template <class Pred> std::optional<std::size_t> first_failure(std::vector<Algebra> const &v, Pred pred)
{
	for (std::size_t k = 0; k < v.size(); ++k)
		if (!pred(v[k]))
			return k;
	return std::nullopt;
}

std::string sweep_detail(std::optional<std::size_t> fail, std::size_t total)
{
	return fail ? "falsified by sample " + std::to_string(*fail) : std::to_string(total) + " samples";
}

bool contains(std::vector<SolutionRecord> const &records, Algebra const &d)
{
	return std::any_of(records.begin(), records.end(), [&](SolutionRecord const &s) { return s.tensor == d; });
}

// -------------------------------------------------------------------------

void ex21(Recorder &r, RegressionOptions const &)
{
	Algebra afa = catalog("ex2.1-afa");
	check_flags(r, "default lambda", afa,
	            {{SubgroupId::t13, true}, {SubgroupId::t12, false}, {SubgroupId::t23, false}});
	for (auto [l2, l3] : {std::pair{Scalar(0), Scalar(1)}, std::pair{Scalar(2), -half()}, std::pair{I, Scalar(3)}})
	{
		Algebra a = catalog("ex2.1-afa", {{"lambda2", l2}, {"lambda3", l3}});
		r.add("AFA for lambda2=" + format_scalar(l2) + ", lambda3=" + format_scalar(l3), flag(a, SubgroupId::t13));
	}
	Algebra bracket = catalog("ex2.1-bracket");
	r.add("commutator is [e1,e2]=e2, [e1,e3]=e3", commutator_algebra(afa) == bracket);
	auto series = derived_series(validate_lie(bracket));
	std::string dims;
	for (auto d : series.dims)
		dims += (dims.empty() ? "" : " > ") + std::to_string(d);
	r.add("bracket solvable", series.solvable, "derived dims " + dims);
}

void ex22(Recorder &r, RegressionOptions const &)
{
	Scalar const d0 = delta(1);
	Algebra afa = catalog("ex2.2-afa");
	r.add("AFA at delta=(1+i)/2", flag(afa, SubgroupId::t13));
	for (Scalar d : {Scalar(1), delta(-1), Scalar(make_rational(3))})
		r.add("AFA at delta=" + format_scalar(d), flag(catalog("ex2.2-afa", {{"delta", d}}), SubgroupId::t13));

	Scalar s = (d0 * Scalar(1, 1)).inverse();
	Algebra scaled = change_basis(commutator_algebra(afa), OperatorMatrix::scalar(3, s));
	r.add("rescaled commutator is [e1,e2]=e2, [e3,e1]=e3", scaled == catalog("ex2.2-bracket"),
	      "scale " + format_scalar(s));

	auto lie = validate_lie(catalog("ex2.2-bracket"));
	auto k = killing_semisimple(lie);
	r.add("bracket not semisimple", !k.semisimple, "Killing rank " + std::to_string(k.rank));
	r.add("bracket solvable", derived_series(lie).solvable);

	Algebra ext = change_basis(catalog("ex2.2-extended"), OperatorMatrix::scalar(3, 2));
	r.add("extended bracket scaled by 2 is sl(2,C)", ext == catalog("sl2c"));
}

void ex31(Recorder &r, RegressionOptions const &)
{
	auto lie = catalog_lie("ex2.2-bracket");
	auto records = class_candidates(lie, SolutionClass::II);
	bool all_verified = std::all_of(records.begin(), records.end(), [](auto const &s) { return s.verified; });
	r.add("class II yields four verified branch solutions", records.size() == 4 && all_verified,
	      std::to_string(records.size()) + " records");

	// display with the (1,2)-pair labels transposed: d(1,2,2)=δ, d(2,1,2)=±iδ
	std::vector<Algebra> expected;
	for (int s1 : {1, -1})
		for (int s2 : {1, -1})
		{
			Scalar a = delta(s1), b = delta(s2);
			expected.push_back(table(3, {{1, 2, 2, a}, {2, 1, 2, Scalar(s1) * I * a}, {3, 1, 3, b},
			                             {1, 3, 3, Scalar(s2) * I * b}}));
		}
	bool same = records.size() == expected.size() &&
	            std::all_of(expected.begin(), expected.end(), [&](Algebra const &d) { return contains(records, d); });
	r.add("records match the displayed solution (first pair labels transposed)", same);

	bool literal_fails = true;
	for (int s : {1, -1})
		for (int branch : {1, -1})
		{
			Scalar a = delta(s);
			Algebra lit = table(3, {{2, 1, 2, a}, {1, 2, 2, Scalar(branch) * I * a}, {3, 1, 3, a},
			                        {1, 3, 3, Scalar(branch) * I * a}});
			literal_fails = literal_fails && !verify_prestructure(lie, lit).prealgebraic;
		}
	r.add("literal labels d(2,1,2)=delta, d(1,2,2)=+-i delta give [e1,e2]=-e2", literal_fails);

	auto support = build_ansatz(lie, SupportPolicy::custom, {{0, 1, 1}, {2, 0, 2}});
	auto distinct = build_afa_system(lie, support).distinct();
	std::string polys;
	for (auto const &p : distinct)
		polys += (polys.empty() ? "" : "; ") + format_polynomial(p, support.free_vars);
	r.add("AFA system decouples into two quadratics", distinct.size() == 2, polys);

	auto found = brute_force_search(lie, support, default_candidates());
	bool same_set = found.size() == records.size() &&
	                std::all_of(found.begin(), found.end(), [&](auto const &s) { return contains(records, s.tensor); });
	r.add("brute force finds exactly the class II set", same_set, std::to_string(found.size()) + " solutions");
}

Algebra ex32_literal() { return table(3, {{1, 1, 1, 1}, {2, 2, 2, 1}, {1, 2, 1, 1}}); }

std::vector<SolutionRecord> const &e1e2_search()
{
	static std::vector<SolutionRecord> const found = [] {
		auto lie = catalog_lie("e1e2-e1");
		return brute_force_search(lie, build_ansatz(lie, SupportPolicy::active), default_candidates());
	}();
	return found;
}

void ex32(Recorder &r, RegressionOptions const &)
{
	auto lie = catalog_lie("e1e2-e1");
	auto v = verify_prestructure(lie, ex32_literal());
	r.add("printed class III assignment verifies", v.ok(), witness_text(v.afa_witness));
	r.add("class III generator emits it", contains(class_candidates(lie, SolutionClass::III), ex32_literal()));
	auto const &found = e1e2_search();
	r.add("brute force rediscovers it", contains(found, ex32_literal()),
	      std::to_string(found.size()) + " solutions on the active support");
}

void ex33(Recorder &r, RegressionOptions const &)
{
	auto lie = catalog_lie("e1e2-e1");
	// second printed d(1,2,1) read as d(2,1,1)
	Algebra printed = table(3, {{1, 1, 1, 1}, {2, 2, 1, 1}, {1, 2, 1, half()}, {2, 1, 1, -half()}});
	auto v = verify_prestructure(lie, printed);
	r.add("printed class IV assignment verifies", v.ok(),
	      v.ok() ? "" : witness_text(v.afa_witness) + "; AFA forces d(1,1,1) d(2,2,1) = 1/4");
	auto const &found = e1e2_search();
	r.add("brute force rediscovers the printed class IV assignment", contains(found, printed));

	auto cands = class_candidates(lie, SolutionClass::IV);
	bool ok = !cands.empty() && std::all_of(cands.begin(), cands.end(), [](auto const &s) { return s.verified; });
	r.add("class IV generator (d(2,2,1) = c/4) verifies", ok);
	auto iv_like = std::count_if(found.begin(), found.end(), [](SolutionRecord const &s) {
		return s.tensor(1, 0, 0) == -half() && s.tensor(0, 1, 0) == half() && !s.tensor(1, 1, 0).is_zero();
	});
	r.add("brute force finds class IV pattern solutions", iv_like > 0, std::to_string(iv_like) + " solutions");
}

void ex41(Recorder &r, RegressionOptions const &)
{
	Algebra q = catalog("dihedral-quandle");
	check_flags(r, "quandle", q,
	            {{SubgroupId::a3, true},
	             {SubgroupId::s3, true},
	             {SubgroupId::t13, false},
	             {SubgroupId::t12, false},
	             {SubgroupId::t23, false}});
	r.add("quandle commutative", is_commutative(q));
	r.add("quandle commutator abelian", commutator_algebra(q).is_zero());
	auto b = check_bianchi(q);
	r.add("quandle Bianchi identity", b.holds(), b.witness ? format_triple(*b.witness) : "");
	r.add("quandle commutative exclusion", check_commutative_exclusion(q));
}

void ex42(Recorder &r, RegressionOptions const &)
{
	Algebra a = catalog("s3-alpha-beta");
	check_flags(r, "alpha=1, beta=2", a,
	            {{SubgroupId::s3, true},
	             {SubgroupId::a3, false},
	             {SubgroupId::t13, false},
	             {SubgroupId::t12, false},
	             {SubgroupId::t23, false}});
	Algebra eq = catalog("s3-alpha-beta", {{"alpha", 3}, {"beta", 3}});
	r.add("alpha = beta is A3-associative", flag(eq, SubgroupId::a3));
}

void ex51(Recorder &r, RegressionOptions const &)
{
	auto v = verify_prestructure(catalog_lie("sl2c"), catalog("sl2c-afa"));
	r.add("pre-algebraic", v.prealgebraic, v.commutator_mismatch ? format_triple(*v.commutator_mismatch) : "");
	r.add("AFA", v.afa, witness_text(v.afa_witness));
	r.add("nontrivial", v.nontrivial);
}

void ex51_lambda(Recorder &r, RegressionOptions const &)
{
	auto lie = catalog_lie("sl2c");
	Algebra one = catalog("sl2c-afa", {{"lambda", 1}});
	auto v = verify_prestructure(lie, one);
	r.add("lambda=1 fails AFA", v.prealgebraic && !v.afa, witness_text(v.afa_witness));
	Vector defect = afa_defect(one, {0, 1, 2});
	r.add("lambda=1 defect at (H,E,F) is (2-lambda)H = H", defect == Vector{1, 0, 0}, vec(defect));

	auto rep = classify(catalog("sl2c-afa"));
	r.add("LSA fails", !rep.flag(SubgroupId::t12), witness_text(rep.witness(SubgroupId::t12)));
	r.add("RSA fails", !rep.flag(SubgroupId::t23), witness_text(rep.witness(SubgroupId::t23)));
	r.add("A3 fails", !rep.flag(SubgroupId::a3), witness_text(rep.witness(SubgroupId::a3)));
	auto s = analyze(lie);
	r.add("sl(2,C) semisimple and not solvable", s.killing.semisimple && !s.series.solvable,
	      "Killing rank " + std::to_string(s.killing.rank));
}

void ex52(Recorder &r, RegressionOptions const &)
{
	Algebra a = catalog("su2-afa");
	r.add("commutator is [X_i,X_j] = 2 eps_ijk X_k", commutator_algebra(a) == catalog("su2"));
	r.add("projection order 2", projection_order(a) == 2, std::to_string(projection_order(a)));
	auto v = verify_prestructure(catalog_lie("su2"), a);
	r.add("AFA", v.afa, v.afa ? "holds on all basis triples" : witness_text(v.afa_witness));
	r.add("nontrivial", v.nontrivial);
}

void ex53(Recorder &r, RegressionOptions const &)
{
	Algebra x = catalog("cross-product");
	check_flags(r, "cross product", x,
	            {{SubgroupId::a3, true},
	             {SubgroupId::s3, true},
	             {SubgroupId::t13, false},
	             {SubgroupId::t12, false},
	             {SubgroupId::t23, false}});
	r.add("cross product anticommutative", is_anticommutative(x));
	auto b = check_bianchi(x);
	r.add("cross product Bianchi identity", b.holds(), b.witness ? format_triple(*b.witness) : "");
	r.add("commutator is su(2)", commutator_algebra(x) == catalog("su2"));
}

void ex54(Recorder &r, RegressionOptions const &)
{
	Scalar alpha = 1, beta = 2;
	Algebra a = catalog("s3-alpha-beta", {{"alpha", alpha}, {"beta", beta}});
	Algebra eps = catalog("cross-product");
	r.add("commutator is (alpha-beta) eps_ijk", [&] {
		Algebra c = commutator_algebra(a);
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				for (std::size_t k = 0; k < 3; ++k)
					if (!(c(i, j, k) == (alpha - beta) * eps(i, j, k)))
						return false;
		return true;
	}());
	auto rep = classify(a);
	bool exclusive = rep.flag(SubgroupId::s3) && !rep.flag(SubgroupId::a3) && !rep.flag(SubgroupId::t12) &&
	                 !rep.flag(SubgroupId::t23) && !rep.flag(SubgroupId::t13);
	r.add("exclusively S3-associative", exclusive);
	r.add("commutator algebra is Lie", [&] {
		try
		{
			validate_lie(commutator_algebra(a));
			return true;
		}
		catch (ValidationError const &)
		{
			return false;
		}
	}());
}

void prop21(Recorder &r, RegressionOptions const &o)
{
	auto samples = sweep_algebras(o);
	r.add("opposite is an involution",
	      !first_failure(samples, [](Algebra const &a) { return opposite(opposite(a)) == a; }));
	auto const t13 = Permutation::transposition(0, 2);
	for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
	{
		auto sigma = Permutation::transposition(a, b);
		auto conj = t13 * sigma * t13;
		auto fail = first_failure(samples, [&](Algebra const &x) {
			return sigma_symmetric(x, sigma).holds == sigma_symmetric(opposite(x), conj).holds;
		});
		std::string name = "(" + std::to_string(a + 1) + " " + std::to_string(b + 1) + ")";
		r.add("sigma=" + name + " condition transfers to the opposite algebra", !fail,
		      sweep_detail(fail, samples.size()));
	}
	r.add("opposite of an LSA is an RSA", [] {
		// [e1,e2]=e2 admits the LSA e1.e1 = 2e1, e1.e2 = e2, e2.e2 = e1
		Algebra lsa = table(2, {{1, 1, 1, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}});
		return flag(lsa, SubgroupId::t12) && flag(opposite(lsa), SubgroupId::t23);
	}());
	r.add("opposite of sl(2,C)-AFA is AFA", flag(opposite(catalog("sl2c-afa")), SubgroupId::t13));
}

void prop22(Recorder &r, RegressionOptions const &o)
{
	auto samples = sweep_algebras(o);
	auto fail = first_failure(samples, check_two_implies_third);
	r.add("two of LSA/RSA/AFA imply the third", !fail, sweep_detail(fail, samples.size()));
}

void prop23(Recorder &r, RegressionOptions const &o)
{
	Rng rng(o.seed);
	std::vector<Algebra> samples;
	for (unsigned t = 0; t < o.sweep; ++t)
		samples.push_back(random_commutative(rng, 3));
	auto fail = first_failure(samples, check_commutative_exclusion);
	r.add("commutative algebras in LSA/RSA/AFA are associative", !fail, sweep_detail(fail, samples.size()));
	auto general = sweep_algebras(o);
	fail = first_failure(general, check_commutative_exclusion);
	r.add("exclusion holds on the general sweep", !fail, sweep_detail(fail, general.size()));
}

void prop24(Recorder &r, RegressionOptions const &o)
{
	auto samples = sweep_algebras(o);
	auto fail = first_failure(samples, [](Algebra const &a) { return check_operator_equivalences(a).agree(); });
	r.add("AFA, [L_x,R_y]=[L_y,R_x] and [S_x,S_y]=ad_[x,y] agree", !fail, sweep_detail(fail, samples.size()));
	r.add("all three hold on sl(2,C)-AFA", [] {
		auto e = check_operator_equivalences(catalog("sl2c-afa"));
		return e.afa && e.left_right_commute && e.sym_matches_ad;
	}());
}

void akivis(Recorder &r, RegressionOptions const &o)
{
	auto samples = sweep_algebras(o);
	auto fail = first_failure(samples, [](Algebra const &a) {
		std::size_t const n = a.dim();
		Algebra c = commutator_algebra(a);
		AssociatorTable t(a);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t m = 0; m < n; ++m)
					if (!(jacobinator(c, {i, j, m}) == subgroup_sum(t, SubgroupId::s3, {i, j, m})))
						return false;
		return true;
	});
	r.add("Jacobinator equals the signed S3 associator sum", !fail, sweep_detail(fail, samples.size()));

	fail = first_failure(samples, [](Algebra const &a) {
		auto rep = classify(a);
		if (rep.flag(SubgroupId::trivial) &&
		    !std::all_of(rep.flags.begin(), rep.flags.end(), [](bool b) { return b; }))
			return false;
		for (auto g : {SubgroupId::t12, SubgroupId::t23, SubgroupId::t13, SubgroupId::a3})
			if (rep.flag(g) && !rep.flag(SubgroupId::s3))
				return false;
		return true;
	});
	r.add("every class flag implies S3", !fail, sweep_detail(fail, samples.size()));

	fail = first_failure(samples, [](Algebra const &a) {
		bool lie = true;
		try
		{
			validate_lie(commutator_algebra(a));
		}
		catch (ValidationError const &)
		{
			lie = false;
		}
		return lie == flag(a, SubgroupId::s3);
	});
	r.add("S3 flag matches Jacobi on the commutator", !fail, sweep_detail(fail, samples.size()));
}

void thm51(Recorder &r, RegressionOptions const &o)
{
	for (auto name : {"sl2c", "su2", "abelian3", "ex2.1-bracket", "ex2.2-bracket", "ex2.2-extended", "e1e2-e1"})
		r.add(std::string(name) + ": random pre-algebraic structures are S3-associative",
		      check_s3_universality(catalog_lie(name), o.trials, o.seed), std::to_string(o.trials) + " trials");
}

void counts(Recorder &r, RegressionOptions const &)
{
	auto sl2 = catalog_lie("sl2c");
	auto c1 = constraint_counts(sl2, 1);
	r.add("n=3, p=1: 3 params, 6 and 12 conditions",
	      c1.max_params == 3 && c1.max_pair_conds == 6 && c1.max_triple_conds == 12,
	      std::to_string(c1.max_params) + ", " + std::to_string(c1.max_pair_conds) + ", " +
	          std::to_string(c1.max_triple_conds));
	auto c2 = constraint_counts(sl2, 2);
	r.add("n=3, p=2: 6 params, 24 and 48 conditions",
	      c2.max_params == 6 && c2.max_pair_conds == 24 && c2.max_triple_conds == 48);
	auto c0 = constraint_counts(catalog_lie("abelian", {{"n", 1}}), 5);
	r.add("n=1: no off-diagonal parameters", c0.max_params == 0 && c0.actual_params == 0);
	r.add("sl(2,C) lie-support unknowns", c1.actual_params == 3,
	      std::to_string(c1.actual_params) + " off-diagonal, " + std::to_string(c1.actual_conditions) +
	          " distinct conditions");
}

using GroupFn = void (*)(Recorder &, RegressionOptions const &);

std::vector<std::pair<std::string, GroupFn>> const &groups()
{
	static std::vector<std::pair<std::string, GroupFn>> const g = {
	    {"ex2.1", ex21},     {"ex2.2", ex22},   {"ex3.1", ex31},   {"ex3.2", ex32},   {"ex3.3", ex33},
	    {"ex4.1", ex41},     {"ex4.2", ex42},   {"ex5.1", ex51},   {"ex5.1-lambda", ex51_lambda},
	    {"ex5.2", ex52},     {"ex5.3", ex53},   {"ex5.4", ex54},   {"prop2.1", prop21},
	    {"prop2.2", prop22}, {"prop2.3", prop23}, {"prop2.4", prop24}, {"akivis", akivis},
	    {"thm5.1", thm51},   {"counts", counts},
	};
	return g;
}

} // namespace

std::vector<std::string> const &regression_groups()
{
	static std::vector<std::string> const names = [] {
		std::vector<std::string> out;
		for (auto const &[name, fn] : groups())
			out.push_back(name);
		return out;
	}();
	return names;
}

std::vector<CheckResult> run_regression(RegressionOptions const &opts)
{
	std::vector<CheckResult> out;
	bool matched = false;
	for (auto const &[name, fn] : groups())
	{
		if (!opts.only.empty() && opts.only != name)
			continue;
		matched = true;
		Recorder r{name, out};
		fn(r, opts);
	}
	if (!matched)
	{
		std::string names;
		for (auto const &n : regression_groups())
			names += (names.empty() ? "" : ", ") + n;
		throw LookupError("unknown check group '" + opts.only + "'; available: " + names);
	}
	return out;
}

} // namespace prelie
