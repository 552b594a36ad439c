// prelie: classify algebras, search pre-Lie structures, and run the example regression suite.

#include "prelie/catalog.h"
#include "prelie/document.h"
#include "prelie/error.h"
#include "prelie/identities.h"
#include "prelie/lie.h"
#include "prelie/regression.h"
#include "prelie/solver.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace prelie;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Globals
{
	bool json = false;
	std::string only;
	unsigned trials = 100;
	std::uint64_t seed = 0;
};

struct Input
{
	std::string label;
	FixtureKind kind = FixtureKind::algebra;
	Algebra algebra{1};
	ParamMap params;
};

ParamMap parse_params(std::vector<std::string> const &raw)
{
	ParamMap out;
	for (auto const &kv : raw)
	{
		auto eq = kv.find('=');
		if (eq == std::string::npos || eq == 0)
			throw DocumentError("--param expects name=value, got '" + kv + "'");
		out[kv.substr(0, eq)] = parse_scalar(kv.substr(eq + 1));
	}
	return out;
}

Input load(std::string const &source, std::vector<std::string> const &raw_params)
{
	Input in;
	in.label = source;
	ParamMap params = parse_params(raw_params);
	if (source.rfind("catalog:", 0) == 0)
	{
		std::string name = source.substr(8);
		auto const &entry = catalog_entry(name);
		in.kind = entry.kind;
		in.algebra = catalog(name, params);
		in.params = entry.defaults;
		for (auto const &[k, v] : params)
			in.params[k] = v;
		return in;
	}
	std::ifstream file(source);
	if (!file)
		throw DocumentError("cannot open '" + source + "'");
	std::stringstream buf;
	buf << file.rdbuf();
	auto doc = parse_document(buf.str());
	if (!params.empty())
		throw DocumentError("--param only applies to catalog inputs");
	in.kind = doc.kind;
	in.algebra = std::move(doc.algebra);
	in.params = std::move(doc.params);
	return in;
}

std::string vec_text(Vector const &v)
{
	std::string s = "(";
	for (std::size_t k = 0; k < v.size(); ++k)
		s += (k ? ", " : "") + format_scalar(v[k]);
	return s + ")";
}

ordered_json vec_json(Vector const &v)
{
	ordered_json a = ordered_json::array();
	for (auto const &x : v)
		a.push_back(format_scalar(x));
	return a;
}

ordered_json triple_json(Triple const &t) { return ordered_json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

char const *mark(bool b) { return b ? "✓" : "✗"; }

// ---------------------------------------------------------------- classify

int cmd_classify(Globals const &g, Input const &in, std::vector<std::string> const &require)
{
	auto rep = classify(in.algebra);
	int status = 0;
	for (auto const &name : require)
	{
		bool known = false;
		for (auto s : all_subgroups)
			if (name == subgroup_class(s) || name == subgroup_tag(s))
			{
				known = true;
				if (!rep.flag(s))
					status = 1;
			}
		if (name == "commutative" || name == "anticommutative")
		{
			known = true;
			if (!(name == "commutative" ? rep.commutative : rep.anticommutative))
				status = 1;
		}
		if (!known)
			throw LookupError("unknown class '" + name + "' in --require");
	}

	if (g.json)
	{
		ordered_json out;
		out["command"] = "classify";
		out["input"] = in.label;
		ordered_json classes = ordered_json::object();
		for (auto s : all_subgroups)
		{
			ordered_json c;
			c["subgroup"] = subgroup_tag(s);
			c["holds"] = rep.flag(s);
			if (auto const &w = rep.witness(s))
				c["witness"] = {{"triple", triple_json(w->triple)}, {"lhs", vec_json(w->lhs)}, {"rhs", vec_json(w->rhs)}};
			classes[std::string(subgroup_class(s))] = std::move(c);
		}
		out["classes"] = std::move(classes);
		out["commutative"] = rep.commutative;
		out["anticommutative"] = rep.anticommutative;
		out["exit_status"] = status;
		std::cout << out.dump(2) << "\n";
		return status;
	}

	std::cout << "input: " << in.label << "\n";
	for (auto s : all_subgroups)
	{
		std::string name(subgroup_class(s));
		std::cout << "  " << name << std::string(16 - name.size(), ' ') << mark(rep.flag(s));
		if (auto const &w = rep.witness(s))
			std::cout << "  at " << format_triple(w->triple) << ": " << vec_text(w->lhs) << " vs " << vec_text(w->rhs);
		std::cout << "\n";
	}
	std::cout << "  commutative     " << mark(rep.commutative) << "\n";
	std::cout << "  anticommutative " << mark(rep.anticommutative) << "\n";
	return status;
}

// ---------------------------------------------------------------- search

std::vector<Scalar> parse_list(std::string const &text)
{
	std::vector<Scalar> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
		out.push_back(parse_scalar(item));
	return out;
}

// "1,2,2;3,1,3" → zero-based triples
std::vector<Triple> parse_support(std::string const &text)
{
	std::vector<Triple> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ';'))
	{
		Triple t{};
		std::stringstream is(item);
		std::string idx;
		std::size_t k = 0;
		while (std::getline(is, idx, ','))
		{
			if (k >= 3)
				throw SupportError("support entry '" + item + "' must have three indices");
			long v = std::stol(idx);
			if (v < 1)
				throw SupportError("support indices are 1-based");
			t[k++] = static_cast<std::size_t>(v - 1);
		}
		if (k != 3)
			throw SupportError("support entry '" + item + "' must have three indices");
		out.push_back(t);
	}
	return out;
}

struct SearchArgs
{
	std::string cls = "brute";
	std::string support = "lie";
	std::string free;
	std::string candidates;
	std::uint64_t limit = default_search_limit;
	bool override_limit = false;
	unsigned workers = 1;
};

int cmd_search(Globals const &g, Input const &in, SearchArgs const &a)
{
	LieAlgebra lie = validate_lie(in.algebra);
	std::vector<SolutionRecord> records;
	if (a.cls == "brute")
	{
		SupportPolicy policy = a.support == "full"     ? SupportPolicy::full
		                       : a.support == "active" ? SupportPolicy::active
		                       : a.support == "custom" ? SupportPolicy::custom
		                                               : SupportPolicy::lie;
		if (policy == SupportPolicy::custom && a.free.empty())
			throw SupportError("--support custom needs --free");
		auto support = build_ansatz(lie, policy, parse_support(a.free));
		auto cand = a.candidates.empty() ? default_candidates() : parse_list(a.candidates);
		records = brute_force_search(lie, support, cand, {a.limit, a.override_limit, a.workers});
	}
	else
	{
		SolutionClass cls = a.cls == "I"    ? SolutionClass::I
		                    : a.cls == "II" ? SolutionClass::II
		                    : a.cls == "III" ? SolutionClass::III
		                                     : SolutionClass::IV;
		records = class_candidates(lie, cls);
	}
	bool any_verified = std::any_of(records.begin(), records.end(), [](auto const &r) { return r.verified; });
	int status = any_verified ? 0 : 1;

	if (g.json)
	{
		ordered_json out;
		out["command"] = "search";
		out["input"] = in.label;
		out["class"] = a.cls;
		ordered_json list = ordered_json::array();
		for (auto const &r : records)
		{
			ordered_json rec;
			rec["class"] = r.class_label;
			rec["branch"] = r.branch;
			rec["verified"] = r.verified;
			ordered_json asg = ordered_json::array();
			for (auto const &[t, v] : r.assignment)
				asg.push_back(ordered_json::array({t[0] + 1, t[1] + 1, t[2] + 1, format_scalar(v)}));
			rec["assignment"] = std::move(asg);
			list.push_back(std::move(rec));
		}
		out["records"] = std::move(list);
		out["exit_status"] = status;
		std::cout << out.dump(2) << "\n";
		return status;
	}

	std::cout << "input: " << in.label << "  class: " << a.cls << "  records: " << records.size() << "\n";
	for (std::size_t k = 0; k < records.size(); ++k)
	{
		auto const &r = records[k];
		std::cout << "#" << k + 1 << " class " << r.class_label;
		if (!r.branch.empty())
		{
			std::cout << " branch";
			for (int b : r.branch)
				std::cout << (b > 0 ? " +" : " -");
		}
		std::cout << "  verified " << mark(r.verified) << "\n";
		for (auto const &[t, v] : r.assignment)
			std::cout << "    d" << format_triple(t) << " = " << format_scalar(v) << "\n";
	}
	return status;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify(Globals const &g)
{
	RegressionOptions opts;
	opts.only = g.only;
	opts.trials = g.trials;
	opts.seed = g.seed;
	auto results = run_regression(opts);
	std::size_t passed = std::count_if(results.begin(), results.end(), [](auto const &r) { return r.passed; });
	int status = passed == results.size() ? 0 : 1;

	if (g.json)
	{
		ordered_json out;
		out["command"] = "verify-paper";
		out["only"] = g.only;
		out["seed"] = g.seed;
		out["trials"] = g.trials;
		ordered_json list = ordered_json::array();
		for (auto const &r : results)
			list.push_back({{"group", r.group}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
		out["checks"] = std::move(list);
		out["passed"] = passed;
		out["total"] = results.size();
		out["exit_status"] = status;
		std::cout << out.dump(2) << "\n";
		return status;
	}

	for (auto const &r : results)
	{
		std::cout << (r.passed ? "PASS " : "FAIL ") << r.group << std::string(14 - std::min<std::size_t>(13, r.group.size()), ' ')
		          << r.check;
		if (!r.detail.empty())
			std::cout << "  [" << r.detail << "]";
		std::cout << "\n";
	}
	std::cout << passed << "/" << results.size() << " checks passed\n";
	return status;
}

// ---------------------------------------------------------------- report

int cmd_report(Globals const &g, Input const &in, std::string const &what)
{
	Algebra const &a = in.algebra;
	std::size_t const n = a.dim();
	if (what == "commutator")
	{
		Algebra c = commutator_algebra(a);
		bool lie = true;
		try
		{
			validate_lie(c);
		}
		catch (ValidationError const &)
		{
			lie = false;
		}
		std::cout << serialize_document({lie ? FixtureKind::lie : FixtureKind::algebra, c, {}});
		return 0;
	}
	if (what == "projection-order")
	{
		auto p = projection_order(a);
		if (g.json)
			std::cout << ordered_json{{"command", "report"}, {"input", in.label}, {"projection_order", p}}.dump(2)
			          << "\n";
		else
			std::cout << p << "\n";
		return 0;
	}
	if (what == "curvature")
	{
		ordered_json list = ordered_json::array();
		std::ostringstream text;
		bool all_zero = true;
		for (auto side : {Side::left, Side::right})
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j)
					for (std::size_t k = 0; k < n; ++k)
					{
						Vector r = curvature(a, side, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
						if (is_zero(r))
							continue;
						all_zero = false;
						char const *s = side == Side::left ? "L" : "R";
						list.push_back({{"side", s}, {"triple", triple_json({i, j, k})}, {"value", vec_json(r)}});
						text << "R_" << s << "(e" << i + 1 << ",e" << j + 1 << ") e" << k + 1 << " = " << vec_text(r)
						     << "\n";
					}
		if (g.json)
			std::cout << ordered_json{{"command", "report"}, {"input", in.label}, {"curvature", list}}.dump(2) << "\n";
		else
			std::cout << (all_zero ? "all curvature components vanish\n" : text.str());
		return 0;
	}
	if (what == "lie-analysis")
	{
		LieAlgebra lie = validate_lie(in.kind == FixtureKind::lie ? a : commutator_algebra(a));
		auto s = analyze(lie);
		if (g.json)
		{
			ordered_json form = ordered_json::array();
			for (std::size_t r = 0; r < n; ++r)
			{
				ordered_json row = ordered_json::array();
				for (std::size_t c = 0; c < n; ++c)
					row.push_back(format_scalar(s.killing.form(r, c)));
				form.push_back(std::move(row));
			}
			std::cout << ordered_json{{"command", "report"},
			                          {"input", in.label},
			                          {"derived_series", s.series.dims},
			                          {"solvable", s.series.solvable},
			                          {"killing_form", form},
			                          {"killing_rank", s.killing.rank},
			                          {"semisimple", s.killing.semisimple}}
			                 .dump(2)
			          << "\n";
			return 0;
		}
		std::cout << "derived series dims:";
		for (auto d : s.series.dims)
			std::cout << " " << d;
		std::cout << "\nsolvable=" << (s.series.solvable ? "true" : "false") << "\n";
		std::cout << "killing rank=" << s.killing.rank << "\n";
		std::cout << "semisimple=" << (s.killing.semisimple ? "true" : "false") << "\n";
		return 0;
	}
	throw LookupError("unknown --what '" + what + "'");
}

// ---------------------------------------------------------------- catalog

int cmd_catalog_list(Globals const &g)
{
	if (g.json)
	{
		ordered_json list = ordered_json::array();
		for (auto const &e : catalog_entries())
		{
			ordered_json params = ordered_json::object();
			for (auto const &[k, v] : e.defaults)
				params[k] = format_scalar(v);
			list.push_back({{"name", e.name},
			                {"kind", e.kind == FixtureKind::lie ? "lie" : "algebra"},
			                {"summary", e.summary},
			                {"params", params}});
		}
		std::cout << list.dump(2) << "\n";
		return 0;
	}
	for (auto const &e : catalog_entries())
	{
		std::cout << e.name << std::string(18 - std::min<std::size_t>(17, e.name.size()), ' ')
		          << (e.kind == FixtureKind::lie ? "lie      " : "algebra  ") << e.summary;
		for (auto const &[k, v] : e.defaults)
			std::cout << " [" << k << "=" << format_scalar(v) << "]";
		std::cout << "\n";
	}
	return 0;
}

int cmd_catalog_show(std::string const &name, std::vector<std::string> const &raw_params)
{
	Input in = load("catalog:" + name, raw_params);
	std::cout << serialize_document({in.kind, in.algebra, in.params});
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact classification and construction of Lie-admissible algebras"};
	app.require_subcommand(1);
	app.fallthrough();

	Globals g;
	app.add_flag("--json", g.json, "machine-readable output");
	app.add_option("--only", g.only, "verify-paper: run a single check group");
	app.add_option("--trials", g.trials, "random trials per Lie algebra in universality sweeps")->check(CLI::PositiveNumber);
	app.add_option("--seed", g.seed, "seed for randomized sweeps (default 0)");

	std::string source;
	std::vector<std::string> params;
	auto add_input = [&](CLI::App *cmd) {
		cmd->add_option("input", source, "JSON file or catalog:NAME")->required();
		cmd->add_option("--param", params, "catalog parameter name=value (repeatable)");
	};

	auto *classify_cmd = app.add_subcommand("classify", "classify an algebra against the six Lie-admissible classes");
	add_input(classify_cmd);
	std::vector<std::string> require;
	classify_cmd->add_option("--require", require, "exit 1 unless these classes hold (e.g. AFA,S3)")->delimiter(',');

	auto *search_cmd = app.add_subcommand("search", "construct or search pre-Lie (AFA) structures on a Lie algebra");
	add_input(search_cmd);
	SearchArgs sa;
	search_cmd->add_option("--class", sa.cls, "I, II, III, IV or brute")
	    ->check(CLI::IsMember({"I", "II", "III", "IV", "brute"}));
	search_cmd->add_option("--support", sa.support, "brute-force support: lie, full, active or custom")
	    ->check(CLI::IsMember({"lie", "full", "active", "custom"}));
	search_cmd->add_option("--free", sa.free, "custom support, e.g. \"1,2,2;3,1,3\"");
	search_cmd->add_option("--candidates", sa.candidates, "comma-separated scalars (default grid of 13 values)");
	search_cmd->add_option("--limit", sa.limit, "maximum enumeration size");
	search_cmd->add_flag("--override", sa.override_limit, "enumerate even when the limit is exceeded");
	search_cmd->add_option("--workers", sa.workers, "parallel workers")->check(CLI::PositiveNumber);

	auto *verify_cmd = app.add_subcommand("verify-paper", "run the worked-example regression suite");

	auto *report_cmd = app.add_subcommand("report", "print a derived object");
	add_input(report_cmd);
	std::string what = "commutator";
	report_cmd->add_option("--what", what, "commutator, projection-order, curvature or lie-analysis")
	    ->check(CLI::IsMember({"commutator", "projection-order", "curvature", "lie-analysis"}));

	auto *catalog_cmd = app.add_subcommand("catalog", "list or show built-in fixtures");
	catalog_cmd->require_subcommand(1);
	auto *list_cmd = catalog_cmd->add_subcommand("list", "list fixture names");
	auto *show_cmd = catalog_cmd->add_subcommand("show", "print a fixture as a JSON document");
	std::string show_name;
	show_cmd->add_option("name", show_name)->required();
	show_cmd->add_option("--param", params, "parameter name=value (repeatable)");

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (*classify_cmd)
			return cmd_classify(g, load(source, params), require);
		if (*search_cmd)
			return cmd_search(g, load(source, params), sa);
		if (*verify_cmd)
			return cmd_verify(g);
		if (*report_cmd)
			return cmd_report(g, load(source, params), what);
		if (*list_cmd)
			return cmd_catalog_list(g);
		if (*show_cmd)
			return cmd_catalog_show(show_name, params);
	}
	catch (ValidationError const &e)
	{
		std::cerr << "error: invalid Lie algebra: " << e.what() << "\n";
		return 2;
	}
	catch (BudgetError const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (std::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
