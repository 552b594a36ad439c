#include "prelie/document.h"

#include "prelie/error.h"
#include "prelie/lie.h"

#include <json.hpp>

#include <set>

namespace prelie {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(std::string const &path, std::string const &what)
{
	throw DocumentError(path + ": " + what);
}

void only_fields(json const &obj, std::string const &path, std::set<std::string> const &allowed)
{
	if (!obj.is_object())
		fail(path, "expected an object");
	for (auto const &[key, value] : obj.items())
		if (!allowed.count(key))
			fail(path, "unknown field '" + key + "'");
}

json const &field(json const &obj, std::string const &path, char const *name)
{
	auto it = obj.find(name);
	if (it == obj.end())
		fail(path, std::string("missing field '") + name + "'");
	return *it;
}

long long integer(json const &v, std::string const &path)
{
	if (!v.is_number_integer())
		fail(path, "expected an integer");
	return v.get<long long>();
}

std::size_t index(json const &v, std::string const &path, std::size_t dim)
{
	long long k = integer(v, path);
	if (k < 1 || static_cast<std::size_t>(k) > dim)
		fail(path, "index " + std::to_string(k) + " outside 1.." + std::to_string(dim));
	return static_cast<std::size_t>(k - 1);
}

Scalar scalar(json const &v, std::string const &path)
{
	if (!v.is_string())
		fail(path, "expected a scalar string");
	try
	{
		return parse_scalar(v.get<std::string>());
	}
	catch (ParseError const &e)
	{
		fail(path, e.what());
	}
}

} // namespace

AlgebraDocument parse_document(std::string_view text)
{
	json root;
	try
	{
		root = json::parse(text);
	}
	catch (json::parse_error const &e)
	{
		throw DocumentError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
	}

	only_fields(root, "$", {"schema_version", "dim", "kind", "products", "params"});
	if (integer(field(root, "$", "schema_version"), "$.schema_version") != schema_version)
		fail("$.schema_version", "unsupported version (expected " + std::to_string(schema_version) + ")");

	long long dim = integer(field(root, "$", "dim"), "$.dim");
	if (dim < 1 || dim > static_cast<long long>(max_dim))
		fail("$.dim", "dimension must be in 1.." + std::to_string(max_dim));

	AlgebraDocument doc;
	auto const &kind = field(root, "$", "kind");
	if (kind == "algebra")
		doc.kind = FixtureKind::algebra;
	else if (kind == "lie")
		doc.kind = FixtureKind::lie;
	else
		fail("$.kind", "expected \"algebra\" or \"lie\"");

	std::size_t const n = static_cast<std::size_t>(dim);
	doc.algebra = Algebra(n);
	auto const &products = field(root, "$", "products");
	if (!products.is_array())
		fail("$.products", "expected an array");
	std::set<Triple> seen;
	for (std::size_t p = 0; p < products.size(); ++p)
	{
		std::string const path = "$.products[" + std::to_string(p) + "]";
		auto const &entry = products[p];
		only_fields(entry, path, {"i", "j", "out"});
		std::size_t i = index(field(entry, path, "i"), path + ".i", n);
		std::size_t j = index(field(entry, path, "j"), path + ".j", n);
		auto const &out = field(entry, path, "out");
		if (!out.is_array())
			fail(path + ".out", "expected an array");
		for (std::size_t t = 0; t < out.size(); ++t)
		{
			std::string const tpath = path + ".out[" + std::to_string(t) + "]";
			if (!out[t].is_array() || out[t].size() != 2)
				fail(tpath, "expected [k, \"coeff\"]");
			std::size_t k = index(out[t][0], tpath + "[0]", n);
			if (!seen.insert({i, j, k}).second)
				fail(tpath, "duplicate entry for " + format_triple({i, j, k}));
			doc.algebra.set(i, j, k, scalar(out[t][1], tpath + "[1]"));
		}
	}

	if (auto it = root.find("params"); it != root.end())
	{
		if (!it->is_object())
			fail("$.params", "expected an object");
		for (auto const &[key, value] : it->items())
			doc.params.emplace(key, scalar(value, "$.params." + key));
	}

	if (doc.kind == FixtureKind::lie)
		validate_lie(doc.algebra);
	return doc;
}

std::string serialize_document(AlgebraDocument const &doc)
{
	Algebra const &a = doc.algebra;
	std::size_t const n = a.dim();
	ordered_json root;
	root["schema_version"] = schema_version;
	root["dim"] = n;
	root["kind"] = doc.kind == FixtureKind::lie ? "lie" : "algebra";
	ordered_json products = ordered_json::array();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			ordered_json out = ordered_json::array();
			for (std::size_t k = 0; k < n; ++k)
				if (!a(i, j, k).is_zero())
					out.push_back(ordered_json::array({k + 1, format_scalar(a(i, j, k))}));
			if (out.empty())
				continue;
			ordered_json entry;
			entry["i"] = i + 1;
			entry["j"] = j + 1;
			entry["out"] = std::move(out);
			products.push_back(std::move(entry));
		}
	root["products"] = std::move(products);
	if (!doc.params.empty())
	{
		ordered_json params = ordered_json::object();
		for (auto const &[key, value] : doc.params)
			params[key] = format_scalar(value);
		root["params"] = std::move(params);
	}
	return root.dump(2) + "\n";
}

} // namespace prelie
