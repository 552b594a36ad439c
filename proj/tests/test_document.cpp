#include "fixtures.h"

#include "prelie/catalog.h"
#include "prelie/document.h"
#include "prelie/error.h"
#include "prelie/sweeps.h"

#include <gtest/gtest.h>

using namespace prelie;
using namespace prelie::test;

namespace {

std::string error_of(std::string const &text)
{
	try
	{
		parse_document(text);
	}
	catch (DocumentError const &e)
	{
		return e.what();
	}
	return "";
}

bool contains(std::string const &haystack, std::string const &needle)
{
	return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(Document, ParsesMinimalAlgebra)
{
	auto doc = parse_document(R"({"schema_version": 1, "dim": 2, "kind": "algebra",
	    "products": [{"i": 1, "j": 2, "out": [[2, "1/2+i"]]}]})");
	EXPECT_EQ(doc.kind, FixtureKind::algebra);
	EXPECT_EQ(doc.algebra, table(2, {{1, 2, 2, S("1/2+i")}}));
	EXPECT_TRUE(doc.params.empty());
}

TEST(Document, SerializedLayout)
{
	AlgebraDocument doc{FixtureKind::lie, catalog("ex2.2-bracket"), {}};
	std::string text = serialize_document(doc);
	EXPECT_TRUE(contains(text, "\"schema_version\": 1"));
	EXPECT_TRUE(contains(text, "\"kind\": \"lie\""));
	EXPECT_FALSE(contains(text, "params"));
	EXPECT_LT(text.find("schema_version"), text.find("products"));
}

TEST(Document, CatalogRoundTrip)
{
	for (auto const &entry : catalog_entries())
	{
		AlgebraDocument doc{entry.kind, catalog(entry.name), entry.defaults};
		auto back = parse_document(serialize_document(doc));
		EXPECT_EQ(back.kind, doc.kind) << entry.name;
		EXPECT_EQ(back.algebra, doc.algebra) << entry.name;
		EXPECT_EQ(back.params, doc.params) << entry.name;
		EXPECT_EQ(serialize_document(back), serialize_document(doc)) << entry.name;
	}
}

TEST(Document, RandomRoundTrip)
{
	Rng rng(31);
	for (int t = 0; t < 200; ++t)
	{
		AlgebraDocument doc{FixtureKind::algebra, random_algebra(rng, 4), {}};
		if (t % 5 == 0)
			doc.params["p"] = random_scalar(rng, 30, 9);
		auto back = parse_document(serialize_document(doc));
		ASSERT_EQ(back.algebra, doc.algebra);
		ASSERT_EQ(back.params, doc.params);
	}
}

TEST(Document, StrictErrors)
{
	std::string const head = R"({"schema_version": 1, "dim": 2, "kind": "algebra", )";
	EXPECT_TRUE(contains(error_of("{\"dim\": "), "invalid JSON at byte"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [], "extra": 1})"), "unknown field 'extra'"));
	EXPECT_TRUE(contains(error_of(R"({"schema_version": 2, "dim": 2, "kind": "algebra", "products": []})"),
	                     "$.schema_version"));
	EXPECT_TRUE(contains(error_of(R"({"schema_version": 1, "dim": 9, "kind": "algebra", "products": []})"),
	                     "$.dim"));
	EXPECT_TRUE(contains(error_of(R"({"schema_version": 1, "dim": 2, "kind": "ring", "products": []})"),
	                     "$.kind"));
	EXPECT_TRUE(contains(error_of(R"({"schema_version": 1, "dim": 2, "kind": "algebra"})"), "missing field 'products'"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [{"i": 1, "j": 3, "out": []}]})"), "$.products[0].j"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [{"i": 1, "j": 1, "out": [[1, 2]]}]})"),
	                     "$.products[0].out[0][1]"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [{"i": 1, "j": 1, "out": [[1, "1/0"]]}]})"),
	                     "$.products[0].out[0][1]"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [{"i": 1, "j": 1, "out": [[1, "1"]]},
	                                                     {"i": 1, "j": 1, "out": [[1, "2"]]}]})"),
	                     "duplicate entry for (1,1,1)"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [{"i": 1, "j": 1, "k": 1, "out": []}]})"),
	                     "unknown field 'k'"));
	EXPECT_TRUE(contains(error_of(head + R"("products": [], "params": {"a": 1}})"), "$.params.a"));
}

TEST(Document, LieDocumentsAreValidated)
{
	std::string const text = R"({"schema_version": 1, "dim": 2, "kind": "lie",
	    "products": [{"i": 1, "j": 2, "out": [[2, "1"]]}]})";
	EXPECT_THROW(parse_document(text), ValidationError);
}
