#include "helpers.hpp"

#include <ndlp/det_oracle.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ndlp;
using namespace ndlp::det;

TEST_CASE("embedding", "[det]") {
	CHECK(embed(parse("a :- not b. b :- not a.")) == parse_program("{a} :- not {b}. {b} :- not {a}."));
	CHECK(embed(parse("b.")) == parse_program("{b}."));
	auto definite = parse("a :- b. a :- c. a :- d, f. b. c.");
	CHECK(embed(definite) == parse_file(test::corpus("embedding.ndlp")));
	CHECK(from_program(embed(definite)).str() == definite.str());
	CHECK_THROWS_AS(from_program(parse_program("{a, b}.")), Error);
	CHECK(embed(parse("p(x, 1) :- q(x).")) == parse_program("{p(x, 1)} :- {q(x)}."));
}

TEST_CASE("parsing", "[det]") {
	auto p = parse("% comment\na :- b, not c.\nd.");
	REQUIRE(p.rules.size() == 2);
	CHECK(p.rules[0].head == "a");
	CHECK(p.rules[0].pos == std::vector<std::string>{"b"});
	CHECK(p.rules[0].neg == std::vector<std::string>{"c"});
	CHECK(p.rules[1].pos.empty());
	CHECK(p.atoms() == AtomSet{"a", "b", "c", "d"});
	CHECK_THROWS_AS(parse(":- a."), Error);
}

TEST_CASE("deterministic semantics", "[det]") {
	SECTION("least") {
		CHECK(det_least(parse("a :- b. a :- c. a :- d, f. b. c.")) == AtomSet{"a", "b", "c"});
	}
	SECTION("stable") {
		CHECK(det_stable(parse("a :- not b. b :- not a.")) == std::vector<AtomSet>{{"a"}, {"b"}});
		CHECK(det_stable(parse("a :- b. a :- c. a :- d, f. b. c.")) == std::vector<AtomSet>{{"a", "b", "c"}});
		CHECK(det_stable(parse("a :- not a.")).empty());
	}
	SECTION("well-founded") {
		CHECK(det_wf(parse("a :- not b. b :- not a.")) == WfModel{});
		CHECK(det_wf(parse("a.")) == WfModel{{"a"}, {}});
		CHECK(det_wf(parse("a :- not b.")) == WfModel{{"a"}, {"b"}});
		CHECK(det_wf(parse("c. a :- not b. b :- not c.")) == WfModel{{"a", "c"}, {"b"}});
	}
}
