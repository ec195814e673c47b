#include "helpers.hpp"
#include "oracles.hpp"

#include <ndlp/positive.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace ndlp;
using namespace ndlp::test;

namespace {

const std::vector<std::string> fred_least = {
    "{fish(salmon), meat(beef)}",    "{fish(salmon), meat(buffalo)}", "{fish(seafood), meat(beef)}",
    "{fish(seafood), meat(buffalo)}", "{lunch(beef,salmon)}",          "{lunch(beef,seafood)}",
    "{lunch(buffalo,salmon)}",        "{lunch(buffalo,seafood)}",      "{salad(salmon), soup(beef)}",
    "{salad(salmon), soup(buffalo)}", "{salad(seafood), soup(beef)}",  "{salad(seafood), soup(buffalo)}",
};

} // namespace

TEST_CASE("satisfaction", "[positive]") {
	auto g = ground_text("{a} :- {b}. {b}.");
	const GroundRule& r = g.rules()[0];
	REQUIRE(g.rule_str(r) == "{a} :- {b}.");
	CHECK_FALSE(satisfies_rule(interp(g, {"b"}), r));
	CHECK(satisfies_rule({}, r));
	CHECK(satisfies_rule(interp(g, {"a", "b"}), r));

	SECTION("negated body NdAtom present") {
		auto t = ground_corpus("teaching.ndlp");
		auto i = interp(t, {"{math(101), math(102)}", "{stat(101), stat(102)}"});
		for (const auto& rule : t.rules()) CHECK(satisfies_rule(i, rule));
		CHECK(satisfies_rule(interp(t, {"{math(101), math(102)}"}), t.rules()[0]));
		CHECK_FALSE(satisfies_rule({}, t.rules()[0]));
	}
}

TEST_CASE("models", "[positive]") {
	auto fred = ground_corpus("fred.ndlp");
	std::vector<NdAtom> listed;
	for (const auto& s : fred_least) listed.push_back(nd(s));
	CHECK(is_model(make_interpretation(fred, listed), fred));
	CHECK_FALSE(is_model({}, fred));
	auto g = ground_text("{a} :- {b}.");
	CHECK(is_model(interp(g, {"a", "b"}), g));
}

TEST_CASE("model enumeration", "[positive]") {
	SECTION("single fact") {
		auto g = ground_text("{a}.");
		CHECK(enumerate_models(g) == std::vector<Interpretation>{interp(g, {"a"})});
	}
	SECTION("one rule, checked against a direct subset filter") {
		auto g = ground_text("{a} :- {b}.");
		// a subset fails only if it contains b but not a
		std::vector<Interpretation> expected;
		for (uint64_t mask = 0; mask != 4; ++mask) {
			auto s = from_mask(mask, all_ids(g));
			if (!(member(s, g.id_of(nd("b"))) && !member(s, g.id_of(nd("a"))))) expected.push_back(s);
		}
		std::sort(expected.begin(), expected.end());
		REQUIRE(expected.size() == 3);
		CHECK(enumerate_models(g) == expected);
		CHECK(enumerate_models(g) == std::vector<Interpretation>{{}, interp(g, {"a"}), interp(g, {"a", "b"})});
	}
	SECTION("embedded definite program") {
		auto g      = ground_corpus("embedding.ndlp");
		auto models = enumerate_models(g);
		auto meet   = models.front();
		for (const auto& m : models) meet = set_intersection(meet, m);
		CHECK(meet == interp(g, {"a", "b", "c"}));
		CHECK(std::find(models.begin(), models.end(), meet) != models.end());
	}
	SECTION("cap") {
		auto g = ground_corpus("fred.ndlp");
		CHECK_THROWS_MATCHES(enumerate_models(g), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
			                     return e.code() == Errc::cap_exceeded;
		                     }));
		auto small = ground_text("{a}. {b}. {c}.");
		CHECK_THROWS_AS(enumerate_models(small, 2), Error);
		::setenv("NDLP_MAX_BASE", "2", 1);
		CHECK(max_base() == 2);
		CHECK_THROWS_AS(enumerate_models(small), Error);
		::unsetenv("NDLP_MAX_BASE");
		CHECK(max_base() == 20);
		CHECK(enumerate_models(small).size() == 1);
	}
}

TEST_CASE("immediate consequences", "[positive]") {
	auto g = ground_corpus("embedding.ndlp");
	CHECK(tp_step(g, {}) == interp(g, {"b", "c"}));
	CHECK(tp_step(g, interp(g, {"b", "c"})) == interp(g, {"a", "b", "c"}));
	auto lm = least_model(g);
	CHECK(lm == interp(g, {"a", "b", "c"}));
	CHECK(tp_step(g, lm) == lm);
	CHECK_THROWS_AS(tp_step(ground_corpus("teaching.ndlp"), {}), Error);
	CHECK_THROWS_AS(least_model(ground_corpus("teaching.ndlp")), Error);
}

TEST_CASE("least models", "[positive]") {
	SECTION("lunch") {
		auto g = ground_corpus("fred.ndlp");
		CHECK(strs(to_nd_atoms(g, least_model(g))) == fred_least);
	}
	SECTION("travel, as transcribed") {
		auto g  = ground_corpus("connection.ndlp");
		auto lm = least_model(g);
		// only home-rome and rome-berlin have matching arguments in both connection predicates
		std::vector<std::string> reach;
		for (const auto& s : strs(to_nd_atoms(g, lm))) {
			if (s.rfind("{reachable", 0) == 0) reach.push_back(s);
		}
		CHECK(reach == std::vector<std::string>{"{reachable(home,berlin)}", "{reachable(home,rome)}", "{reachable(rome,berlin)}"});
		CHECK_FALSE(contains(lm, g.id_of(nd("reachable(home, paris)"))));
		CHECK(lm.size() == 25 + 3);
	}
	SECTION("empty program") {
		CHECK(least_model(ground_text("")).empty());
	}
}
