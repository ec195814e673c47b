#include "helpers.hpp"
#include "oracles.hpp"

#include <ndlp/positive.hpp>
#include <ndlp/stable.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ndlp;
using namespace ndlp::test;

namespace {

std::string rules_str(const GroundProgram& g, const ReductProgram& r) {
	std::string out;
	for (const auto& rule : r.rules) out += g.rule_str(rule) + "\n";
	return out;
}

} // namespace

TEST_CASE("reduct", "[stable]") {
	auto g  = ground_corpus("teaching.ndlp");
	auto i1 = interp(g, {"{math(101), math(102)}"});
	CHECK(rules_str(g, reduct(g, i1)) == "{math(101), math(102)}.\n");
	CHECK(reduct(g, i1).witness == i1);
	auto both = interp(g, {"{math(101), math(102)}", "{stat(101), stat(102)}"});
	CHECK(reduct(g, both).rules.empty());

	auto pos = ground_corpus("fred.ndlp");
	auto r   = reduct(pos, least_model(pos));
	REQUIRE(r.rules.size() == pos.rules().size());
	for (size_t k = 0; k != r.rules.size(); ++k) CHECK(pos.rule_str(r.rules[k]) == pos.rule_str(pos.rules()[k]));
}

TEST_CASE("stability check", "[stable]") {
	auto g = ground_corpus("teaching.ndlp");
	CHECK(is_stable(g, interp(g, {"{math(101), math(102)}"})));
	CHECK(least_model(reduct(g, interp(g, {"{math(101), math(102)}"})).rules) == interp(g, {"{math(101), math(102)}"}));
	auto both = interp(g, {"{math(101), math(102)}", "{stat(101), stat(102)}"});
	CHECK_FALSE(is_stable(g, both));
	CHECK(least_model(reduct(g, both).rules).empty());

	auto f = ground_corpus("fixpoint_not_stable.ndlp");
	CHECK_FALSE(is_stable(f, interp(f, {"{a1, a2}", "{b1, b2}"})));
}

TEST_CASE("one-step operator", "[stable]") {
	auto g = ground_corpus("wf_single.ndlp");
	CHECK(tprime_step(g, {}) == interp(g, {"{a1, a2}"}));
	CHECK(tprime_step(g, interp(g, {"{b1, b2}"})).empty());

	auto pos = ground_corpus("embedding.ndlp");
	for (const auto& i : enumerate_models(pos)) CHECK(tprime_step(pos, i) == tp_step(pos, i));
}

TEST_CASE("stable model enumeration", "[stable]") {
	SECTION("teaching") {
		auto g = ground_corpus("teaching.ndlp");
		auto r = enumerate_stable(g);
		CHECK_FALSE(r.truncated);
		CHECK(r.models == std::vector<Interpretation>{interp(g, {"{math(101), math(102)}"}), interp(g, {"{stat(101), stat(102)}"})});
		CHECK(r.models == brute_stable(g));
	}
	SECTION("department head") {
		auto g = ground_corpus("teaching2.ndlp");
		CHECK(enumerate_stable(g).models ==
		      std::vector<Interpretation>{interp(g, {"{math(101), math(102)}", "math(102)"}),
		                                  interp(g, {"{stat(101), stat(102)}", "stat(101)"})});
	}
	SECTION("self-defeating rule") {
		CHECK(enumerate_stable(ground_corpus("no_stable.ndlp")).models.empty());
		auto g = ground_text("{a1, a2}. {b1, b2} :- {a1, a2}.");
		CHECK(enumerate_stable(g).models == std::vector<Interpretation>{interp(g, {"{a1, a2}", "{b1, b2}"})});
		CHECK(enumerate_stable(ground_corpus("fixpoint_not_stable.ndlp")).models.empty());
	}
	SECTION("positive programs have exactly the least model") {
		for (const char* f : {"fred.ndlp", "connection.ndlp", "embedding.ndlp"}) {
			auto g = ground_corpus(f);
			CHECK(enumerate_stable(g).models == std::vector<Interpretation>{least_model(g)});
		}
	}
	SECTION("empty program") {
		CHECK(enumerate_stable(ground_text("")).models == std::vector<Interpretation>{Interpretation{}});
	}
	SECTION("cap") {
		auto g = ground_corpus("teaching.ndlp");
		auto r = enumerate_stable(g, 1);
		CHECK(r.truncated);
		CHECK(r.models.size() == 1);
		CHECK_FALSE(enumerate_stable(g, 2).truncated);
	}
	SECTION("robot plans, one action per time point") {
		auto g = ground_corpus("robot.ndlp", 2);
		auto r = enumerate_stable(g);
		CHECK(r.models.size() == 64);
		for (const auto& m : r.models) {
			size_t occ = 0;
			for (AtomId a : m) occ += g.atom(a).str().rfind("{occ(", 0) == 0;
			CHECK(occ == 3);
		}
	}
}
