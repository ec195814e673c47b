#include <ndlp/positive.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ndlp {

bool satisfies_rule(const Interpretation& i, const GroundRule& r) {
	if (contains(i, r.head)) {
		return true;
	}
	for (const auto& l : r.body) {
		if (contains(i, l.atom) == l.negative) return true; // body literal fails
	}
	return false;
}

bool is_model(const Interpretation& i, const GroundProgram& g) {
	return std::all_of(g.rules().begin(), g.rules().end(), [&](const GroundRule& r) { return satisfies_rule(i, r); });
}

size_t max_base() {
	if (const char* env = std::getenv("NDLP_MAX_BASE")) {
		try {
			return static_cast<size_t>(std::stoul(env));
		}
		catch (const std::exception&) {
			throw Error(Errc::usage, std::string("NDLP_MAX_BASE is not a number: ") + env);
		}
	}
	return 20;
}

std::vector<Interpretation> enumerate_models(const GroundProgram& g, std::optional<size_t> cap) {
	size_t limit = cap ? *cap : max_base();
	if (g.size() > limit || g.size() >= 63) {
		throw Error(Errc::cap_exceeded,
		            "model enumeration over " + std::to_string(g.size()) + " NdAtoms exceeds the cap of " + std::to_string(limit));
	}
	std::vector<Interpretation> out;
	const uint64_t              n = uint64_t(1) << g.size();
	for (uint64_t mask = 0; mask != n; ++mask) {
		Interpretation i;
		for (AtomId id = 0; id != g.size(); ++id) {
			if (mask >> id & 1u) i.push_back(id);
		}
		if (is_model(i, g)) out.push_back(std::move(i));
	}
	std::sort(out.begin(), out.end());
	return out;
}

Interpretation tp_step(std::span<const GroundRule> rules, const Interpretation& i) {
	std::vector<AtomId> heads;
	for (const auto& r : rules) {
		if (std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId b) { return contains(i, b); })) {
			heads.push_back(r.head);
		}
	}
	return make_interpretation(std::move(heads));
}

Interpretation tp_step(const GroundProgram& g, const Interpretation& i) {
	if (g.has_negation()) {
		throw Error(Errc::not_positive, "T_P is defined for negation-free programs only");
	}
	return tp_step(g.rules(), i);
}

Interpretation least_model(std::span<const GroundRule> rules) {
	Interpretation cur;
	for (;;) {
		Interpretation next = tp_step(rules, cur);
		if (next == cur) return cur;
		cur = std::move(next);
	}
}

Interpretation least_model(const GroundProgram& g) {
	if (g.has_negation()) {
		throw Error(Errc::not_positive, "the least model is defined for negation-free programs only");
	}
	return least_model(g.rules());
}

} // namespace ndlp
