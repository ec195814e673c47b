#include <ndlp/wellfounded.hpp>

#include <algorithm>

namespace ndlp {

const char* to_string(Truth t) {
	switch (t) {
		case Truth::true_:     return "true";
		case Truth::false_:    return "false";
		case Truth::undefined: return "undefined";
	}
	return "?";
}

Truth wf_truth(const PartialInterpretation& i, AtomId a) {
	if (contains(i.pos, a)) return Truth::true_;
	if (contains(i.neg, a)) return Truth::false_;
	return Truth::undefined;
}

Truth wf_truth(const GroundProgram& g, const PartialInterpretation& i, const NdAtom& a) {
	auto id = g.find(a);
	return id ? wf_truth(i, *id) : Truth::false_;
}

Interpretation greatest_unfounded(const GroundProgram& g, const PartialInterpretation& i) {
	std::vector<const GroundRule*> live;
	for (const auto& r : g.rules()) {
		bool blocked = std::any_of(r.pos.begin(), r.pos.end(), [&](AtomId b) { return contains(i.neg, b); }) ||
		               std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return contains(i.pos, b); });
		if (!blocked) live.push_back(&r);
	}
	std::vector<bool> founded(g.size(), false);
	for (bool changed = true; changed;) {
		changed = false;
		for (const GroundRule* r : live) {
			if (founded[r->head]) continue;
			if (std::all_of(r->pos.begin(), r->pos.end(), [&](AtomId b) { return founded[b]; })) {
				founded[r->head] = true;
				changed          = true;
			}
		}
	}
	Interpretation out;
	for (AtomId id = 0; id != g.size(); ++id) {
		if (!founded[id]) out.push_back(id);
	}
	return out;
}

Interpretation wf_tp_step(const GroundProgram& g, const PartialInterpretation& i) {
	std::vector<AtomId> heads;
	for (const auto& r : g.rules()) {
		if (std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId b) { return contains(i.pos, b); }) &&
		    std::all_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return contains(i.neg, b); })) {
			heads.push_back(r.head);
		}
	}
	return make_interpretation(std::move(heads));
}

PartialInterpretation wp_step(const GroundProgram& g, const PartialInterpretation& i) {
	PartialInterpretation next{wf_tp_step(g, i), greatest_unfounded(g, i)};
	auto                  clash = set_intersection(next.pos, next.neg);
	if (!clash.empty()) {
		throw Error(Errc::inconsistent, "W_P derives " + g.atom(clash.front()).str() + " both true and unfounded");
	}
	return next;
}

WellFoundedResult well_founded_model(const GroundProgram& g) {
	WellFoundedResult res;
	// The sequence grows monotonically, so it settles within 2|base| + 1 steps.
	for (size_t bound = 2 * g.size() + 2;; ++res.steps) {
		PartialInterpretation next = wp_step(g, res.model);
		if (next == res.model) break;
		if (res.steps == bound) {
			throw Error(Errc::inconsistent, "well-founded iteration did not converge");
		}
		res.model = std::move(next);
	}
	res.total = res.model.total(g);
	return res;
}

} // namespace ndlp
