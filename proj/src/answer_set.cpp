#include <ndlp/answer_set.hpp>

#include <algorithm>
#include <set>

namespace ndlp {

std::strong_ordering operator<=>(const AnswerSet& lhs, const AnswerSet& rhs) {
	if (auto c = std::lexicographical_compare_three_way(lhs.atoms.begin(), lhs.atoms.end(), rhs.atoms.begin(), rhs.atoms.end());
	    c != 0) {
		return c;
	}
	return std::lexicographical_compare_three_way(lhs.signed_negatives.begin(), lhs.signed_negatives.end(),
	                                              rhs.signed_negatives.begin(), rhs.signed_negatives.end());
}

std::vector<std::string> AnswerSet::elements() const {
	std::vector<std::string> out;
	for (const auto& a : atoms) out.push_back(a.str());
	for (const auto& a : signed_negatives) out.push_back("not " + a.str());
	return out;
}

std::string AnswerSet::str() const {
	std::string out = "{";
	bool        first = true;
	for (const auto& e : elements()) {
		if (!first) out += ", ";
		out += e;
		first = false;
	}
	return out + "}";
}

namespace {

bool strictly_contains(const AnswerSet& big, const AnswerSet& small) {
	return big != small && std::includes(big.atoms.begin(), big.atoms.end(), small.atoms.begin(), small.atoms.end()) &&
	       std::includes(big.signed_negatives.begin(), big.signed_negatives.end(), small.signed_negatives.begin(),
	                     small.signed_negatives.end());
}

// Calls visit(set) for every distinct choice image until it returns false.
template <class Visit>
void choices(const std::vector<NdAtom>& pos, const std::vector<NdAtom>& neg, Visit visit) {
	std::vector<const NdAtom*> slots;
	for (const auto& a : pos) slots.push_back(&a);
	for (const auto& a : neg) slots.push_back(&a);
	std::vector<size_t> pick(slots.size(), 0);
	for (;;) {
		AnswerSet s;
		for (size_t k = 0; k != slots.size(); ++k) {
			(k < pos.size() ? s.atoms : s.signed_negatives).push_back(slots[k]->atoms()[pick[k]]);
		}
		for (auto* v : {&s.atoms, &s.signed_negatives}) {
			std::sort(v->begin(), v->end());
			v->erase(std::unique(v->begin(), v->end()), v->end());
		}
		bool clash = std::any_of(s.atoms.begin(), s.atoms.end(), [&](const Atom& a) {
			return std::binary_search(s.signed_negatives.begin(), s.signed_negatives.end(), a);
		});
		if (!clash && !visit(std::move(s))) return;

		size_t k = slots.size();
		while (k > 0) {
			--k;
			if (++pick[k] < slots[k]->size()) break;
			pick[k] = 0;
			if (k == 0) return;
		}
		if (slots.empty()) return;
	}
}

} // namespace

Expansion expand(const std::vector<NdAtom>& pos, const std::vector<NdAtom>& neg, const ExpandOptions& opt) {
	std::set<AnswerSet> found;
	Expansion           out;
	choices(pos, neg, [&](AnswerSet s) {
		if (found.contains(s)) return true;
		if (opt.cap && found.size() >= *opt.cap) {
			out.truncated = true;
			return false;
		}
		found.insert(std::move(s));
		return true;
	});
	out.sets.assign(found.begin(), found.end());
	if (opt.subset_minimal) {
		std::vector<AnswerSet> kept;
		for (const auto& s : out.sets) {
			if (std::none_of(out.sets.begin(), out.sets.end(), [&](const AnswerSet& t) { return strictly_contains(s, t); })) {
				kept.push_back(s);
			}
		}
		out.sets = std::move(kept);
	}
	return out;
}

Expansion expand(const GroundProgram& g, const Interpretation& model, const ExpandOptions& opt) {
	return expand(to_nd_atoms(g, model), {}, opt);
}

Expansion expand(const GroundProgram& g, const PartialInterpretation& model, const ExpandOptions& opt) {
	return expand(to_nd_atoms(g, model.pos), to_nd_atoms(g, model.neg), opt);
}

Count count(const std::vector<NdAtom>& pos, const std::vector<NdAtom>& neg, std::optional<size_t> cap) {
	auto e = expand(pos, neg, ExpandOptions{cap, false});
	return Count{e.sets.size(), !e.truncated};
}

} // namespace ndlp
