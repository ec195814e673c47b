#ifndef NDLP_TEST_ORACLES_HPP
#define NDLP_TEST_ORACLES_HPP

// Brute-force reference computations. They follow the definitions directly and share no
// code with the engines beyond the ground program representation.

#include <ndlp/answer_set.hpp>
#include <ndlp/grounder.hpp>
#include <ndlp/wellfounded.hpp>

#include <algorithm>
#include <set>

namespace ndlp::test {

inline bool member(const std::vector<AtomId>& s, AtomId a) {
	return std::find(s.begin(), s.end(), a) != s.end();
}

inline std::vector<AtomId> from_mask(uint64_t mask, const std::vector<AtomId>& universe) {
	std::vector<AtomId> out;
	for (size_t k = 0; k != universe.size(); ++k) {
		if (mask >> k & 1u) out.push_back(universe[k]);
	}
	std::sort(out.begin(), out.end());
	return out;
}

inline std::vector<AtomId> all_ids(const GroundProgram& g) {
	std::vector<AtomId> out(g.size());
	for (AtomId i = 0; i != g.size(); ++i) out[i] = i;
	return out;
}

// Least model of the reduct, computed naively from the definition.
inline std::vector<AtomId> naive_reduct_lfp(const GroundProgram& g, const std::vector<AtomId>& i) {
	std::vector<AtomId> m;
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : g.rules()) {
			bool ok = !member(m, r.head);
			for (const auto& l : r.body) {
				if (!ok) break;
				ok = l.negative ? !member(i, l.atom) : member(m, l.atom);
			}
			if (ok) {
				m.push_back(r.head);
				changed = true;
			}
		}
	}
	std::sort(m.begin(), m.end());
	return m;
}

// All subsets of the heads that equal the least model of their own reduct.
inline std::vector<std::vector<AtomId>> brute_stable(const GroundProgram& g) {
	std::vector<std::vector<AtomId>> out;
	const auto&                      heads = g.heads();
	for (uint64_t mask = 0; mask != (uint64_t(1) << heads.size()); ++mask) {
		auto i = from_mask(mask, heads);
		if (naive_reduct_lfp(g, i) == i) out.push_back(std::move(i));
	}
	std::sort(out.begin(), out.end());
	return out;
}

// xi is unfounded w.r.t. (pos, neg) when every rule with a head in xi has a false literal
// or a positive body NdAtom in xi.
inline bool is_unfounded(const GroundProgram& g, const PartialInterpretation& i, const std::vector<AtomId>& xi) {
	for (const auto& r : g.rules()) {
		if (!member(xi, r.head)) continue;
		bool ok = false;
		for (const auto& l : r.body) {
			bool is_false = l.negative ? member(i.pos, l.atom) : member(i.neg, l.atom);
			if (is_false || (!l.negative && member(xi, l.atom))) {
				ok = true;
				break;
			}
		}
		if (!ok) return false;
	}
	return true;
}

inline std::vector<AtomId> brute_greatest_unfounded(const GroundProgram& g, const PartialInterpretation& i) {
	std::set<AtomId> acc;
	const auto       ids = all_ids(g);
	for (uint64_t mask = 1; mask < (uint64_t(1) << ids.size()); ++mask) {
		auto xi = from_mask(mask, ids);
		if (is_unfounded(g, i, xi)) acc.insert(xi.begin(), xi.end());
	}
	return {acc.begin(), acc.end()};
}

// Choice images by recursion over the NdAtoms; atoms encoded as strings, negatives prefixed "not ".
inline std::set<std::set<std::string>> brute_answer_sets(const std::vector<NdAtom>& pos, const std::vector<NdAtom>& neg) {
	std::set<std::set<std::string>> out;
	std::vector<std::string>        chosen;
	auto rec = [&](auto& self, size_t k) -> void {
		if (k == pos.size() + neg.size()) {
			std::set<std::string> s(chosen.begin(), chosen.end());
			for (const auto& e : s) {
				if (e.rfind("not ", 0) == 0 && s.contains(e.substr(4))) return;
			}
			out.insert(std::move(s));
			return;
		}
		const NdAtom& a      = k < pos.size() ? pos[k] : neg[k - pos.size()];
		std::string   prefix = k < pos.size() ? "" : "not ";
		for (const auto& atom : a.atoms()) {
			chosen.push_back(prefix + atom.str());
			self(self, k + 1);
			chosen.pop_back();
		}
	};
	rec(rec, 0);
	return out;
}

inline std::set<std::set<std::string>> as_string_sets(const Expansion& e) {
	std::set<std::set<std::string>> out;
	for (const auto& s : e.sets) {
		auto el = s.elements();
		out.insert(std::set<std::string>(el.begin(), el.end()));
	}
	return out;
}

} // namespace ndlp::test

#endif
