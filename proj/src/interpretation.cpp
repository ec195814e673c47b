#include <ndlp/interpretation.hpp>

#include <algorithm>
#include <iterator>

namespace ndlp {

Interpretation make_interpretation(std::vector<AtomId> ids) {
	std::sort(ids.begin(), ids.end());
	ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
	return ids;
}

Interpretation make_interpretation(const GroundProgram& g, const std::vector<NdAtom>& atoms) {
	std::vector<AtomId> ids;
	ids.reserve(atoms.size());
	for (const auto& a : atoms) ids.push_back(g.id_of(a));
	return make_interpretation(std::move(ids));
}

bool contains(const Interpretation& i, AtomId id) {
	return std::binary_search(i.begin(), i.end(), id);
}

bool is_subset(const Interpretation& sub, const Interpretation& super) {
	return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Interpretation set_union(const Interpretation& a, const Interpretation& b) {
	Interpretation out;
	std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

Interpretation set_intersection(const Interpretation& a, const Interpretation& b) {
	Interpretation out;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

Interpretation set_difference(const Interpretation& a, const Interpretation& b) {
	Interpretation out;
	std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
	return out;
}

Interpretation complement(const GroundProgram& g, const Interpretation& i) {
	Interpretation out;
	for (AtomId id = 0; id != g.size(); ++id) {
		if (!contains(i, id)) out.push_back(id);
	}
	return out;
}

std::vector<NdAtom> to_nd_atoms(const GroundProgram& g, const Interpretation& i) {
	std::vector<NdAtom> out;
	out.reserve(i.size());
	for (AtomId id : i) out.push_back(g.atom(id));
	return out;
}

std::string str(const GroundProgram& g, const Interpretation& i) {
	std::string out = "{";
	for (size_t k = 0; k != i.size(); ++k) {
		if (k) out += ", ";
		out += g.atom(i[k]).str();
	}
	return out + "}";
}

} // namespace ndlp
