#ifndef NDLP_INTERPRETATION_HPP
#define NDLP_INTERPRETATION_HPP

#include <ndlp/grounder.hpp>

#include <string>
#include <vector>

namespace ndlp {

// A set of ground NdAtoms of one ground program, kept as sorted, duplicate-free ids.
// Id order equals the canonical NdAtom order, so vector comparison orders interpretations
// lexicographically by their canonical encoding.
using Interpretation = std::vector<AtomId>;

Interpretation make_interpretation(std::vector<AtomId> ids);
// Throws Errc::not_in_base for an NdAtom that does not occur in `g`.
Interpretation make_interpretation(const GroundProgram& g, const std::vector<NdAtom>& atoms);

bool contains(const Interpretation& i, AtomId id);
bool is_subset(const Interpretation& sub, const Interpretation& super);

Interpretation set_union(const Interpretation& a, const Interpretation& b);
Interpretation set_intersection(const Interpretation& a, const Interpretation& b);
Interpretation set_difference(const Interpretation& a, const Interpretation& b);
// base minus i
Interpretation complement(const GroundProgram& g, const Interpretation& i);

std::vector<NdAtom> to_nd_atoms(const GroundProgram& g, const Interpretation& i);
std::string         str(const GroundProgram& g, const Interpretation& i); // {{a}, {b, c}}

} // namespace ndlp

#endif
