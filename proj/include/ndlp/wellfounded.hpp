#ifndef NDLP_WELLFOUNDED_HPP
#define NDLP_WELLFOUNDED_HPP

#include <ndlp/interpretation.hpp>

namespace ndlp {

// Disjoint sets of true (pos) and false (neg) NdAtoms. Anything in neither is undefined.
struct PartialInterpretation {
	Interpretation pos;
	Interpretation neg;

	bool total(const GroundProgram& g) const { return pos.size() + neg.size() == g.size(); }
	friend bool operator==(const PartialInterpretation&, const PartialInterpretation&) = default;
};

enum class Truth { true_, false_, undefined };
const char* to_string(Truth t);

Truth wf_truth(const PartialInterpretation& i, AtomId a);
// NdAtoms that do not occur in g are false.
Truth wf_truth(const GroundProgram& g, const PartialInterpretation& i, const NdAtom& a);

// Base minus the founded NdAtoms: those derivable through rules with no false literal
// (B false iff B in neg, not B false iff B in pos) from already founded positive bodies.
Interpretation greatest_unfounded(const GroundProgram& g, const PartialInterpretation& i);
// Heads of rules whose positive body is in pos and whose negated body is in neg.
Interpretation wf_tp_step(const GroundProgram& g, const PartialInterpretation& i);
// (wf_tp_step, greatest_unfounded); throws Errc::inconsistent if the two overlap.
PartialInterpretation wp_step(const GroundProgram& g, const PartialInterpretation& i);

struct WellFoundedResult {
	PartialInterpretation model;
	bool                  total = false;
	size_t                steps = 0; // first k with I_k = I_(k+1), starting from I_0 = (empty, empty)
};

WellFoundedResult well_founded_model(const GroundProgram& g);

} // namespace ndlp

#endif
