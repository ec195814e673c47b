#ifndef NDLP_STABLE_HPP
#define NDLP_STABLE_HPP

#include <ndlp/interpretation.hpp>

#include <optional>

namespace ndlp {

// The negation-free program left after deleting every rule with a negated NdAtom in
// `witness` and stripping the remaining negative literals.
struct ReductProgram {
	std::vector<GroundRule> rules;
	Interpretation          witness;
};

ReductProgram  reduct(const GroundProgram& g, const Interpretation& i);
bool           is_stable(const GroundProgram& g, const Interpretation& i);
// Heads of rules with every positive body NdAtom in i and every negated one outside i.
Interpretation tprime_step(const GroundProgram& g, const Interpretation& i);

struct StableResult {
	std::vector<Interpretation> models; // sorted
	bool                        truncated = false;
	size_t                      choices   = 0; // branching decisions made by the search
};

// Every stable model of g. The search branches on the NdAtoms that occur negated; each
// partial assignment is propagated with two least fixpoints (rules certainly applicable,
// rules possibly applicable). A leaf's candidate passes a final is_stable check.
StableResult enumerate_stable(const GroundProgram& g, std::optional<size_t> max_models = std::nullopt);

} // namespace ndlp

#endif
