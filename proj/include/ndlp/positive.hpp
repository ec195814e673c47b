#ifndef NDLP_POSITIVE_HPP
#define NDLP_POSITIVE_HPP

#include <ndlp/interpretation.hpp>

#include <optional>
#include <span>

namespace ndlp {

// Satisfaction is membership: a positive body NdAtom holds iff it is in i, a negated one iff it is not.
bool satisfies_rule(const Interpretation& i, const GroundRule& r);
bool is_model(const Interpretation& i, const GroundProgram& g);

// Default cap for the brute-force oracles: NDLP_MAX_BASE if set, else 20.
size_t max_base();

// Every subset of the base that is a model, sorted. Exponential; meant as a test oracle.
// Throws Errc::cap_exceeded when the base is larger than `cap` (default max_base()).
std::vector<Interpretation> enumerate_models(const GroundProgram& g, std::optional<size_t> cap = std::nullopt);

// T_P. The GroundProgram overloads throw Errc::not_positive if any rule has a negated literal;
// the span overloads ignore negative literals and are used on reducts.
Interpretation tp_step(const GroundProgram& g, const Interpretation& i);
Interpretation tp_step(std::span<const GroundRule> rules, const Interpretation& i);

// Iterates tp_step from the empty set until two iterates coincide.
Interpretation least_model(const GroundProgram& g);
Interpretation least_model(std::span<const GroundRule> rules);

} // namespace ndlp

#endif
