#ifndef NDLP_DET_ORACLE_HPP
#define NDLP_DET_ORACLE_HPP

// Reference semantics for ordinary (deterministic) ground normal programs over plain atoms.
// Shares no evaluation code with the NdAtom engines; atoms are opaque strings.

#include <ndlp/syntax.hpp>

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ndlp::det {

using AtomSet = std::set<std::string>;

struct DetRule {
	std::string              head;
	std::vector<std::string> pos;
	std::vector<std::string> neg;
};

struct DetProgram {
	std::vector<DetRule> rules;

	AtomSet     atoms() const;
	bool        has_negation() const;
	std::string str() const; // "a :- b, not c." per line
};

// Ground rules "h :- b1, not b2." or facts "h."; '%' starts a comment.
DetProgram parse(std::string_view text);
// Wraps every atom into a singleton NdAtom.
Program    embed(const DetProgram& det);
// Inverse of embed for ground programs made of singletons only; throws Errc::usage otherwise.
DetProgram from_program(const Program& p);

AtomSet              det_least(const DetProgram& det); // negative literals are ignored
std::vector<AtomSet> det_stable(const DetProgram& det);

struct WfModel {
	AtomSet pos;
	AtomSet neg;
	friend bool operator==(const WfModel&, const WfModel&) = default;
};
// Alternating fixpoint: pos = lfp(G o G), neg = atoms - G(pos), with G(S) = least model of P^S.
WfModel det_wf(const DetProgram& det);

} // namespace ndlp::det

#endif
