#ifndef NDLP_GROUNDER_HPP
#define NDLP_GROUNDER_HPP

#include <ndlp/syntax.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ndlp {

// Index into GroundProgram::base(). Ids follow the canonical NdAtom order.
using AtomId = uint32_t;

struct GroundLiteral {
	AtomId atom     = 0;
	bool   negative = false;

	friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
};

struct GroundRule {
	AtomId                     head = 0;
	std::vector<GroundLiteral> body; // source order, duplicates removed
	std::vector<AtomId>        pos;  // sorted
	std::vector<AtomId>        neg;  // sorted
	uint32_t                   source = 0; // index of the originating rule
	SourceLocation             origin;

	bool is_fact() const { return body.empty(); }
};

class GroundProgram {
public:
	// Assembles a ground program from ground rules: builds the restricted base, assigns ids,
	// drops duplicate rules. `source` parallels `rules`.
	static GroundProgram from_rules(const std::vector<Rule>& rules, const std::vector<uint32_t>& source);

	const std::vector<NdAtom>&     base() const { return base_; }
	const std::vector<AtomId>&     heads() const { return heads_; }
	const std::vector<GroundRule>& rules() const { return rules_; }
	size_t                         size() const { return base_.size(); }

	const NdAtom&         atom(AtomId id) const { return base_[id]; }
	std::optional<AtomId> find(const NdAtom& a) const;
	AtomId                id_of(const NdAtom& a) const; // throws Errc::not_in_base
	bool                  is_head(AtomId id) const { return is_head_[id]; }
	bool                  has_negation() const;

	std::string rule_str(const GroundRule& r) const;
	// One ground rule per line in the input syntax.
	std::string dump() const;
	Program     to_program() const;

	friend bool operator==(const GroundProgram& lhs, const GroundProgram& rhs);

private:
	std::vector<NdAtom>     base_;
	std::vector<AtomId>     heads_;
	std::vector<bool>       is_head_;
	std::vector<GroundRule> rules_;
};

// Instantiates every rule over its variable domains: time variables (T, T1, ...) range over
// 0..horizon, all other variables over the ground argument terms occurring in the program.
// `horizon` overrides the program's #horizon directive.
GroundProgram ground(const Program& program, std::optional<int64_t> horizon = std::nullopt);

struct RestrictedBase {
	std::vector<NdAtom> base;
	std::vector<NdAtom> heads;
};
RestrictedBase restricted_base(const GroundProgram& g);

} // namespace ndlp

#endif
