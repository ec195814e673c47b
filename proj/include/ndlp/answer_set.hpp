#ifndef NDLP_ANSWER_SET_HPP
#define NDLP_ANSWER_SET_HPP

#include <ndlp/wellfounded.hpp>

#include <cstdint>
#include <optional>

namespace ndlp {

// One branch of the solution tree. signed_negatives are rendered "not a".
struct AnswerSet {
	std::vector<Atom> atoms;            // sorted
	std::vector<Atom> signed_negatives; // sorted

	friend bool                 operator==(const AnswerSet&, const AnswerSet&) = default;
	friend std::strong_ordering operator<=>(const AnswerSet& lhs, const AnswerSet& rhs);

	std::vector<std::string> elements() const; // atoms, then "not a" entries
	std::string              str() const;      // {a, b, not c}
};

struct Expansion {
	std::vector<AnswerSet> sets; // sorted, distinct
	bool                   truncated = false;
};

struct ExpandOptions {
	std::optional<size_t> cap;
	bool                  subset_minimal = false; // drop sets that strictly contain another one
};

// Images of all choice functions picking one atom per NdAtom of `pos` and one signed
// entry per NdAtom of `neg`. Choices that would put an atom on both sides are skipped.
Expansion expand(const std::vector<NdAtom>& pos, const std::vector<NdAtom>& neg = {}, const ExpandOptions& opt = {});
Expansion expand(const GroundProgram& g, const Interpretation& model, const ExpandOptions& opt = {});
Expansion expand(const GroundProgram& g, const PartialInterpretation& model, const ExpandOptions& opt = {});

struct Count {
	uint64_t value = 0;
	bool     exact = true; // false: value is the cap and more sets exist
};

Count count(const std::vector<NdAtom>& pos, const std::vector<NdAtom>& neg = {}, std::optional<size_t> cap = std::nullopt);

} // namespace ndlp

#endif
