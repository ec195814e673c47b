#ifndef NDLP_SYNTAX_HPP
#define NDLP_SYNTAX_HPP

#include <ndlp/error.hpp>
#include <ndlp/term.hpp>

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ndlp {

// Built-in comparisons are atoms with predicate "==" or "!=" and two arguments.
bool is_comparison(const Atom& a);

// A non-deterministic atom: a non-empty set of atoms kept sorted and duplicate free.
class NdAtom {
public:
	NdAtom() = default;

	const std::vector<Atom>& atoms() const { return atoms_; }
	size_t                   size() const { return atoms_.size(); }
	bool                     is_singleton() const { return atoms_.size() == 1; }
	bool                     is_ground() const;
	bool                     is_comparison() const { return is_singleton() && ndlp::is_comparison(atoms_.front()); }

	friend bool                 operator==(const NdAtom&, const NdAtom&) = default;
	friend std::strong_ordering operator<=>(const NdAtom& lhs, const NdAtom& rhs);

	std::string str() const; // {a, b}

private:
	friend NdAtom canonicalize(std::vector<Atom> atoms);
	std::vector<Atom> atoms_;
};

// Sorts and deduplicates; throws Errc::empty_nd_atom on an empty list.
NdAtom canonicalize(std::vector<Atom> atoms);
inline NdAtom singleton(Atom a) { return canonicalize({std::move(a)}); }

struct Literal {
	bool   negative = false; // negation as failure
	NdAtom atom;

	friend bool operator==(const Literal&, const Literal&) = default;
	std::string str() const;
};

struct Rule {
	NdAtom               head;
	std::vector<Literal> body; // empty: fact
	SourceLocation       origin;

	bool is_fact() const { return body.empty(); }
	bool has_negation() const;
	bool is_ground() const;

	friend bool operator==(const Rule& lhs, const Rule& rhs) { return lhs.head == rhs.head && lhs.body == rhs.body; }
	std::string str() const;
};

struct Program {
	std::vector<Rule>           rules;
	std::optional<int64_t>      horizon;
	std::map<std::string, Term> constants;

	bool        has_negation() const;
	friend bool operator==(const Program& lhs, const Program& rhs) {
		return lhs.rules == rhs.rules && lhs.horizon == rhs.horizon && lhs.constants == rhs.constants;
	}
	// Directives first, then one rule per line, in the input syntax.
	std::string str() const;
};

// Variables named T, T1, T2, ... range over the time domain 0..horizon.
bool is_time_variable(const std::string& name);

// Load-time checks: consistent arities and rule safety. Throws Error.
void check_arities(std::span<const Rule> rules);
void check_safety(const Rule& r);

} // namespace ndlp

#endif
