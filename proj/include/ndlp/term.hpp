#ifndef NDLP_TERM_HPP
#define NDLP_TERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ndlp {

// A first-order term. Compound terms and arithmetic sums own their operands by value.
class Term {
public:
	enum class Kind : uint8_t { integer, symbol, compound, variable, sum };

	static Term integer(int64_t v);
	static Term symbol(std::string name);
	static Term variable(std::string name);
	static Term compound(std::string functor, std::vector<Term> args);
	// base + offset; base must be a variable or an integer.
	static Term sum(Term base, int64_t offset);

	Kind               kind() const { return kind_; }
	int64_t            value() const { return value_; }  // integer value, or offset of a sum
	const std::string& name() const { return name_; }    // symbol, functor or variable name
	const std::vector<Term>& args() const { return args_; }
	const Term&        sum_base() const { return args_.front(); }

	bool is_ground() const;
	void collect_variables(std::vector<std::string>& out) const;

	friend bool                 operator==(const Term&, const Term&) = default;
	friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs);

	std::string str() const;

private:
	Kind              kind_  = Kind::integer;
	int64_t           value_ = 0;
	std::string       name_;
	std::vector<Term> args_;
};

// p(t1,...,tn). A leading '-' on the predicate encodes classical negation as a distinct name.
struct Atom {
	std::string       predicate;
	std::vector<Term> args;

	size_t arity() const { return args.size(); }
	bool   is_ground() const;
	void   collect_variables(std::vector<std::string>& out) const;

	// predicate name, then arity, then arguments (integers before symbols).
	friend std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs);
	friend bool                 operator==(const Atom&, const Atom&) = default;

	std::string str() const;
};

} // namespace ndlp

#endif
