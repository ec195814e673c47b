#include <ndlp/term.hpp>

#include <algorithm>

namespace ndlp {

Term Term::integer(int64_t v) {
	Term t;
	t.kind_  = Kind::integer;
	t.value_ = v;
	return t;
}

Term Term::symbol(std::string name) {
	Term t;
	t.kind_ = Kind::symbol;
	t.name_ = std::move(name);
	return t;
}

Term Term::variable(std::string name) {
	Term t;
	t.kind_ = Kind::variable;
	t.name_ = std::move(name);
	return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
	if (args.empty()) {
		return symbol(std::move(functor));
	}
	Term t;
	t.kind_ = Kind::compound;
	t.name_ = std::move(functor);
	t.args_ = std::move(args);
	return t;
}

Term Term::sum(Term base, int64_t offset) {
	Term t;
	t.kind_  = Kind::sum;
	t.value_ = offset;
	t.args_.push_back(std::move(base));
	return t;
}

bool Term::is_ground() const {
	switch (kind_) {
		case Kind::integer:
		case Kind::symbol:   return true;
		case Kind::variable:
		case Kind::sum:      return false;
		case Kind::compound: return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
	}
	return false;
}

void Term::collect_variables(std::vector<std::string>& out) const {
	if (kind_ == Kind::variable) {
		if (std::find(out.begin(), out.end(), name_) == out.end()) {
			out.push_back(name_);
		}
		return;
	}
	for (const auto& a : args_) {
		a.collect_variables(out);
	}
}

std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
	if (lhs.kind_ != rhs.kind_) {
		return lhs.kind_ <=> rhs.kind_;
	}
	switch (lhs.kind_) {
		case Term::Kind::integer: return lhs.value_ <=> rhs.value_;
		case Term::Kind::symbol:
		case Term::Kind::variable: return lhs.name_ <=> rhs.name_;
		case Term::Kind::compound:
			if (auto c = lhs.name_ <=> rhs.name_; c != 0) return c;
			if (auto c = lhs.args_.size() <=> rhs.args_.size(); c != 0) return c;
			return std::lexicographical_compare_three_way(lhs.args_.begin(), lhs.args_.end(), rhs.args_.begin(), rhs.args_.end());
		case Term::Kind::sum:
			if (auto c = lhs.args_.front() <=> rhs.args_.front(); c != 0) return c;
			return lhs.value_ <=> rhs.value_;
	}
	return std::strong_ordering::equal;
}

std::string Term::str() const {
	switch (kind_) {
		case Kind::integer:  return std::to_string(value_);
		case Kind::symbol:
		case Kind::variable: return name_;
		case Kind::sum:      return args_.front().str() + "+" + std::to_string(value_);
		case Kind::compound: {
			std::string out = name_ + "(";
			for (size_t i = 0; i != args_.size(); ++i) {
				if (i) out += ',';
				out += args_[i].str();
			}
			return out + ")";
		}
	}
	return {};
}

bool Atom::is_ground() const {
	return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

void Atom::collect_variables(std::vector<std::string>& out) const {
	for (const auto& a : args) {
		a.collect_variables(out);
	}
}

std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs) {
	if (auto c = lhs.predicate <=> rhs.predicate; c != 0) return c;
	if (auto c = lhs.args.size() <=> rhs.args.size(); c != 0) return c;
	return std::lexicographical_compare_three_way(lhs.args.begin(), lhs.args.end(), rhs.args.begin(), rhs.args.end());
}

std::string Atom::str() const {
	if ((predicate == "==" || predicate == "!=") && args.size() == 2) {
		return args[0].str() + " " + predicate + " " + args[1].str();
	}
	if (args.empty()) {
		return predicate;
	}
	std::string out = predicate + "(";
	for (size_t i = 0; i != args.size(); ++i) {
		if (i) out += ',';
		out += args[i].str();
	}
	return out + ")";
}

} // namespace ndlp
