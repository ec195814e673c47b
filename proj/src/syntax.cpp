#include <ndlp/syntax.hpp>

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace ndlp {

bool is_comparison(const Atom& a) {
	return (a.predicate == "==" || a.predicate == "!=") && a.args.size() == 2;
}

NdAtom canonicalize(std::vector<Atom> atoms) {
	if (atoms.empty()) {
		throw Error(Errc::empty_nd_atom, "a non-deterministic atom needs at least one member");
	}
	std::sort(atoms.begin(), atoms.end());
	atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
	NdAtom out;
	out.atoms_ = std::move(atoms);
	return out;
}

bool NdAtom::is_ground() const {
	return std::all_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.is_ground(); });
}

std::strong_ordering operator<=>(const NdAtom& lhs, const NdAtom& rhs) {
	return std::lexicographical_compare_three_way(lhs.atoms_.begin(), lhs.atoms_.end(), rhs.atoms_.begin(), rhs.atoms_.end());
}

std::string NdAtom::str() const {
	std::string out = "{";
	for (size_t i = 0; i != atoms_.size(); ++i) {
		if (i) out += ", ";
		out += atoms_[i].str();
	}
	return out + "}";
}

std::string Literal::str() const {
	return negative ? "not " + atom.str() : atom.str();
}

bool Rule::has_negation() const {
	return std::any_of(body.begin(), body.end(), [](const Literal& l) { return l.negative; });
}

bool Rule::is_ground() const {
	return head.is_ground() && std::all_of(body.begin(), body.end(), [](const Literal& l) { return l.atom.is_ground(); });
}

std::string Rule::str() const {
	std::string out = head.str();
	if (!body.empty()) {
		out += " :- ";
		for (size_t i = 0; i != body.size(); ++i) {
			if (i) out += ", ";
			out += body[i].str();
		}
	}
	return out + ".";
}

bool Program::has_negation() const {
	return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.has_negation(); });
}

std::string Program::str() const {
	std::string out;
	if (horizon) {
		out += "#horizon " + std::to_string(*horizon) + ".\n";
	}
	for (const auto& [name, value] : constants) {
		out += "#const " + name + "=" + value.str() + ".\n";
	}
	for (const auto& r : rules) {
		out += r.str();
		out += '\n';
	}
	return out;
}

bool is_time_variable(const std::string& name) {
	if (name.empty() || name[0] != 'T') {
		return false;
	}
	return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void check_arities(std::span<const Rule> rules) {
	std::unordered_map<std::string, size_t> arity;
	auto visit = [&](const Atom& a, const Rule& r) {
		if (is_comparison(a)) {
			return;
		}
		auto [it, added] = arity.emplace(a.predicate, a.arity());
		if (!added && it->second != a.arity()) {
			throw Error(Errc::arity_clash,
			            "predicate '" + a.predicate + "' used with arity " + std::to_string(a.arity()) + " and " +
			                std::to_string(it->second),
			            r.origin);
		}
	};
	for (const auto& r : rules) {
		for (const auto& a : r.head.atoms()) visit(a, r);
		for (const auto& l : r.body) {
			for (const auto& a : l.atom.atoms()) visit(a, r);
		}
	}
}

void check_safety(const Rule& r) {
	if (std::any_of(r.head.atoms().begin(), r.head.atoms().end(), [](const Atom& a) { return is_comparison(a); })) {
		throw Error(Errc::syntax, "comparison in rule head", r.origin);
	}
	std::vector<std::string> bound;
	for (const auto& l : r.body) {
		if (!l.negative && !l.atom.is_comparison()) {
			for (const auto& a : l.atom.atoms()) a.collect_variables(bound);
		}
	}
	std::vector<std::string> needed;
	for (const auto& a : r.head.atoms()) a.collect_variables(needed);
	for (const auto& l : r.body) {
		if (l.negative || l.atom.is_comparison()) {
			for (const auto& a : l.atom.atoms()) a.collect_variables(needed);
		}
	}
	for (const auto& v : needed) {
		if (!is_time_variable(v) && std::find(bound.begin(), bound.end(), v) == bound.end()) {
			throw Error(Errc::unsafe_rule, "variable '" + v + "' does not occur in a positive body literal", r.origin);
		}
	}
}

} // namespace ndlp
