#include <ndlp/grounder.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ndlp {

// ---------------------------------------------------------------------------
// GroundProgram
// ---------------------------------------------------------------------------
GroundProgram GroundProgram::from_rules(const std::vector<Rule>& rules, const std::vector<uint32_t>& source) {
	GroundProgram g;
	std::set<NdAtom> atoms;
	for (const auto& r : rules) {
		atoms.insert(r.head);
		for (const auto& l : r.body) atoms.insert(l.atom);
	}
	g.base_.assign(atoms.begin(), atoms.end());
	g.is_head_.assign(g.base_.size(), false);

	std::set<std::pair<AtomId, std::vector<GroundLiteral>>, decltype([](const auto& a, const auto& b) {
		if (a.first != b.first) return a.first < b.first;
		return std::lexicographical_compare(a.second.begin(), a.second.end(), b.second.begin(), b.second.end(),
		                                    [](const GroundLiteral& x, const GroundLiteral& y) {
			                                    return std::tie(x.atom, x.negative) < std::tie(y.atom, y.negative);
		                                    });
	})> seen;

	for (size_t i = 0; i != rules.size(); ++i) {
		const Rule& r = rules[i];
		GroundRule  gr;
		gr.head   = g.id_of(r.head);
		gr.source = i < source.size() ? source[i] : static_cast<uint32_t>(i);
		gr.origin = r.origin;
		for (const auto& l : r.body) {
			GroundLiteral gl{g.id_of(l.atom), l.negative};
			if (std::find(gr.body.begin(), gr.body.end(), gl) == gr.body.end()) {
				gr.body.push_back(gl);
				(gl.negative ? gr.neg : gr.pos).push_back(gl.atom);
			}
		}
		std::sort(gr.pos.begin(), gr.pos.end());
		std::sort(gr.neg.begin(), gr.neg.end());
		if (!seen.emplace(gr.head, gr.body).second) {
			continue;
		}
		g.is_head_[gr.head] = true;
		g.rules_.push_back(std::move(gr));
	}
	for (AtomId id = 0; id != g.base_.size(); ++id) {
		if (g.is_head_[id]) g.heads_.push_back(id);
	}
	return g;
}

std::optional<AtomId> GroundProgram::find(const NdAtom& a) const {
	auto it = std::lower_bound(base_.begin(), base_.end(), a);
	if (it == base_.end() || *it != a) {
		return std::nullopt;
	}
	return static_cast<AtomId>(it - base_.begin());
}

AtomId GroundProgram::id_of(const NdAtom& a) const {
	if (auto id = find(a)) {
		return *id;
	}
	throw Error(Errc::not_in_base, a.str());
}

bool GroundProgram::has_negation() const {
	return std::any_of(rules_.begin(), rules_.end(), [](const GroundRule& r) { return !r.neg.empty(); });
}

std::string GroundProgram::rule_str(const GroundRule& r) const {
	std::string out = base_[r.head].str();
	if (!r.body.empty()) {
		out += " :- ";
		for (size_t i = 0; i != r.body.size(); ++i) {
			if (i) out += ", ";
			if (r.body[i].negative) out += "not ";
			out += base_[r.body[i].atom].str();
		}
	}
	return out + ".";
}

std::string GroundProgram::dump() const {
	std::string out;
	for (const auto& r : rules_) {
		out += rule_str(r);
		out += '\n';
	}
	return out;
}

Program GroundProgram::to_program() const {
	Program p;
	for (const auto& gr : rules_) {
		Rule r;
		r.head   = base_[gr.head];
		r.origin = gr.origin;
		for (const auto& l : gr.body) r.body.push_back(Literal{l.negative, base_[l.atom]});
		p.rules.push_back(std::move(r));
	}
	return p;
}

bool operator==(const GroundProgram& lhs, const GroundProgram& rhs) {
	if (lhs.base_ != rhs.base_ || lhs.rules_.size() != rhs.rules_.size()) {
		return false;
	}
	for (size_t i = 0; i != lhs.rules_.size(); ++i) {
		if (lhs.rules_[i].head != rhs.rules_[i].head || lhs.rules_[i].body != rhs.rules_[i].body) return false;
	}
	return true;
}

RestrictedBase restricted_base(const GroundProgram& g) {
	RestrictedBase out;
	out.base = g.base();
	for (AtomId id : g.heads()) out.heads.push_back(g.atom(id));
	return out;
}

// ---------------------------------------------------------------------------
// Grounding
// ---------------------------------------------------------------------------
namespace {

using Binding = std::unordered_map<std::string, Term>;

Term substitute_constants(const Term& t, const std::map<std::string, Term>& consts) {
	switch (t.kind()) {
		case Term::Kind::symbol: {
			auto it = consts.find(t.name());
			return it != consts.end() ? it->second : t;
		}
		case Term::Kind::compound: {
			std::vector<Term> args;
			for (const auto& a : t.args()) args.push_back(substitute_constants(a, consts));
			return Term::compound(t.name(), std::move(args));
		}
		case Term::Kind::sum: return Term::sum(substitute_constants(t.sum_base(), consts), t.value());
		default: return t;
	}
}

Atom substitute_constants(const Atom& a, const std::map<std::string, Term>& consts) {
	Atom out{a.predicate, {}};
	for (const auto& t : a.args) out.args.push_back(substitute_constants(t, consts));
	return out;
}

// Applies the binding and evaluates sums. Empty when a sum has a non-integer base.
std::optional<Term> instantiate(const Term& t, const Binding& b) {
	switch (t.kind()) {
		case Term::Kind::integer:
		case Term::Kind::symbol: return t;
		case Term::Kind::variable: return b.at(t.name());
		case Term::Kind::compound: {
			std::vector<Term> args;
			for (const auto& a : t.args()) {
				auto v = instantiate(a, b);
				if (!v) return std::nullopt;
				args.push_back(std::move(*v));
			}
			return Term::compound(t.name(), std::move(args));
		}
		case Term::Kind::sum: {
			auto base = instantiate(t.sum_base(), b);
			if (!base || base->kind() != Term::Kind::integer) return std::nullopt;
			return Term::integer(base->value() + t.value());
		}
	}
	return std::nullopt;
}

std::optional<Atom> instantiate(const Atom& a, const Binding& b) {
	Atom out{a.predicate, {}};
	for (const auto& t : a.args) {
		auto v = instantiate(t, b);
		if (!v) return std::nullopt;
		out.args.push_back(std::move(*v));
	}
	return out;
}

void collect_universe(const Term& t, std::set<Term>& out) {
	if (t.is_ground()) {
		out.insert(t);
	}
}

} // namespace

GroundProgram ground(const Program& program, std::optional<int64_t> horizon) {
	if (!horizon) {
		horizon = program.horizon;
	}

	// Rules with #const names replaced.
	std::vector<Rule> rules;
	rules.reserve(program.rules.size());
	for (const auto& r : program.rules) {
		Rule out;
		out.origin = r.origin;
		std::vector<Atom> head;
		for (const auto& a : r.head.atoms()) head.push_back(substitute_constants(a, program.constants));
		out.head = canonicalize(std::move(head));
		for (const auto& l : r.body) {
			std::vector<Atom> atoms;
			for (const auto& a : l.atom.atoms()) atoms.push_back(substitute_constants(a, program.constants));
			out.body.push_back(Literal{l.negative, canonicalize(std::move(atoms))});
		}
		rules.push_back(std::move(out));
	}

	std::set<Term> universe_set;
	for (const auto& r : rules) {
		auto visit = [&](const NdAtom& nd) {
			for (const auto& a : nd.atoms()) {
				for (const auto& t : a.args) collect_universe(t, universe_set);
			}
		};
		visit(r.head);
		for (const auto& l : r.body) visit(l.atom);
	}
	const std::vector<Term> universe(universe_set.begin(), universe_set.end());

	std::vector<Rule>     ground_rules;
	std::vector<uint32_t> source;
	for (uint32_t ri = 0; ri != rules.size(); ++ri) {
		const Rule&              r = rules[ri];
		std::vector<std::string> vars;
		for (const auto& a : r.head.atoms()) a.collect_variables(vars);
		for (const auto& l : r.body) {
			for (const auto& a : l.atom.atoms()) a.collect_variables(vars);
		}

		std::vector<std::vector<Term>> domains;
		for (const auto& v : vars) {
			std::vector<Term> dom;
			if (is_time_variable(v)) {
				if (!horizon) {
					throw Error(Errc::missing_horizon, "time variable '" + v + "' needs #horizon or --horizon", r.origin);
				}
				for (int64_t t = 0; t <= *horizon; ++t) dom.push_back(Term::integer(t));
			}
			else {
				if (universe.empty()) {
					throw Error(Errc::unbound_variable, "no constants to instantiate '" + v + "'", r.origin);
				}
				dom = universe;
			}
			domains.push_back(std::move(dom));
		}

		std::vector<size_t> pick(vars.size(), 0);
		Binding             binding;
		for (bool more = true; more;) {
			for (size_t i = 0; i != vars.size(); ++i) binding[vars[i]] = domains[i][pick[i]];

			bool keep = true;
			Rule inst;
			inst.origin = r.origin;
			auto ground_nd = [&](const NdAtom& nd) -> std::optional<NdAtom> {
				std::vector<Atom> atoms;
				for (const auto& a : nd.atoms()) {
					auto g = instantiate(a, binding);
					if (!g) return std::nullopt;
					atoms.push_back(std::move(*g));
				}
				return canonicalize(std::move(atoms));
			};
			if (auto h = ground_nd(r.head)) inst.head = std::move(*h);
			else keep = false;
			for (size_t li = 0; keep && li != r.body.size(); ++li) {
				const Literal& l = r.body[li];
				auto           g = ground_nd(l.atom);
				if (!g) {
					keep = false;
					break;
				}
				if (g->is_comparison()) {
					const Atom& c     = g->atoms().front();
					bool        equal = c.args[0] == c.args[1];
					bool        holds = (c.predicate == "==") == equal;
					if (holds == l.negative) keep = false;
					continue;
				}
				inst.body.push_back(Literal{l.negative, std::move(*g)});
			}
			if (keep) {
				ground_rules.push_back(std::move(inst));
				source.push_back(ri);
			}

			more = false;
			for (size_t i = vars.size(); i-- > 0;) {
				if (++pick[i] < domains[i].size()) {
					more = true;
					break;
				}
				pick[i] = 0;
			}
		}
	}
	return GroundProgram::from_rules(ground_rules, source);
}

} // namespace ndlp
