#include <ndlp/det_oracle.hpp>

#include <ndlp/parser.hpp>

#include <algorithm>

namespace ndlp::det {

AtomSet DetProgram::atoms() const {
	AtomSet out;
	for (const auto& r : rules) {
		out.insert(r.head);
		out.insert(r.pos.begin(), r.pos.end());
		out.insert(r.neg.begin(), r.neg.end());
	}
	return out;
}

bool DetProgram::has_negation() const {
	return std::any_of(rules.begin(), rules.end(), [](const DetRule& r) { return !r.neg.empty(); });
}

std::string DetProgram::str() const {
	std::string out;
	for (const auto& r : rules) {
		out += r.head;
		std::vector<std::string> body = r.pos;
		for (const auto& n : r.neg) body.push_back("not " + n);
		for (size_t i = 0; i != body.size(); ++i) out += (i ? ", " : " :- ") + body[i];
		out += ".\n";
	}
	return out;
}

namespace {

std::string trim(std::string_view s) {
	size_t b = s.find_first_not_of(" \t\r\n");
	if (b == std::string_view::npos) return {};
	size_t e = s.find_last_not_of(" \t\r\n");
	return std::string(s.substr(b, e - b + 1));
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split(std::string_view s, char sep) {
	std::vector<std::string> out;
	int                      depth = 0;
	size_t                   start = 0;
	for (size_t i = 0; i != s.size(); ++i) {
		if (s[i] == '(') ++depth;
		else if (s[i] == ')') --depth;
		else if (s[i] == sep && depth == 0) {
			out.push_back(trim(s.substr(start, i - start)));
			start = i + 1;
		}
	}
	out.push_back(trim(s.substr(start)));
	return out;
}

AtomSet least(const std::vector<DetRule>& rules) {
	AtomSet m;
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : rules) {
			if (m.contains(r.head)) continue;
			if (std::all_of(r.pos.begin(), r.pos.end(), [&](const std::string& b) { return m.contains(b); })) {
				m.insert(r.head);
				changed = true;
			}
		}
	}
	return m;
}

// Gelfond-Lifschitz: least model of the rules not blocked by s.
AtomSet gamma(const DetProgram& det, const AtomSet& s) {
	std::vector<DetRule> kept;
	for (const auto& r : det.rules) {
		if (std::none_of(r.neg.begin(), r.neg.end(), [&](const std::string& b) { return s.contains(b); })) kept.push_back(r);
	}
	return least(kept);
}

} // namespace

DetProgram parse(std::string_view text) {
	std::string clean;
	for (auto line : split(text, '\n')) {
		clean += line.substr(0, line.find('%'));
		clean += ' ';
	}
	DetProgram out;
	for (const auto& stmt : split(clean, '.')) {
		if (stmt.empty()) continue;
		DetRule r;
		size_t  arrow = stmt.find(":-");
		r.head        = trim(stmt.substr(0, arrow));
		if (r.head.empty()) throw Error(Errc::syntax, "missing head in '" + stmt + "'");
		if (arrow != std::string::npos) {
			for (const auto& lit : split(stmt.substr(arrow + 2), ',')) {
				if (lit.rfind("not ", 0) == 0) r.neg.push_back(trim(lit.substr(4)));
				else if (!lit.empty()) r.pos.push_back(lit);
				else throw Error(Errc::syntax, "empty body literal in '" + stmt + "'");
			}
		}
		out.rules.push_back(std::move(r));
	}
	return out;
}

Program embed(const DetProgram& det) {
	std::string text;
	for (const auto& r : det.rules) {
		text += "{" + r.head + "}";
		std::vector<std::string> body;
		for (const auto& b : r.pos) body.push_back("{" + b + "}");
		for (const auto& b : r.neg) body.push_back("not {" + b + "}");
		for (size_t i = 0; i != body.size(); ++i) text += (i ? ", " : " :- ") + body[i];
		text += ".\n";
	}
	return parse_program(text, "<embed>");
}

DetProgram from_program(const Program& p) {
	DetProgram out;
	auto       name = [](const NdAtom& a) {
		if (!a.is_singleton() || !a.is_ground()) {
			throw Error(Errc::usage, "not a ground singleton: " + a.str());
		}
		return a.atoms().front().str();
	};
	for (const auto& r : p.rules) {
		DetRule d;
		d.head = name(r.head);
		for (const auto& l : r.body) (l.negative ? d.neg : d.pos).push_back(name(l.atom));
		out.rules.push_back(std::move(d));
	}
	return out;
}

AtomSet det_least(const DetProgram& det) {
	return least(det.rules);
}

std::vector<AtomSet> det_stable(const DetProgram& det) {
	AtomSet negated;
	for (const auto& r : det.rules) negated.insert(r.neg.begin(), r.neg.end());
	std::vector<std::string> guess(negated.begin(), negated.end());

	std::set<AtomSet> found;
	for (uint64_t mask = 0; mask != (uint64_t(1) << guess.size()); ++mask) {
		AtomSet assumed;
		for (size_t k = 0; k != guess.size(); ++k) {
			if (mask >> k & 1u) assumed.insert(guess[k]);
		}
		AtomSet m = gamma(det, assumed);
		if (gamma(det, m) == m) found.insert(std::move(m));
	}
	return {found.begin(), found.end()};
}

WfModel det_wf(const DetProgram& det) {
	AtomSet t;
	for (;;) {
		AtomSet next = gamma(det, gamma(det, t));
		if (next == t) break;
		t = std::move(next);
	}
	WfModel out;
	out.pos        = t;
	AtomSet maybe  = gamma(det, t);
	for (const auto& a : det.atoms()) {
		if (!maybe.contains(a)) out.neg.insert(a);
	}
	return out;
}

} // namespace ndlp::det
