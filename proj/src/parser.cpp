#include <ndlp/parser.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ndlp {
namespace {

enum class Tok {
	end,
	ident,
	variable,
	integer,
	lbrace,
	rbrace,
	lparen,
	rparen,
	comma,
	dot,
	if_,   // :-
	minus,
	plus,
	neq,   // !=
	eq,    // ==
	assign,
	kw_not,
	kw_horizon,
	kw_const,
};

const char* describe(Tok t) {
	switch (t) {
		case Tok::end:        return "end of input";
		case Tok::ident:      return "identifier";
		case Tok::variable:   return "variable";
		case Tok::integer:    return "integer";
		case Tok::lbrace:     return "'{'";
		case Tok::rbrace:     return "'}'";
		case Tok::lparen:     return "'('";
		case Tok::rparen:     return "')'";
		case Tok::comma:      return "','";
		case Tok::dot:        return "'.'";
		case Tok::if_:        return "':-'";
		case Tok::minus:      return "'-'";
		case Tok::plus:       return "'+'";
		case Tok::neq:        return "'!='";
		case Tok::eq:         return "'=='";
		case Tok::assign:     return "'='";
		case Tok::kw_not:     return "'not'";
		case Tok::kw_horizon: return "'#horizon'";
		case Tok::kw_const:   return "'#const'";
	}
	return "token";
}

struct Token {
	Tok            kind = Tok::end;
	std::string    text;
	SourceLocation loc;
};

class Lexer {
public:
	Lexer(std::string_view text, const std::string& file) : text_(text), file_(file) {}

	Token next() {
		skip_space();
		Token tok;
		tok.loc = {file_, line_, col_};
		if (pos_ >= text_.size()) {
			return tok;
		}
		char c = text_[pos_];
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			size_t start = pos_;
			while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
				advance();
			}
			tok.text = std::string(text_.substr(start, pos_ - start));
			if (tok.text == "not") {
				tok.kind = Tok::kw_not;
			}
			else {
				tok.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::variable : Tok::ident;
			}
			return tok;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			size_t start = pos_;
			while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
				advance();
			}
			tok.kind = Tok::integer;
			tok.text = std::string(text_.substr(start, pos_ - start));
			return tok;
		}
		if (c == '#') {
			size_t start = pos_;
			advance();
			while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
				advance();
			}
			tok.text = std::string(text_.substr(start, pos_ - start));
			if (tok.text == "#horizon") tok.kind = Tok::kw_horizon;
			else if (tok.text == "#const") tok.kind = Tok::kw_const;
			else throw Error(Errc::syntax, "unknown directive '" + tok.text + "'", tok.loc);
			return tok;
		}
		auto two = [&](char second) { return pos_ + 1 < text_.size() && text_[pos_ + 1] == second; };
		auto single = [&](Tok k) {
			tok.kind = k;
			tok.text = std::string(1, c);
			advance();
			return tok;
		};
		switch (c) {
			case '{': return single(Tok::lbrace);
			case '}': return single(Tok::rbrace);
			case '(': return single(Tok::lparen);
			case ')': return single(Tok::rparen);
			case ',': return single(Tok::comma);
			case '.': return single(Tok::dot);
			case '-': return single(Tok::minus);
			case '+': return single(Tok::plus);
			default: break;
		}
		if (c == ':' && two('-')) {
			advance(); advance();
			tok.kind = Tok::if_;
			tok.text = ":-";
			return tok;
		}
		if (c == '!' && two('=')) {
			advance(); advance();
			tok.kind = Tok::neq;
			tok.text = "!=";
			return tok;
		}
		if (c == '=') {
			advance();
			if (pos_ < text_.size() && text_[pos_] == '=') {
				advance();
				tok.kind = Tok::eq;
				tok.text = "==";
			}
			else {
				tok.kind = Tok::assign;
				tok.text = "=";
			}
			return tok;
		}
		throw Error(Errc::syntax, std::string("unexpected character '") + c + "'", tok.loc);
	}

private:
	void advance() {
		if (text_[pos_] == '\n') {
			++line_;
			col_ = 1;
		}
		else {
			++col_;
		}
		++pos_;
	}
	void skip_space() {
		while (pos_ < text_.size()) {
			char c = text_[pos_];
			if (c == '%') {
				while (pos_ < text_.size() && text_[pos_] != '\n') advance();
			}
			else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			}
			else {
				break;
			}
		}
	}

	std::string_view text_;
	std::string      file_;
	size_t           pos_  = 0;
	uint32_t         line_ = 1;
	uint32_t         col_  = 1;
};

class Parser {
public:
	Parser(std::string_view text, const std::string& file) : lex_(text, file) {
		cur_  = lex_.next();
		peek_ = lex_.next();
	}

	Program parse() {
		Program prog;
		while (cur_.kind != Tok::end) {
			if (cur_.kind == Tok::kw_horizon) {
				auto loc = cur_.loc;
				shift();
				int64_t h = parse_int();
				if (h < 0) throw Error(Errc::syntax, "horizon must be non-negative", loc);
				expect(Tok::dot);
				prog.horizon = h;
			}
			else if (cur_.kind == Tok::kw_const) {
				shift();
				if (cur_.kind != Tok::ident) fail("constant name");
				std::string name = cur_.text;
				shift();
				expect(Tok::assign);
				auto loc   = cur_.loc;
				Term value = parse_term();
				if (!value.is_ground()) throw Error(Errc::syntax, "constant value must be ground", loc);
				expect(Tok::dot);
				prog.constants[name] = std::move(value);
			}
			else {
				prog.rules.push_back(parse_rule());
			}
		}
		check_arities(prog.rules);
		for (const auto& r : prog.rules) {
			check_safety(r);
		}
		return prog;
	}

private:
	void shift() {
		cur_  = std::move(peek_);
		peek_ = lex_.next();
	}

	[[noreturn]] void fail(const std::string& expected) const {
		std::string got = describe(cur_.kind);
		if (!cur_.text.empty() && cur_.kind != Tok::end) got += " '" + cur_.text + "'";
		throw Error(Errc::syntax, "expected " + expected + ", got " + got, cur_.loc);
	}

	void expect(Tok k) {
		if (cur_.kind != k) fail(describe(k));
		shift();
	}

	int64_t parse_int() {
		bool neg = false;
		if (cur_.kind == Tok::minus) {
			neg = true;
			shift();
		}
		if (cur_.kind != Tok::integer) fail("integer");
		int64_t v   = 0;
		auto    res = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), v);
		if (res.ec != std::errc()) throw Error(Errc::syntax, "integer out of range", cur_.loc);
		shift();
		return neg ? -v : v;
	}

	std::vector<Term> parse_args() {
		std::vector<Term> args;
		if (cur_.kind != Tok::lparen) {
			return args;
		}
		shift();
		args.push_back(parse_term());
		while (cur_.kind == Tok::comma) {
			shift();
			args.push_back(parse_term());
		}
		expect(Tok::rparen);
		return args;
	}

	Term parse_simple_term() {
		switch (cur_.kind) {
			case Tok::integer: return Term::integer(parse_int());
			case Tok::variable: {
				Term t = Term::variable(cur_.text);
				shift();
				return t;
			}
			case Tok::minus:
				if (peek_.kind == Tok::integer) return Term::integer(parse_int());
				if (peek_.kind == Tok::ident) {
					shift();
					std::string name = "-" + cur_.text;
					shift();
					return Term::compound(std::move(name), parse_args());
				}
				fail("term");
			case Tok::ident: {
				std::string name = cur_.text;
				shift();
				return Term::compound(std::move(name), parse_args());
			}
			default: fail("term");
		}
	}

	Term with_sum(Term base) {
		if (cur_.kind != Tok::plus) {
			return base;
		}
		auto loc = cur_.loc;
		if (base.kind() != Term::Kind::variable && base.kind() != Term::Kind::integer) {
			throw Error(Errc::syntax, "the base of an arithmetic sum must be a variable or an integer", loc);
		}
		shift();
		if (cur_.kind != Tok::integer) fail("integer offset");
		Term t = Term::sum(std::move(base), parse_int());
		if (cur_.kind == Tok::plus) {
			throw Error(Errc::syntax, "nested arithmetic sums are not supported", cur_.loc);
		}
		return t;
	}

	Term parse_term() { return with_sum(parse_simple_term()); }

	bool comparison_follows() const { return cur_.kind == Tok::neq || cur_.kind == Tok::eq; }

	Atom finish_comparison(Term lhs) {
		Atom a;
		a.predicate = cur_.kind == Tok::neq ? "!=" : "==";
		shift();
		a.args.push_back(std::move(lhs));
		a.args.push_back(parse_term());
		return a;
	}

	// atom, or a comparison whose left-hand side is a term
	Atom parse_element() {
		if (cur_.kind == Tok::ident || (cur_.kind == Tok::minus && peek_.kind == Tok::ident)) {
			std::string name;
			if (cur_.kind == Tok::minus) {
				shift();
				name = "-";
			}
			name += cur_.text;
			shift();
			auto args = parse_args();
			if (comparison_follows() || cur_.kind == Tok::plus) {
				return finish_comparison(with_sum(Term::compound(std::move(name), std::move(args))));
			}
			return Atom{std::move(name), std::move(args)};
		}
		if (cur_.kind == Tok::variable || cur_.kind == Tok::integer || cur_.kind == Tok::minus) {
			Term lhs = parse_term();
			if (!comparison_follows()) fail("'!=' or '=='");
			return finish_comparison(std::move(lhs));
		}
		fail("atom");
	}

	NdAtom parse_nd_atom() {
		auto loc = cur_.loc;
		if (cur_.kind != Tok::lbrace) {
			return canonicalize({parse_element()});
		}
		shift();
		std::vector<Atom> atoms;
		atoms.push_back(parse_element());
		while (cur_.kind == Tok::comma) {
			shift();
			atoms.push_back(parse_element());
		}
		expect(Tok::rbrace);
		if (atoms.size() > 1) {
			for (const auto& a : atoms) {
				if (is_comparison(a)) throw Error(Errc::syntax, "comparisons are only allowed in singleton atoms", loc);
			}
		}
		return canonicalize(std::move(atoms));
	}

	Literal parse_literal() {
		Literal lit;
		if (cur_.kind == Tok::kw_not) {
			lit.negative = true;
			shift();
		}
		lit.atom = parse_nd_atom();
		return lit;
	}

	Rule parse_rule() {
		Rule r;
		r.origin = cur_.loc;
		r.head   = parse_nd_atom();
		if (cur_.kind == Tok::if_) {
			shift();
			r.body.push_back(parse_literal());
			while (cur_.kind == Tok::comma) {
				shift();
				r.body.push_back(parse_literal());
			}
		}
		expect(Tok::dot);
		return r;
	}

	Lexer lex_;
	Token cur_;
	Token peek_;
};

} // namespace

Program parse_program(std::string_view text, const std::string& file_name) {
	return Parser(text, file_name).parse();
}

Program parse_file(const std::filesystem::path& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw Error(Errc::io, "cannot open '" + path.string() + "'");
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_program(buf.str(), path.string());
}

} // namespace ndlp
