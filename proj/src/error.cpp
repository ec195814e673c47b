#include <ndlp/error.hpp>

namespace ndlp {

const char* to_string(Errc code) {
	switch (code) {
		case Errc::syntax:           return "syntax error";
		case Errc::arity_clash:      return "arity clash";
		case Errc::unsafe_rule:      return "unsafe rule";
		case Errc::empty_nd_atom:    return "empty non-deterministic atom";
		case Errc::missing_horizon:  return "missing horizon";
		case Errc::unbound_variable: return "unbound variable";
		case Errc::not_positive:     return "program contains negation";
		case Errc::not_in_base:      return "atom not in base";
		case Errc::cap_exceeded:     return "cap exceeded";
		case Errc::inconsistent:     return "inconsistent interpretation";
		case Errc::usage:            return "usage error";
		case Errc::io:               return "i/o error";
	}
	return "error";
}

std::string SourceLocation::str() const {
	std::string out = file.empty() ? std::string("<input>") : file;
	if (known()) {
		out += ':' + std::to_string(line) + ':' + std::to_string(column);
	}
	return out;
}

namespace {
std::string format(Errc code, const std::string& msg, const SourceLocation& loc) {
	std::string out;
	if (loc.known()) {
		out = loc.str() + ": ";
	}
	out += to_string(code);
	if (!msg.empty()) {
		out += ": " + msg;
	}
	return out;
}
} // namespace

Error::Error(Errc code, const std::string& msg, SourceLocation loc)
	: std::runtime_error(format(code, msg, loc))
	, code_(code)
	, loc_(std::move(loc)) {}

} // namespace ndlp
