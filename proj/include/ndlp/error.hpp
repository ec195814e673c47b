#ifndef NDLP_ERROR_HPP
#define NDLP_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ndlp {

enum class Errc {
	syntax,
	arity_clash,
	unsafe_rule,
	empty_nd_atom,
	missing_horizon,
	unbound_variable,
	not_positive,
	not_in_base,
	cap_exceeded,
	inconsistent,
	usage,
	io,
};

const char* to_string(Errc code);

struct SourceLocation {
	std::string file;
	uint32_t    line   = 0;
	uint32_t    column = 0;

	bool        known() const { return line != 0; }
	std::string str() const;
};

// All library errors. The message already carries the location prefix when one is known.
class Error : public std::runtime_error {
public:
	Error(Errc code, const std::string& msg, SourceLocation loc = {});

	Errc                  code() const noexcept { return code_; }
	const SourceLocation& location() const noexcept { return loc_; }

private:
	Errc           code_;
	SourceLocation loc_;
};

} // namespace ndlp

#endif
