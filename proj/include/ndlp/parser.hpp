#ifndef NDLP_PARSER_HPP
#define NDLP_PARSER_HPP

#include <ndlp/syntax.hpp>

#include <filesystem>
#include <string_view>

namespace ndlp {

// Grammar (comments start with '%'):
//   program   ::= { directive | rule }
//   directive ::= "#horizon" INT "." | "#const" IDENT "=" term "."
//   rule      ::= head [ ":-" literal { "," literal } ] "."
//   head      ::= ndatom
//   literal   ::= [ "not" ] ndatom
//   ndatom    ::= "{" element { "," element } "}" | element
//   element   ::= atom | term ("==" | "!=") term
//   atom      ::= [ "-" ] IDENT [ "(" term { "," term } ")" ]
//   term      ::= simple [ "+" INT ]
// A bare element is sugar for the singleton {element}. Comparisons must be singletons.
//
// Parsing checks arities and rule safety; errors carry file:line:column.
Program parse_program(std::string_view text, const std::string& file_name = {});
Program parse_file(const std::filesystem::path& path);

} // namespace ndlp

#endif
