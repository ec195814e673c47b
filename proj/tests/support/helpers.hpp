#ifndef NDLP_TEST_HELPERS_HPP
#define NDLP_TEST_HELPERS_HPP

#include <ndlp/grounder.hpp>
#include <ndlp/interpretation.hpp>
#include <ndlp/parser.hpp>
#include <ndlp/wellfounded.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace ndlp::test {

inline std::string corpus(const std::string& name) {
	return std::string(NDLP_CORPUS_DIR) + "/" + name;
}

inline GroundProgram ground_text(const std::string& text, std::optional<int64_t> horizon = std::nullopt) {
	return ground(parse_program(text, "<test>"), horizon);
}

inline GroundProgram ground_corpus(const std::string& name, std::optional<int64_t> horizon = std::nullopt) {
	return ground(parse_file(corpus(name)), horizon);
}

// "{a1, a2}" or "a" -> NdAtom
inline NdAtom nd(const std::string& text) {
	return parse_program(text + ".", "<atom>").rules.front().head;
}

inline std::vector<NdAtom> nds(std::initializer_list<const char*> texts) {
	std::vector<NdAtom> out;
	for (const char* t : texts) out.push_back(nd(t));
	return out;
}

inline Interpretation interp(const GroundProgram& g, std::initializer_list<const char*> texts) {
	return make_interpretation(g, nds(texts));
}

inline PartialInterpretation partial(const GroundProgram& g, std::initializer_list<const char*> pos,
                                     std::initializer_list<const char*> neg) {
	return {interp(g, pos), interp(g, neg)};
}

inline std::vector<std::string> strs(const std::vector<NdAtom>& atoms) {
	std::vector<std::string> out;
	for (const auto& a : atoms) out.push_back(a.str());
	return out;
}

} // namespace ndlp::test

#endif
