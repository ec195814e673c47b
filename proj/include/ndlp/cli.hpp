#ifndef NDLP_CLI_HPP
#define NDLP_CLI_HPP

#include <ndlp/answer_set.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ndlp {

enum class Semantics { least, stable, wf };
const char* to_string(Semantics s);

struct SolveRequest {
	std::vector<std::string> inputs;
	Semantics                semantics = Semantics::stable;
	std::optional<int64_t>   horizon;
	std::optional<size_t>    max_models;
	std::optional<size_t>    max_answer_sets;
	bool                     json           = false;
	bool                     answer_sets    = false;
	bool                     subset_minimal = false;
	bool                     dump_ground    = false;
};

struct ModelReport {
	std::vector<NdAtom> atoms;     // true
	std::vector<NdAtom> negative;  // wf only
	std::vector<NdAtom> undefined; // wf only
	Expansion           answer_sets;
};

struct SolveReport {
	Semantics                semantics = Semantics::stable;
	std::vector<ModelReport> models;
	std::optional<bool>      total; // wf only
	bool                     models_truncated      = false;
	bool                     answer_sets_requested = false;
	std::string              ground_dump;          // filled when dump_ground is set
	size_t                   rules = 0, base = 0, heads = 0;
	size_t                   wf_steps       = 0;
	size_t                   search_choices = 0;
	double                   millis         = 0; // not part of the JSON output

	bool truncated() const;
};

// Reads and merges the inputs; throws Error on any load, grounding or evaluation problem.
Program     load_program(const std::vector<std::string>& inputs);
SolveReport solve(const SolveRequest& req);

std::string to_text(const SolveReport& report);
// Keys: semantics, models, answer_sets, truncated, statistics; total/negative/undefined for wf.
std::string to_json(const SolveReport& report);

// Commands: solve, ground, expand. Exit status: 0 with at least one model, 1 with none,
// 2 on usage, parse or grounding errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ndlp

#endif
