#include <ndlp/cli.hpp>

#include <ndlp/parser.hpp>
#include <ndlp/positive.hpp>
#include <ndlp/stable.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>

namespace ndlp {

const char* to_string(Semantics s) {
	switch (s) {
		case Semantics::least:  return "least";
		case Semantics::stable: return "stable";
		case Semantics::wf:     return "wf";
	}
	return "?";
}

bool SolveReport::truncated() const {
	return models_truncated ||
	       std::any_of(models.begin(), models.end(), [](const ModelReport& m) { return m.answer_sets.truncated; });
}

Program load_program(const std::vector<std::string>& inputs) {
	if (inputs.empty()) {
		throw Error(Errc::usage, "no input files");
	}
	Program merged;
	for (const auto& path : inputs) {
		Program p = parse_file(path);
		if (p.horizon) {
			if (merged.horizon && *merged.horizon != *p.horizon) {
				throw Error(Errc::usage, "conflicting #horizon directives in '" + path + "'");
			}
			merged.horizon = p.horizon;
		}
		for (auto& [name, value] : p.constants) merged.constants[name] = value;
		for (auto& r : p.rules) merged.rules.push_back(std::move(r));
	}
	if (inputs.size() > 1) {
		check_arities(merged.rules);
	}
	return merged;
}

SolveReport solve(const SolveRequest& req) {
	auto        start = std::chrono::steady_clock::now();
	SolveReport rep;
	rep.semantics             = req.semantics;
	rep.answer_sets_requested = req.answer_sets;

	const Program       prog = load_program(req.inputs);
	const GroundProgram g    = ground(prog, req.horizon);
	rep.rules                = g.rules().size();
	rep.base                 = g.size();
	rep.heads                = g.heads().size();
	if (req.dump_ground) rep.ground_dump = g.dump();

	const ExpandOptions opt{req.max_answer_sets, req.subset_minimal};
	auto add_total = [&](const Interpretation& i) {
		ModelReport m;
		m.atoms = to_nd_atoms(g, i);
		if (req.answer_sets) m.answer_sets = expand(g, i, opt);
		rep.models.push_back(std::move(m));
	};

	switch (req.semantics) {
		case Semantics::least:
			if (g.has_negation()) {
				throw Error(Errc::not_positive, "least-model semantics needs a negation-free program; use --semantics stable or wf");
			}
			add_total(least_model(g));
			break;
		case Semantics::stable: {
			auto res             = enumerate_stable(g, req.max_models);
			rep.models_truncated = res.truncated;
			rep.search_choices   = res.choices;
			for (const auto& i : res.models) add_total(i);
			break;
		}
		case Semantics::wf: {
			auto        res = well_founded_model(g);
			ModelReport m;
			m.atoms    = to_nd_atoms(g, res.model.pos);
			m.negative = to_nd_atoms(g, res.model.neg);
			m.undefined = to_nd_atoms(g, set_difference(complement(g, res.model.pos), res.model.neg));
			if (req.answer_sets) m.answer_sets = expand(g, res.model, opt);
			rep.models.push_back(std::move(m));
			rep.total    = res.total;
			rep.wf_steps = res.steps;
			break;
		}
	}
	rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return rep;
}

std::string to_text(const SolveReport& rep) {
	std::string out;
	if (!rep.ground_dump.empty()) {
		out += "% ground program\n" + rep.ground_dump + "\n";
	}
	if (rep.semantics == Semantics::wf) {
		out += std::string("Well-founded model (") + (rep.total.value_or(false) ? "total" : "partial") + "):\n";
	}
	for (size_t k = 0; k != rep.models.size(); ++k) {
		const auto& m = rep.models[k];
		if (rep.semantics != Semantics::wf) out += "Model " + std::to_string(k + 1) + ":\n";
		for (const auto& a : m.atoms) out += "  " + a.str() + "\n";
		for (const auto& a : m.negative) out += "  not " + a.str() + "\n";
		for (const auto& a : m.undefined) out += "  undefined " + a.str() + "\n";
		if (rep.answer_sets_requested) {
			out += "  Answer sets: " + std::to_string(m.answer_sets.sets.size());
			out += m.answer_sets.truncated ? " (truncated)\n" : "\n";
			for (const auto& s : m.answer_sets.sets) out += "    " + s.str() + "\n";
		}
	}
	if (rep.semantics == Semantics::stable) {
		out += rep.models.empty() ? "No stable models.\n" : "Models: " + std::to_string(rep.models.size()) + "\n";
	}
	return out;
}

std::string to_json(const SolveReport& rep) {
	using nlohmann::json;
	auto strings = [](const std::vector<NdAtom>& v) {
		json arr = json::array();
		for (const auto& nd : v) {
			json inner = json::array();
			for (const auto& a : nd.atoms()) inner.push_back(a.str());
			arr.push_back(std::move(inner));
		}
		return arr;
	};
	json j;
	j["semantics"]   = to_string(rep.semantics);
	j["models"]      = json::array();
	j["answer_sets"] = json::array();
	for (const auto& m : rep.models) {
		j["models"].push_back(strings(m.atoms));
		json sets = json::array();
		for (const auto& s : m.answer_sets.sets) sets.push_back(s.elements());
		j["answer_sets"].push_back(std::move(sets));
	}
	if (rep.semantics == Semantics::wf && !rep.models.empty()) {
		j["total"]     = rep.total.value_or(false);
		j["negative"]  = strings(rep.models.front().negative);
		j["undefined"] = strings(rep.models.front().undefined);
	}
	j["truncated"]  = rep.truncated();
	j["statistics"] = {{"rules", rep.rules}, {"base", rep.base}, {"heads", rep.heads}};
	if (rep.semantics == Semantics::wf) j["statistics"]["steps"] = rep.wf_steps;
	if (rep.semantics == Semantics::stable) j["statistics"]["choices"] = rep.search_choices;
	if (!rep.ground_dump.empty()) j["ground"] = rep.ground_dump;
	return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Solver for non-deterministic logic programs", "ndlp"};
	app.require_subcommand(1);

	SolveRequest req;
	std::string  semantics = "stable";
	std::string  format    = "text";
	bool         stats     = false;

	auto common = [&](CLI::App* sub) {
		sub->add_option("files", req.inputs, "input .ndlp files")->required()->check(CLI::ExistingFile);
		sub->add_option("--horizon", req.horizon, "time bound; overrides #horizon")->check(CLI::NonNegativeNumber);
		sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
	};
	auto solving = [&](CLI::App* sub) {
		common(sub);
		sub->add_option("--semantics", semantics, "least, stable or wf")->check(CLI::IsMember({"least", "stable", "wf"}));
		sub->add_option("--max-models", req.max_models, "stop after N stable models");
		sub->add_option("--max-answer-sets", req.max_answer_sets, "stop expanding a model after N answer sets");
		sub->add_flag("--subset-minimal", req.subset_minimal, "keep only subset-minimal answer sets");
		sub->add_flag("--dump-ground", req.dump_ground, "print the ground program first");
		sub->add_flag("--stats", stats, "print statistics and timing to stderr");
	};
	auto* solve_cmd  = app.add_subcommand("solve", "compute models");
	auto* expand_cmd = app.add_subcommand("expand", "compute models and their answer sets");
	auto* ground_cmd = app.add_subcommand("ground", "print the ground program");
	solving(solve_cmd);
	solve_cmd->add_flag("--answer-sets", req.answer_sets, "expand every model into answer sets");
	solving(expand_cmd);
	common(ground_cmd);

	std::vector<const char*> argv{"ndlp"};
	for (const auto& a : args) argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (const CLI::ParseError& e) {
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	req.json      = format == "json";
	req.semantics = semantics == "least" ? Semantics::least : semantics == "wf" ? Semantics::wf : Semantics::stable;
	if (expand_cmd->parsed()) req.answer_sets = true;

	try {
		if (ground_cmd->parsed()) {
			GroundProgram g = ground(load_program(req.inputs), req.horizon);
			if (req.json) {
				nlohmann::json j;
				j["rules"] = nlohmann::json::array();
				for (const auto& r : g.rules()) j["rules"].push_back(g.rule_str(r));
				j["statistics"] = {{"rules", g.rules().size()}, {"base", g.size()}, {"heads", g.heads().size()}};
				out << j.dump(2) << "\n";
			}
			else {
				out << g.dump();
			}
			return 0;
		}
		SolveReport rep = solve(req);
		out << (req.json ? to_json(rep) : to_text(rep));
		if (rep.models_truncated) {
			err << "ndlp: model enumeration stopped after " << rep.models.size() << " models\n";
		}
		for (size_t k = 0; k != rep.models.size(); ++k) {
			if (rep.models[k].answer_sets.truncated) {
				err << "ndlp: answer sets of model " << k + 1 << " truncated at " << rep.models[k].answer_sets.sets.size() << "\n";
			}
		}
		if (stats) {
			err << "ndlp: rules " << rep.rules << ", base " << rep.base << ", heads " << rep.heads << ", time "
			    << rep.millis << " ms\n";
		}
		return rep.models.empty() ? 1 : 0;
	}
	catch (const Error& e) {
		err << "ndlp: " << e.what() << "\n";
		return 2;
	}
}

} // namespace ndlp
