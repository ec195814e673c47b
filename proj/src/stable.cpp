#include <ndlp/stable.hpp>

#include <ndlp/positive.hpp>

#include <algorithm>

namespace ndlp {

ReductProgram reduct(const GroundProgram& g, const Interpretation& i) {
	ReductProgram out;
	out.witness = i;
	for (const auto& r : g.rules()) {
		if (std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return contains(i, b); })) {
			continue;
		}
		GroundRule kept = r;
		std::erase_if(kept.body, [](const GroundLiteral& l) { return l.negative; });
		kept.neg.clear();
		out.rules.push_back(std::move(kept));
	}
	return out;
}

bool is_stable(const GroundProgram& g, const Interpretation& i) {
	return least_model(reduct(g, i).rules) == i;
}

Interpretation tprime_step(const GroundProgram& g, const Interpretation& i) {
	std::vector<AtomId> heads;
	for (const auto& r : g.rules()) {
		bool pos = std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId b) { return contains(i, b); });
		bool neg = std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return contains(i, b); });
		if (pos && neg) heads.push_back(r.head);
	}
	return make_interpretation(std::move(heads));
}

namespace {

enum class Value : uint8_t { unknown, yes, no };

class Search {
public:
	Search(const GroundProgram& g, std::optional<size_t> cap) : g_(g), cap_(cap) {
		watch_.resize(g.size());
		std::vector<bool> negated(g.size(), false);
		for (uint32_t ri = 0; ri != g.rules().size(); ++ri) {
			const auto& r = g.rules()[ri];
			for (AtomId b : r.pos) watch_[b].push_back(ri);
			for (AtomId b : r.neg) negated[b] = true;
		}
		for (AtomId id = 0; id != g.size(); ++id) {
			if (negated[id]) guess_.push_back(id);
		}
		value_.assign(g.size(), Value::unknown);
	}

	StableResult run() {
		dfs();
		std::sort(result_.models.begin(), result_.models.end());
		result_.models.erase(std::unique(result_.models.begin(), result_.models.end()), result_.models.end());
		return std::move(result_);
	}

private:
	// Least fixpoint over the rules accepted by `usable`, counting unsatisfied positive body atoms.
	template <class Pred>
	std::vector<bool> closure(Pred usable) const {
		const auto&           rules = g_.rules();
		std::vector<uint32_t> missing(rules.size());
		std::vector<bool>     in(g_.size(), false);
		std::vector<AtomId>   queue;
		auto                  fire = [&](AtomId h) {
			if (!in[h]) {
				in[h] = true;
				queue.push_back(h);
			}
		};
		for (uint32_t ri = 0; ri != rules.size(); ++ri) {
			missing[ri] = static_cast<uint32_t>(rules[ri].pos.size());
			if (missing[ri] == 0 && usable(rules[ri])) fire(rules[ri].head);
		}
		while (!queue.empty()) {
			AtomId a = queue.back();
			queue.pop_back();
			for (uint32_t ri : watch_[a]) {
				if (--missing[ri] == 0 && usable(rules[ri])) fire(rules[ri].head);
			}
		}
		return in;
	}

	// Returns false on conflict. On success `lower` holds the certain consequences.
	bool propagate(std::vector<bool>& lower) {
		for (;;) {
			lower      = closure([&](const GroundRule& r) {
                return std::all_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return value_[b] == Value::no; });
            });
			auto upper = closure([&](const GroundRule& r) {
				return std::none_of(r.neg.begin(), r.neg.end(), [&](AtomId b) { return value_[b] == Value::yes; });
			});
			bool changed = false;
			for (AtomId a : guess_) {
				Value want = lower[a] ? Value::yes : (!upper[a] ? Value::no : Value::unknown);
				if (want == Value::unknown) continue;
				if (value_[a] == Value::unknown) {
					value_[a] = want;
					trail_.push_back(a);
					changed = true;
				}
				else if (value_[a] != want) {
					return false;
				}
			}
			if (!changed) return true;
		}
	}

	bool full() const { return cap_ && result_.models.size() >= *cap_; }

	void dfs() {
		size_t            mark = trail_.size();
		std::vector<bool> lower;
		if (propagate(lower)) {
			auto open = std::find_if(guess_.begin(), guess_.end(), [&](AtomId a) { return value_[a] == Value::unknown; });
			if (open == guess_.end()) {
				Interpretation candidate;
				for (AtomId id = 0; id != g_.size(); ++id) {
					if (lower[id]) candidate.push_back(id);
				}
				if (is_stable(g_, candidate)) {
					if (full()) result_.truncated = true;
					else result_.models.push_back(std::move(candidate));
				}
			}
			else {
				for (Value v : {Value::no, Value::yes}) {
					if (result_.truncated) break;
					++result_.choices;
					size_t inner = trail_.size();
					value_[*open] = v;
					trail_.push_back(*open);
					dfs();
					undo(inner);
				}
			}
		}
		undo(mark);
	}

	void undo(size_t mark) {
		while (trail_.size() > mark) {
			value_[trail_.back()] = Value::unknown;
			trail_.pop_back();
		}
	}

	const GroundProgram&               g_;
	std::optional<size_t>              cap_;
	std::vector<std::vector<uint32_t>> watch_;
	std::vector<AtomId>                guess_;
	std::vector<Value>                 value_;
	std::vector<AtomId>                trail_;
	StableResult                       result_;
};

} // namespace

StableResult enumerate_stable(const GroundProgram& g, std::optional<size_t> max_models) {
	return Search(g, max_models).run();
}

} // namespace ndlp
