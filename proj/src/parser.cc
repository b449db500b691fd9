#include "dltag/parser.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "dltag/error.h"
#include "dltag/frontier.h"
#include "dltag/oracle_sweep.h"
#include "dltag/sequentiality.h"
#include "dltag/serialize.h"

namespace dltag {

bool Derivation::complete() const { return pending_sites(final).empty(); }

std::size_t ParseResult::complete_count() const {
  return static_cast<std::size_t>(
      std::count_if(derivations.begin(), derivations.end(),
                    [](const Derivation& d) { return d.complete(); }));
}

namespace {

ParserState extend(const ParserState& state, AttachmentAction action,
                   DiscourseTree tree, bool verify_with_oracle) {
  if (!check_sequentiality(tree)) {
    throw std::logic_error("attachment broke unit order: " + to_bracket(tree));
  }
  if (verify_with_oracle && !check_tree(tree, 0).empty()) {
    throw std::logic_error("frontier disagrees with oracle on " +
                           to_bracket(tree));
  }
  ParserState next;
  next.pending = pending_sites(tree);
  next.tree = std::move(tree);
  next.history = state.history;
  next.history.push_back(std::move(action));
  next.consumed = state.consumed + 1;
  return next;
}

}  // namespace

std::vector<ParserState> successors(const ParserState& state,
                                    const UnitInput& unit, ParseMode mode,
                                    bool verify_with_oracle) {
  if (unit.seq != state.consumed) {
    throw Error(ErrorCode::kIllegalAction,
                "unit " + unit.id + " has seq " + std::to_string(unit.seq) +
                    ", expected " + std::to_string(state.consumed));
  }
  std::vector<ParserState> out;
  const bool first_only = mode == ParseMode::kDeterministic;

  auto attempt = [&](AttachmentAction action) {
    try {
      DiscourseTree tree = apply(state.tree, action);
      out.push_back(extend(state, std::move(action), std::move(tree),
                           verify_with_oracle));
    } catch (const Error&) {
      // Illegal here (feature clash, ...); other candidates may still fit.
    }
  };

  const NodePtr target =
      state.tree.empty() ? nullptr : substitution_target(state.tree);
  const FrontierPath sites = adjoin_sites(state.tree);

  for (const auto& h : build_hypotheses(unit, state.tree)) {
    switch (h.op) {
      case ActionKind::kSeed:
        attempt({ActionKind::kSeed, NodeId{}, h.templ, {}, std::nullopt});
        break;
      case ActionKind::kSubstitute: {
        if (!target) break;
        std::optional<NodeId> relabel;
        if (h.respecify) {
          NodePtr anc = open_coerced_ancestor(state.tree, target->id);
          if (!anc) break;
          relabel = anc->id;
        }
        attempt({ActionKind::kSubstitute, target->id, h.templ, h.relation,
                 relabel});
        break;
      }
      case ActionKind::kAdjoin:
      case ActionKind::kCoerceThenAdjoin:
        for (auto it = sites.nodes.rbegin(); it != sites.nodes.rend(); ++it) {
          attempt({h.op, *it, h.templ, h.relation, std::nullopt});
          if (first_only && !out.empty()) break;
        }
        break;
    }
    if (first_only && !out.empty()) break;
  }
  return out;
}

std::vector<ParserState> step(const ParserState& state, const UnitInput& unit,
                              ParseMode mode) {
  auto out = successors(state, unit, mode);
  if (out.empty()) {
    throw DeadEndError(unit.id, "no legal attachment for unit " + unit.id);
  }
  return out;
}

std::vector<ParserState> expand_serial(const std::vector<ParserState>& states,
                                       const UnitInput& unit,
                                       bool verify_with_oracle) {
  std::vector<ParserState> out;
  for (const auto& state : states) {
    for (auto& next :
         successors(state, unit, ParseMode::kEnumerate, verify_with_oracle)) {
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<ParserState> expand_parallel(
    const std::vector<ParserState>& states, const UnitInput& unit,
    int threads, bool verify_with_oracle) {
  std::vector<std::vector<ParserState>> per_state(states.size());
  std::vector<std::exception_ptr> errors(states.size());
  const auto n = static_cast<std::int64_t>(states.size());
  if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      per_state[i] = successors(states[i], unit, ParseMode::kEnumerate,
                                verify_with_oracle);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ParserState> out;
  for (auto& group : per_state) {
    for (auto& s : group) out.push_back(std::move(s));
  }
  return out;
}

ParseResult parse(const std::vector<UnitInput>& units,
                  const ParseOptions& options) {
  ParseResult result;
  std::vector<ParserState> states(1);
  for (const auto& unit : units) {
    std::vector<ParserState> next;
    if (options.mode == ParseMode::kDeterministic) {
      next = successors(states.front(), unit, ParseMode::kDeterministic,
                        options.verify_with_oracle);
    } else if (options.threads == 1) {
      next = expand_serial(states, unit, options.verify_with_oracle);
    } else {
      next = expand_parallel(states, unit, options.threads,
                             options.verify_with_oracle);
    }
    if (next.empty()) {
      throw DeadEndError(unit.id, "no legal attachment for unit " + unit.id);
    }
    if (next.size() > options.beam) {
      result.beam_dropped += next.size() - options.beam;
      next.resize(options.beam);
    }
    states = std::move(next);
  }
  for (auto& s : states) {
    result.derivations.push_back({std::move(s.history), std::move(s.tree)});
  }
  std::stable_partition(result.derivations.begin(), result.derivations.end(),
                        [](const Derivation& d) { return d.complete(); });
  return result;
}

DiscourseTree replay(const std::vector<AttachmentAction>& actions) {
  DiscourseTree tree;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    try {
      tree = apply(tree, actions[k]);
    } catch (const Error& e) {
      throw IllegalActionError(k, e.code(),
                               "action " + std::to_string(k) + " (" +
                                   action_kind_name(actions[k].op) +
                                   "): " + e.what());
    }
  }
  return tree;
}

}  // namespace dltag
