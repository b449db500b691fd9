// dltag: incremental discourse parsing from the command line.
//
// Exit codes: 0 ok, 1 usage, 2 dead end, 3 golden mismatch, 4 I/O error,
// 5 malformed input, 6 oracle counterexamples.

#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dltag/document.h"
#include "dltag/error.h"
#include "dltag/fixtures.h"
#include "dltag/frontier.h"
#include "dltag/lexicon.h"
#include "dltag/oracle_sweep.h"
#include "dltag/parser.h"
#include "dltag/serialize.h"
#include "dltag/stats.h"
#include "json.hpp"

using namespace dltag;

namespace {

enum Exit {
  kOk = 0,
  kUsage = 1,
  kDeadEnd = 2,
  kMismatch = 3,
  kIoError = 4,
  kFormatError = 5,
  kCounterexamples = 6,
};

std::string node_name(const DiscourseTree& tree, NodeId id) {
  const Node* n = tree.find(id);
  if (!n) return "#" + std::to_string(id.value);
  if (n->is_site() || n->is_leaf()) return describe(*n);
  return describe(*n) + "#" + std::to_string(id.value);
}

std::string path_names(const DiscourseTree& tree, const std::vector<NodeId>& ids) {
  if (ids.empty()) return "(none)";
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += node_name(tree, id);
  }
  return out;
}

// Template site ranks are local to the template and get renumbered when it
// is grafted, so they are shown bare.
std::string show_template(const TreeTemplate& t) {
  static const std::regex rank("↓[0-9]+");
  return std::regex_replace(to_bracket(t.shape.root()), rank, "↓");
}

// `before` is the tree the action was applied to.
std::string describe_action(const DiscourseTree& before,
                            const AttachmentAction& a) {
  std::string out = action_kind_name(a.op);
  switch (a.op) {
    case ActionKind::kSeed:
      out += " " + show_template(a.templ);
      break;
    case ActionKind::kSubstitute:
      out += " " + show_template(a.templ) + " at " +
             node_name(before, a.site);
      if (a.respecified) {
        out += "; " + node_name(before, *a.respecified) + " becomes " +
               a.relation.name();
      }
      break;
    case ActionKind::kAdjoin:
      out += " " + show_template(a.templ) + " at " +
             node_name(before, a.site);
      break;
    case ActionKind::kCoerceThenAdjoin:
      out += " " + a.relation.name() + "(*, " +
             show_template(a.templ) + ") at " +
             node_name(before, a.site);
      break;
  }
  return out;
}

std::vector<std::string> transcript(const std::vector<UnitInput>& units,
                                    const std::vector<AttachmentAction>& actions) {
  std::vector<std::string> lines;
  DiscourseTree tree;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const std::string what = describe_action(tree, actions[k]);
    tree = apply(tree, actions[k]);
    std::ostringstream line;
    line << "  " << std::left << std::setw(3) << units[k].id << what << "\n"
         << "     => " << to_bracket(tree);
    lines.push_back(line.str());
  }
  return lines;
}

nlohmann::json action_record(const DiscourseTree& before,
                             const AttachmentAction& a) {
  nlohmann::json j;
  j["op"] = action_kind_name(a.op);
  if (a.op != ActionKind::kSeed) j["site"] = node_name(before, a.site);
  j["structure"] = show_template(a.templ);
  if (!a.relation.empty()) j["relation"] = a.relation.name();
  if (a.respecified) j["respecified"] = node_name(before, *a.respecified);
  return j;
}

nlohmann::json derivation_record(std::size_t index, const Derivation& d,
                                 const std::vector<UnitInput>& units) {
  nlohmann::json actions = nlohmann::json::array();
  DiscourseTree tree;
  for (std::size_t k = 0; k < d.actions.size(); ++k) {
    auto r = action_record(tree, d.actions[k]);
    r["unit"] = units[k].id;
    actions.push_back(std::move(r));
    tree = apply(tree, d.actions[k]);
  }
  return {{"index", index},
          {"complete", d.complete()},
          {"pending", pending_sites(d.final).size()},
          {"tree", to_bracket(d.final)},
          {"actions", std::move(actions)}};
}

void print_units(const std::vector<UnitInput>& units) {
  for (const auto& u : units) {
    std::cout << "  " << std::left << std::setw(3) << u.id << u.text;
    if (!u.markers.empty()) {
      std::cout << "  [";
      for (std::size_t i = 0; i < u.markers.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << u.markers[i].entry->name;
        if (!u.markers[i].clause_initial) std::cout << ":final";
      }
      std::cout << "]";
    }
    std::cout << "\n";
  }
}

int demo_deterministic(const Example& ex, const std::vector<UnitInput>& units) {
  const ParseResult result = parse(units, {});
  const Derivation& d = result.derivations.front();
  std::cout << "derivation:\n";
  for (const auto& line : transcript(units, d.actions)) std::cout << line << "\n";
  const std::string final = to_bracket(d.final);
  std::cout << "final:  " << final << "\n";
  std::cout << "golden: " << ex.golden << "\n";
  if (same_structure(d.final, parse_bracket(ex.golden))) {
    std::cout << "match\n";
    return kOk;
  }
  std::cout << "MISMATCH\n";
  return kMismatch;
}

int demo_enumerate(const Example& ex, const std::vector<UnitInput>& units) {
  std::vector<ParserState> states(1);
  for (const auto& unit : units) {
    states = expand_serial(states, unit);
    std::cout << "after " << unit.id << ": " << states.size()
              << (states.size() == 1 ? " state\n" : " states\n");
    for (const auto& s : states) {
      std::cout << "    " << to_bracket(s.tree) << "\n";
    }
    if (states.empty()) {
      std::cout << "dead end at " << unit.id << "\n";
      return kDeadEnd;
    }
  }
  const DiscourseTree golden = parse_bracket(ex.golden);
  for (const auto& s : states) {
    if (!pending_sites(s.tree).empty() || !same_structure(s.tree, golden)) continue;
    std::cout << "derivation:\n";
    for (const auto& line : transcript(units, s.history)) {
      std::cout << line << "\n";
    }
    std::cout << "golden: " << ex.golden << "\nmatch\n";
    return kOk;
  }
  std::cout << "golden: " << ex.golden << "\nMISMATCH: no complete derivation "
            << "equals the golden tree\n";
  return kMismatch;
}

int cmd_demo(int number) {
  const Example& ex = bundled_example(number);
  const auto units = example_units(ex, Lexicon::bundled());
  std::cout << "example " << ex.number << ": " << ex.title << "\n";
  print_units(units);
  return ex.mode == ParseMode::kDeterministic ? demo_deterministic(ex, units)
                                              : demo_enumerate(ex, units);
}

const Lexicon& choose_lexicon(const std::string& path, Lexicon& storage) {
  if (path.empty()) return Lexicon::bundled();
  storage = Lexicon::load(path);
  return storage;
}

int cmd_parse(const std::string& file, bool enumerate, std::size_t beam,
              const std::string& lexicon_path, const std::string& format,
              int threads, bool verify) {
  Lexicon storage;
  const auto units = load_document(file, choose_lexicon(lexicon_path, storage));
  ParseOptions options;
  options.mode = enumerate ? ParseMode::kEnumerate : ParseMode::kDeterministic;
  options.beam = beam;
  options.threads = threads;
  options.verify_with_oracle = verify;
  const ParseResult result = parse(units, options);

  if (format == "records") {
    for (std::size_t i = 0; i < result.derivations.size(); ++i) {
      std::cout << derivation_record(i, result.derivations[i], units).dump()
                << "\n";
    }
    if (result.beam_dropped) {
      std::cerr << "beam dropped " << result.beam_dropped << " states\n";
    }
    return kOk;
  }
  std::cout << "derivations: " << result.derivations.size() << " (complete "
            << result.complete_count() << ")";
  if (result.beam_dropped) {
    std::cout << ", beam dropped " << result.beam_dropped;
  }
  std::cout << "\n";
  for (const auto& d : result.derivations) {
    const std::size_t pending = pending_sites(d.final).size();
    std::cout << (pending ? "incomplete " : "complete   ") << to_bracket(d.final);
    if (pending) std::cout << "  (" << pending << " pending)";
    std::cout << "\n";
  }
  return kOk;
}

int cmd_frontier(const std::string& file) {
  const DiscourseTree tree = parse_tree(read_file(file));
  std::cout << "tree:       " << to_bracket(tree) << "\n";
  std::cout << "outer rf:   " << path_names(tree, outer_rf(tree).nodes) << "\n";
  const NodePtr target = tree.empty() ? nullptr : substitution_target(tree);
  std::cout << "inner rf:   "
            << (target ? path_names(tree, inner_rf(tree).nodes) : "(none)")
            << "\n";
  std::cout << "adjoin at:  " << path_names(tree, adjoin_sites(tree).nodes)
            << "\n";
  std::cout << "substitute: " << (target ? describe(*target) : "(none)")
            << "\n";
  std::cout << "pending:    " << path_names(tree, pending_sites(tree)) << "\n";
  return kOk;
}

int cmd_oracle(std::size_t max_terminals, std::size_t max_sites, int threads,
               bool serial) {
  const SweepConfig config{max_terminals, max_sites};
  const SweepReport report =
      serial ? sweep_serial(config) : sweep_parallel(config, threads);
  std::cout << "trees:           " << report.trees << "\n"
            << "trees with sites: " << report.trees_with_sites << "\n"
            << "checks:          " << report.checks << "\n"
            << "counterexamples: " << report.counterexamples.size() << "\n";
  const std::size_t shown = std::min<std::size_t>(report.counterexamples.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& c = report.counterexamples[i];
    std::cout << "  #" << c.tree_index << " " << c.tree << "  " << c.check
              << ": oracle {" << c.expected << "} frontier {" << c.actual
              << "}\n";
  }
  return report.counterexamples.empty() ? kOk : kCounterexamples;
}

int cmd_stats(const std::string& file, const std::string& lexicon_path,
              const std::string& format) {
  Lexicon storage;
  const Lexicon& lexicon = choose_lexicon(lexicon_path, storage);
  const StatsReport report = compute_stats(read_file(file), lexicon);
  if (format == "json") {
    std::cout << stats_to_json(report).dump(2) << "\n";
  } else {
    std::cout << render_table(report);
  }
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kDeadEnd:
      return kDeadEnd;
    case ErrorCode::kIo:
      return kIoError;
    default:
      return kFormatError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental discourse parsing with expectations"};
  app.require_subcommand(1);

  int demo_number = 0;
  auto* demo = app.add_subcommand("demo", "Run a bundled worked example");
  demo->add_option("n", demo_number, "Example number")
      ->required()
      ->check(CLI::Range(1, 6));

  std::string parse_file;
  bool enumerate = false;
  std::size_t beam = 64;
  std::string lexicon_path;
  std::string format = "bracket";
  int threads = 1;
  bool verify = false;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a document");
  parse_cmd->add_option("file", parse_file, "JSON or JSON-lines records")
      ->required();
  parse_cmd->add_flag("--enumerate", enumerate, "Keep every reading");
  parse_cmd->add_option("--beam", beam, "State cap for --enumerate")
      ->check(CLI::PositiveNumber);
  parse_cmd->add_option("--lexicon", lexicon_path, "Marker lexicon file");
  parse_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"bracket", "records"}));
  parse_cmd->add_option("--threads", threads,
                        "Expansion threads (0 = all cores)");
  parse_cmd->add_flag("--verify", verify,
                      "Check every state against the brute-force oracle");

  std::string tree_file;
  auto* frontier = app.add_subcommand("frontier", "Show frontiers of a tree");
  frontier->add_option("treefile", tree_file, "Bracket or JSON tree")
      ->required();

  std::size_t max_terminals = 7;
  std::size_t max_sites = 2;
  int oracle_threads = 0;
  bool serial = false;
  auto* oracle = app.add_subcommand(
      "oracle-check", "Compare frontier rules with brute force on all small trees");
  oracle->add_option("--max-terminals", max_terminals)->check(CLI::Range(1, 12));
  oracle->add_option("--max-sites", max_sites)->check(CLI::Range(0, 4));
  oracle->add_option("--threads", oracle_threads, "0 = all cores");
  oracle->add_flag("--serial", serial, "Use the serial reference sweep");

  std::string stats_file;
  std::string stats_lexicon;
  std::string stats_format = "table";
  auto* stats = app.add_subcommand("stats", "Count markers in plain text");
  stats->add_option("file", stats_file)->required();
  stats->add_option("--lexicon", stats_lexicon, "Marker lexicon file");
  stats->add_option("--format", stats_format)
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*demo) return cmd_demo(demo_number);
    if (*parse_cmd) {
      return cmd_parse(parse_file, enumerate, beam, lexicon_path, format,
                       threads, verify);
    }
    if (*frontier) return cmd_frontier(tree_file);
    if (*oracle) {
      return cmd_oracle(max_terminals, max_sites, oracle_threads, serial);
    }
    if (*stats) return cmd_stats(stats_file, stats_lexicon, stats_format);
  } catch (const DeadEndError& e) {
    std::cerr << "dead end at unit " << e.unit_id() << ": " << e.what() << "\n";
    return kDeadEnd;
  } catch (const Error& e) {
    std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}
