#include "dltag/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "dltag/error.h"
#include "dltag/frontier.h"

namespace dltag {

namespace internal {
std::string_view default_lexicon_text();
}  // namespace internal

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    out.push_back(trim(s.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

MarkerEntry parse_entry(const std::string& line, std::size_t line_no) {
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::kFormat, "lexicon line " +
                                         std::to_string(line_no) + ": " +
                                         what);
  };
  const auto fields = split(line, '|');
  if (fields.size() != 7) {
    throw fail("expected 7 '|'-separated fields, found " +
               std::to_string(fields.size()));
  }
  MarkerEntry e;
  e.name = fields[0];
  if (e.name.empty()) throw fail("empty name");
  for (auto& surface : split(fields[1], ';')) {
    if (!surface.empty()) e.surfaces.push_back(lower(surface));
  }
  if (e.surfaces.empty()) throw fail("no surface forms");

  if (fields[2] == "forward") {
    e.direction = Direction::kForward;
  } else if (fields[2] == "backward") {
    e.direction = Direction::kBackward;
  } else if (fields[2] == "both") {
    e.direction = Direction::kBoth;
  } else {
    throw fail("unknown direction '" + fields[2] + "'");
  }

  if (fields[3].empty()) throw fail("empty relation");
  e.relation = RelationLabel(fields[3]);

  if (fields[4] == "elementary-with-site") {
    e.builds = Schema::kElementaryWithSite;
  } else if (fields[4] == "satisfier-leaf") {
    e.builds = Schema::kSatisfierLeaf;
  } else if (fields[4] == "backward-auxiliary") {
    e.builds = Schema::kBackwardAuxiliary;
  } else if (fields[4] == "forward-auxiliary-with-site") {
    e.builds = Schema::kForwardAuxiliaryWithSite;
  } else {
    throw fail("unknown schema '" + fields[4] + "'");
  }

  const bool site_schema = e.builds == Schema::kElementaryWithSite ||
                           e.builds == Schema::kForwardAuxiliaryWithSite;
  if (e.direction == Direction::kForward &&
      e.builds != Schema::kElementaryWithSite) {
    throw fail("forward markers build elementary-with-site");
  }
  if (e.direction == Direction::kBackward && site_schema) {
    throw fail("backward markers build site-free structures");
  }
  if (e.direction == Direction::kBoth &&
      e.builds != Schema::kForwardAuxiliaryWithSite) {
    throw fail("both-direction markers build forward-auxiliary-with-site");
  }

  if (fields[5] != "-" && !fields[5].empty()) {
    e.satisfies = RelationLabel(fields[5]);
  }
  if (e.builds == Schema::kSatisfierLeaf && !e.satisfies) {
    throw fail("satisfier-leaf needs a satisfies relation");
  }

  if (fields[6] == "initial") {
    e.position = MarkerPosition::kClauseInitial;
  } else if (fields[6] == "any") {
    e.position = MarkerPosition::kAnywhere;
  } else {
    throw fail("unknown position '" + fields[6] + "'");
  }
  return e;
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    MarkerEntry entry = parse_entry(body, line_no);
    if (lex.find(entry.name)) {
      throw Error(ErrorCode::kFormat, "lexicon line " +
                                          std::to_string(line_no) +
                                          ": duplicate name '" + entry.name +
                                          "'");
    }
    lex.entries_.push_back(std::make_shared<const MarkerEntry>(entry));
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read lexicon " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon = parse(internal::default_lexicon_text());
  return lexicon;
}

MarkerRef Lexicon::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e->name == name) return e;
  }
  return nullptr;
}

std::vector<MarkerMatch> Lexicon::match_markers(std::string_view text) const {
  const std::string folded = lower(text);
  const std::size_t n = folded.size();

  auto longest_at = [&](std::size_t pos, bool anywhere_only) {
    MarkerMatch best;
    for (const auto& e : entries_) {
      if (anywhere_only && e->position != MarkerPosition::kAnywhere) continue;
      for (const auto& s : e->surfaces) {
        if (s.size() <= best.surface.size()) continue;
        if (folded.compare(pos, s.size(), s) != 0) continue;
        const std::size_t end = pos + s.size();
        if (end < n && is_word(folded[end])) continue;
        best = MarkerMatch{e, pos, std::string(text.substr(pos, s.size())),
                           !anywhere_only};
      }
    }
    return best;
  };
  auto skip_separators = [&](std::size_t pos) {
    while (pos < n && !is_word(folded[pos])) ++pos;
    return pos;
  };

  std::vector<MarkerMatch> out;
  std::size_t pos = skip_separators(0);
  while (pos < n) {
    MarkerMatch m = longest_at(pos, false);
    if (!m.entry) break;
    pos = skip_separators(pos + m.surface.size());
    out.push_back(std::move(m));
  }
  while (pos < n) {
    if (is_word(folded[pos]) && (pos == 0 || !is_word(folded[pos - 1]))) {
      MarkerMatch m = longest_at(pos, true);
      if (m.entry) {
        pos += m.surface.size();
        out.push_back(std::move(m));
        continue;
      }
    }
    ++pos;
  }
  return out;
}

UnitInput make_unit(std::string id, std::string text, std::size_t seq,
                    const Lexicon& lexicon) {
  UnitInput unit{std::move(id), std::move(text), seq, {}};
  unit.markers = lexicon.match_markers(unit.text);
  return unit;
}

UnitInput make_unit_with_markers(std::string id, std::string text,
                                 std::size_t seq,
                                 const std::vector<std::string>& markers,
                                 const Lexicon& lexicon) {
  UnitInput unit{std::move(id), std::move(text), seq, {}};
  for (const auto& marker : markers) {
    std::string name = marker;
    bool initial = true;
    if (const auto colon = marker.find(':'); colon != std::string::npos) {
      name = marker.substr(0, colon);
      const std::string where = marker.substr(colon + 1);
      if (where != "final" && where != "initial") {
        throw Error(ErrorCode::kFormat, "marker '" + marker +
                                            "': position must be initial "
                                            "or final");
      }
      initial = where == "initial";
    }
    MarkerRef entry = lexicon.find(name);
    if (!entry) {
      throw Error(ErrorCode::kFormat, "unknown marker '" + name + "'");
    }
    unit.markers.push_back({entry, 0, entry->surfaces.front(), initial});
  }
  return unit;
}

namespace {

const MarkerMatch* first_match(const UnitInput& unit, bool backward) {
  for (const auto& m : unit.markers) {
    const Direction d = m.entry->direction;
    if (backward ? d != Direction::kForward : d == Direction::kForward) {
      return &m;
    }
  }
  return nullptr;
}

NodePtr site_expecting(const RelationLabel& relation) {
  return make_site(1, {{kExpectsFeature, relation.name()}});
}

TreeTemplate with_root_feature(const TreeTemplate& templ,
                               const std::string& key,
                               const std::string& value) {
  FeatureMap features = templ.shape.root()->features;
  features[key] = value;
  return make_elementary(with_features(*templ.shape.root(), features));
}

}  // namespace

TreeTemplate unit_structure(const UnitInput& unit) {
  NodePtr leaf = make_leaf(unit.unit());
  const MarkerMatch* forward = first_match(unit, false);
  if (!forward) {
    const MarkerMatch* back = first_match(unit, true);
    if (back && back->entry->direction == Direction::kBoth) forward = back;
  }
  if (!forward) return make_elementary(leaf);
  const RelationLabel& rel = forward->entry->relation;
  return make_elementary(make_relation(rel, leaf, site_expecting(rel)));
}

std::vector<AttachmentHypothesis> build_hypotheses(const UnitInput& unit,
                                                   const DiscourseTree& tree) {
  const TreeTemplate structure = unit_structure(unit);
  if (tree.empty()) {
    return {{ActionKind::kSeed, structure, {}, false}};
  }

  std::vector<AttachmentHypothesis> out;
  const MarkerMatch* back = first_match(unit, true);
  const bool deferred = back && !back->clause_initial;
  const NodePtr target = substitution_target(tree);

  if (target && back) {
    bool satisfied = false;
    if (back->entry->satisfies) {
      TreeTemplate satisfier = with_root_feature(
          structure, kExpectsFeature, back->entry->satisfies->name());
      if (unifies(unify_features(target->features,
                                 satisfier.shape.root()->features))) {
        out.push_back({ActionKind::kSubstitute, satisfier, {}, false});
        satisfied = true;
      }
    }
    if (!satisfied && deferred && open_coerced_ancestor(tree, target->id)) {
      out.push_back(
          {ActionKind::kSubstitute, structure, back->entry->relation, true});
    }
  } else if (target) {
    out.push_back({ActionKind::kSubstitute, structure, {}, false});
  }

  if (back && back->entry->builds != Schema::kSatisfierLeaf) {
    // A clause-final backward marker scopes over the span its clause
    // completes, never over the clause alone, while a site is pending.
    if (!(deferred && target)) {
      out.push_back({ActionKind::kAdjoin,
                     make_auxiliary(make_relation(back->entry->relation,
                                                  make_foot(),
                                                  structure.shape.root())),
                     back->entry->relation, false});
    }
  } else {
    out.push_back({ActionKind::kCoerceThenAdjoin, structure,
                   default_coercion_relation(), false});
  }
  return out;
}

}  // namespace dltag
