#include "ltlwb/kripke.hpp"

#include <algorithm>
#include <sstream>

#include "ltlwb/errors.hpp"

namespace ltlwb {

WorldId KripkeStructure::add_world(std::string name, const std::vector<std::string>& labels) {
  if (name.empty()) throw Error("world name must be nonempty");
  if (by_name_.count(name)) throw Error("duplicate world '" + name + "'");
  WorldId w = num_worlds();
  by_name_.emplace(name, w);
  names_.push_back(std::move(name));
  labels_.emplace_back();
  succ_.emplace_back();
  for (const auto& l : labels) add_label(w, l);
  return w;
}

PropId KripkeStructure::intern(const std::string& name) {
  auto it = prop_ids_.find(name);
  if (it != prop_ids_.end()) return it->second;
  PropId id = num_props();
  prop_ids_.emplace(name, id);
  prop_names_.push_back(name);
  return id;
}

void KripkeStructure::add_label(WorldId w, const std::string& prop) {
  PropId p = intern(prop);
  auto& ls = labels_[w];
  if (std::find(ls.begin(), ls.end(), p) == ls.end()) ls.push_back(p);
}

void KripkeStructure::add_edge(WorldId from, WorldId to) {
  if (from < 0 || from >= num_worlds() || to < 0 || to >= num_worlds())
    throw Error("edge references a nonexistent world");
  auto& out = succ_[from];
  if (std::find(out.begin(), out.end(), to) != out.end()) return;
  out.push_back(to);
  edges_.emplace_back(from, to);
}

void KripkeStructure::add_edge(const std::string& from, const std::string& to) {
  auto a = find_world(from);
  auto b = find_world(to);
  if (!a || !b) {
    dangling_.emplace_back(from, to);
    return;
  }
  add_edge(*a, *b);
}

std::optional<WorldId> KripkeStructure::find_world(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<PropId> KripkeStructure::find_prop(std::string_view name) const {
  auto it = prop_ids_.find(std::string(name));
  if (it == prop_ids_.end()) return std::nullopt;
  return it->second;
}

bool KripkeStructure::has_label(WorldId w, PropId p) const {
  const auto& ls = labels_[w];
  return std::find(ls.begin(), ls.end(), p) != ls.end();
}

bool KripkeStructure::has_label(WorldId w, std::string_view prop) const {
  auto p = find_prop(prop);
  return p && has_label(w, *p);
}

std::vector<Violation> validate_structure(const KripkeStructure& s) {
  std::vector<Violation> out;
  if (s.init() < 0 || s.init() >= s.num_worlds())
    out.push_back({Violation::Kind::bad_init, -1, "no valid initial world"});
  for (WorldId w = 0; w < s.num_worlds(); ++w)
    if (s.successors(w).empty())
      out.push_back({Violation::Kind::non_total, w, "world '" + s.world_name(w) + "' has no successor"});
  for (const auto& [a, b] : s.dangling())
    out.push_back({Violation::Kind::dangling_edge, -1, "edge " + a + " -> " + b});
  return out;
}

int branching_degree(const KripkeStructure& s) {
  std::size_t d = 0;
  for (WorldId w = 0; w < s.num_worlds(); ++w) d = std::max(d, s.successors(w).size());
  return static_cast<int>(d);
}

namespace {

struct Line {
  std::size_t offset;
  std::vector<std::string> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{pos, {}};
    std::string w;
    while (in >> w) l.words.push_back(w);
    if (!l.words.empty()) lines.push_back(std::move(l));
    pos = end + 1;
  }
  return lines;
}

}  // namespace

KripkeStructure parse_kripke(std::string_view text) {
  KripkeStructure s;
  auto lines = split_lines(text);
  for (const auto& l : lines) {
    const auto& w = l.words;
    if (w[0] == "world") {
      if (w.size() < 2) throw ParseError("world needs a name", l.offset);
      if (s.find_world(w[1])) throw ParseError("duplicate world '" + w[1] + "'", l.offset);
      s.add_world(w[1], std::vector<std::string>(w.begin() + 2, w.end()));
    } else if (w[0] != "edge" && w[0] != "init") {
      throw ParseError("unknown directive '" + w[0] + "'", l.offset);
    }
  }
  bool have_init = false;
  for (const auto& l : lines) {
    const auto& w = l.words;
    if (w[0] == "edge") {
      if (w.size() != 3) throw ParseError("edge needs two worlds", l.offset);
      s.add_edge(w[1], w[2]);
    } else if (w[0] == "init") {
      if (w.size() != 2) throw ParseError("init needs one world", l.offset);
      if (have_init) throw ParseError("duplicate init", l.offset);
      auto id = s.find_world(w[1]);
      if (!id) throw ParseError("init references unknown world '" + w[1] + "'", l.offset);
      s.set_init(*id);
      have_init = true;
    }
  }
  return s;
}

std::string write_kripke(const KripkeStructure& s) {
  std::string out;
  for (WorldId w = 0; w < s.num_worlds(); ++w) {
    out += "world " + s.world_name(w);
    for (PropId p : s.labels(w)) out += " " + s.prop_name(p);
    out += '\n';
  }
  for (const auto& [a, b] : s.edges()) out += "edge " + s.world_name(a) + " " + s.world_name(b) + "\n";
  for (const auto& [a, b] : s.dangling()) out += "edge " + a + " " + b + "\n";
  if (s.init() >= 0) out += "init " + s.world_name(s.init()) + "\n";
  return out;
}

bool is_valid_lasso(const KripkeStructure& s, const Lasso& l) {
  if (l.cycle.empty()) return false;
  int n = l.length();
  for (int i = 0; i < n; ++i)
    if (l.at(i) < 0 || l.at(i) >= s.num_worlds()) return false;
  auto edge = [&](WorldId a, WorldId b) {
    const auto& out = s.successors(a);
    return std::find(out.begin(), out.end(), b) != out.end();
  };
  for (int i = 0; i + 1 < n; ++i)
    if (!edge(l.at(i), l.at(i + 1))) return false;
  return edge(l.cycle.back(), l.cycle.front());
}

LassoWord word_of(const KripkeStructure& s, const Lasso& l) {
  auto letter = [&](WorldId w) {
    std::set<std::string> out;
    for (PropId p : s.labels(w)) out.insert(s.prop_name(p));
    return out;
  };
  LassoWord word;
  for (WorldId w : l.prefix) word.prefix.push_back(letter(w));
  for (WorldId w : l.cycle) word.cycle.push_back(letter(w));
  return word;
}

std::string write_lasso(const KripkeStructure& s, const Lasso& l) {
  std::string out = "prefix";
  for (WorldId w : l.prefix) out += " " + s.world_name(w);
  out += "\ncycle";
  for (WorldId w : l.cycle) out += " " + s.world_name(w);
  out += '\n';
  return out;
}

Lasso parse_lasso(const KripkeStructure& s, std::string_view text) {
  Lasso l;
  bool seen_cycle = false;
  for (const auto& line : split_lines(text)) {
    std::vector<WorldId>* dst = nullptr;
    if (line.words[0] == "prefix") dst = &l.prefix;
    else if (line.words[0] == "cycle") {
      dst = &l.cycle;
      seen_cycle = true;
    } else {
      throw ParseError("unknown directive '" + line.words[0] + "'", line.offset);
    }
    for (std::size_t i = 1; i < line.words.size(); ++i) {
      auto w = s.find_world(line.words[i]);
      if (!w) throw ParseError("unknown world '" + line.words[i] + "'", line.offset);
      dst->push_back(*w);
    }
  }
  if (!seen_cycle || l.cycle.empty()) throw ParseError("lasso needs a nonempty cycle", 0);
  return l;
}

}  // namespace ltlwb
