#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ltlwb/formula.hpp"

namespace ltlwb {

using WorldId = int;
using PropId = int;

class KripkeStructure {
 public:
  WorldId add_world(std::string name, const std::vector<std::string>& labels = {});
  void add_label(WorldId w, const std::string& prop);
  void add_edge(WorldId from, WorldId to);
  // Edges naming unknown worlds are kept as dangling and reported by validate_structure.
  void add_edge(const std::string& from, const std::string& to);
  void set_init(WorldId w) { init_ = w; }

  int num_worlds() const { return static_cast<int>(names_.size()); }
  const std::string& world_name(WorldId w) const { return names_[w]; }
  std::optional<WorldId> find_world(std::string_view name) const;
  WorldId init() const { return init_; }

  const std::vector<WorldId>& successors(WorldId w) const { return succ_[w]; }
  const std::vector<PropId>& labels(WorldId w) const { return labels_[w]; }
  bool has_label(WorldId w, PropId p) const;
  bool has_label(WorldId w, std::string_view prop) const;

  int num_props() const { return static_cast<int>(prop_names_.size()); }
  const std::string& prop_name(PropId p) const { return prop_names_[p]; }
  std::optional<PropId> find_prop(std::string_view name) const;
  PropId intern(const std::string& name);

  const std::vector<std::pair<WorldId, WorldId>>& edges() const { return edges_; }
  const std::vector<std::pair<std::string, std::string>>& dangling() const { return dangling_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, WorldId> by_name_;
  std::vector<std::vector<PropId>> labels_;
  std::vector<std::vector<WorldId>> succ_;
  std::vector<std::pair<WorldId, WorldId>> edges_;
  std::vector<std::pair<std::string, std::string>> dangling_;
  std::vector<std::string> prop_names_;
  std::unordered_map<std::string, PropId> prop_ids_;
  WorldId init_ = -1;
};

struct Violation {
  enum class Kind { non_total, dangling_edge, bad_init };
  Kind kind;
  WorldId world;
  std::string detail;
};

std::vector<Violation> validate_structure(const KripkeStructure& s);
int branching_degree(const KripkeStructure& s);

KripkeStructure parse_kripke(std::string_view text);
std::string write_kripke(const KripkeStructure& s);

struct Lasso {
  std::vector<WorldId> prefix;
  std::vector<WorldId> cycle;

  int length() const { return static_cast<int>(prefix.size() + cycle.size()); }
  WorldId at(int i) const {
    return i < static_cast<int>(prefix.size()) ? prefix[i] : cycle[i - prefix.size()];
  }
  friend bool operator==(const Lasso&, const Lasso&) = default;
};

bool is_valid_lasso(const KripkeStructure& s, const Lasso& l);

// A lasso over letters directly, without a host structure.
struct LassoWord {
  std::vector<std::set<std::string>> prefix;
  std::vector<std::set<std::string>> cycle;

  int length() const { return static_cast<int>(prefix.size() + cycle.size()); }
  const std::set<std::string>& at(int i) const {
    return i < static_cast<int>(prefix.size()) ? prefix[i] : cycle[i - prefix.size()];
  }
};

LassoWord word_of(const KripkeStructure& s, const Lasso& l);

bool eval_on_lasso(const KripkeStructure& s, const Lasso& l, const Formula& f);
bool eval_on_word(const LassoWord& w, const Formula& f);
// Truth value of f at every position 0..length-1 of the word.
std::vector<bool> eval_positions(const LassoWord& w, const Formula& f);

std::string write_lasso(const KripkeStructure& s, const Lasso& l);
Lasso parse_lasso(const KripkeStructure& s, std::string_view text);

}  // namespace ltlwb
