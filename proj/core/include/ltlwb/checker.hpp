#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ltlwb/automaton.hpp"
#include "ltlwb/formula.hpp"
#include "ltlwb/kripke.hpp"

namespace ltlwb {

struct McInstance {
  KripkeStructure structure;
  WorldId world = 0;
  Formula formula;
};

struct SatWitness {
  KripkeStructure structure;
  Lasso lasso;
};

struct SearchStats {
  long nodes = 0;
  long edges = 0;
  long pruned = 0;
};

std::unique_ptr<Gba> ltl_to_gba(const Formula& f);

std::optional<SatWitness> sat(const Formula& f, SearchStats* stats = nullptr);

// Some path from w satisfies f; returns such a path as a lasso.
std::optional<Lasso> exists_path(const KripkeStructure& s, WorldId w, const Formula& f,
                                 SearchStats* stats = nullptr);
bool mc_universal(const KripkeStructure& s, WorldId w, const Formula& f);
bool mc_universal(const McInstance& i);

// Universal checking of one formula against many structures; the automaton
// for the negated formula is built once and its expansions are shared.
class UniversalChecker {
 public:
  explicit UniversalChecker(const Formula& f);
  bool holds(const KripkeStructure& s, WorldId w, SearchStats* stats = nullptr);
  std::optional<Lasso> counterexample(const KripkeStructure& s, WorldId w,
                                      SearchStats* stats = nullptr);

 private:
  Gba gba_;
};

bool mc_x_bounded(const KripkeStructure& s, WorldId w, const Formula& f);
bool mc_x_bounded(const McInstance& i);
bool sat_x(const Formula& f);

// All lassos from w with total length <= bound.
std::vector<Lasso> enumerate_lassos(const KripkeStructure& s, WorldId w, int bound);

bool brute_mc(const KripkeStructure& s, WorldId w, const Formula& f, int bound);
bool brute_mc(const McInstance& i, int bound);

// brute_mc over a fixed lasso family, memoizing subformula values by node.
// Lassos with equal label words are kept once.
class BruteChecker {
 public:
  BruteChecker(const KripkeStructure& s, WorldId w, int bound);
  bool holds(const Formula& f);
  int num_words() const { return static_cast<int>(words_.size()); }

 private:
  struct Word {
    int length;
    int loop;
    std::vector<std::vector<PropId>> labels;
  };
  // Bit j of entry i: f holds at position j of word i.
  const std::vector<std::uint64_t>& values(const Formula& f);

  const KripkeStructure& s_;
  std::vector<Word> words_;
  std::unordered_map<const void*, std::pair<Formula, std::vector<std::uint64_t>>> memo_;
};

}  // namespace ltlwb
