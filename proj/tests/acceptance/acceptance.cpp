// Acceptance driver: `ltlwb_acceptance <n>` runs criterion n and prints one
// PASS/FAIL line; without an argument all criteria run in order.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../common/random.hpp"
#include "ltlwb/checker.hpp"
#include "ltlwb/cli/verify.hpp"
#include "ltlwb/graph.hpp"
#include "ltlwb/kripke.hpp"
#include "ltlwb/oracles.hpp"
#include "ltlwb/reductions.hpp"

using namespace ltlwb;
using cli::Family;
using cli::VerifyOptions;
using cli::VerifyReport;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void note(std::string& detail, const std::string& text) {
  if (!detail.empty()) detail += " ";
  detail += text;
}

// Runs one verify configuration and appends its summary to the outcome.
VerifyReport verify_into(Outcome& o, VerifyOptions opt) {
  VerifyReport r = cli::run_verify(opt);
  bool ok = r.passed() && !r.rows.empty();
  o.pass = o.pass && ok;
  note(o.detail, cli::family_name(opt.family) + (opt.exhaustive ? "/exh" : "/rnd") + ":" +
                     std::to_string(r.rows.size()) + "/" + std::to_string(r.disagreements()) + "d/" +
                     std::to_string(r.invalid_witnesses()) + "w");
  return r;
}

VerifyOptions exhaustive(Family f) {
  VerifyOptions o;
  o.family = f;
  o.exhaustive = true;
  return o;
}

void time_limit(Outcome& o, Clock::time_point start, double limit) {
  double s = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, "time=%.1fs/%.0fs", s, limit);
  note(o.detail, buf);
  if (s >= limit) o.pass = false;
}

// Criterion 1: 3SAT to MC(F) and MC(X).
Outcome criterion_1() {
  Outcome o;
  auto start = Clock::now();
  for (Family f : {Family::sat3_f, Family::sat3_x}) {
    VerifyOptions v = exhaustive(f);
    v.vars = 3;
    v.clauses = 2;
    verify_into(o, v);
  }
  time_limit(o, start, 60);
  return o;
}

VerifyOptions square_random(Family f) {
  VerifyOptions v;
  v.family = f;
  v.colors = 2;
  v.tiles = 3;
  v.k = 3;
  v.count = 50;
  v.seed = 1;
  return v;
}

std::vector<Family> square_families() {
  return {Family::sqtile_x, Family::sqtile_f, Family::sqtile_g, Family::sqtile_u};
}

// Criterion 2: square tiling to MC for X, F, G, U.
Outcome criterion_2() {
  Outcome o;
  auto start = Clock::now();
  for (Family f : square_families()) {
    VerifyOptions v = exhaustive(f);
    v.colors = 2;
    v.tiles = 2;
    v.k = 2;
    verify_into(o, v);
    verify_into(o, square_random(f));
  }
  time_limit(o, start, 300);
  return o;
}

// Criterion 3: rectangle tiling to MC(X,F) and MC(U).
Outcome criterion_3() {
  Outcome o;
  auto start = Clock::now();
  for (Family f : {Family::recttile_xf, Family::recttile_u}) {
    VerifyOptions v = exhaustive(f);
    v.colors = 2;
    v.tiles = 2;
    verify_into(o, v);
  }
  time_limit(o, start, 300);
  return o;
}

VerifyOptions pwsat_family(Family f) {
  VerifyOptions v = exhaustive(f);
  v.vars = 3;
  v.clauses = 2;
  v.partitions = 2;
  return v;
}

// Criterion 4: p-PW-SAT to SAT over {F,G} and {U}.
Outcome criterion_4() {
  Outcome o;
  auto start = Clock::now();
  for (Family f : {Family::pwsat, Family::pwsat_u}) verify_into(o, pwsat_family(f));
  time_limit(o, start, 600);
  return o;
}

bool witness_valid(const ReductionOutput& out) {
  return out.witness && check_decomposition(witness_graph(out), *out.witness).empty() &&
         width(*out.witness) == out.cert.width;
}

std::string set_text(const std::set<int>& s) {
  std::string t = "{";
  for (int v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v);
  return t + "}";
}

// Criterion 5: parameter bounds, exact integer checks.
Outcome criterion_5() {
  Outcome o;
  // (a) assignment structures for n up to 50.
  bool a = true;
  int max_a = 0;
  for (int n = 1; n <= 50; ++n) {
    Cnf3 c{n, {}};
    for (int v = 1; v <= n; ++v) c.clauses.push_back({v, -v, (v % n) + 1});
    for (Temporal op : {Temporal::F, Temporal::X}) {
      ReductionOutput out = reduce_3sat_to_mc(c, op);
      a = a && witness_valid(out) && out.cert.width <= 3;
      max_a = std::max(max_a, out.cert.width);
    }
  }
  note(o.detail, std::string("a:") + (a ? "ok" : "bad") + " max-width=" + std::to_string(max_a));

  // (b) square tiling X formula for k = 1..4.
  bool b = true;
  std::string bd;
  for (int k = 1; k <= 4; ++k) {
    SquareTilingInstance t{{"a", "b"}, {{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}}, k};
    ReductionOutput out = reduce_sqtiling_to_mc_x(t);
    bool ok = witness_valid(out) && out.cert.td == k * k + k && out.cert.width <= 2 * k * k + k + 15;
    b = b && ok;
    bd += " k" + std::to_string(k) + ":td=" + std::to_string(out.cert.td) + ",w=" +
          std::to_string(out.cert.width) + "<=" + std::to_string(2 * k * k + k + 15);
  }
  note(o.detail, std::string("b:") + (b ? "ok" : "bad") + bd);

  // (c) rectangle reductions over a |C|, |D| in 1..3 sweep.
  std::set<int> xf_w, u_w, u_td, xf_td;
  bool c_valid = true;
  for (int nc = 1; nc <= 3; ++nc)
    for (int nd = 1; nd <= std::min(3, nc * nc * nc * nc); ++nd)
      for (const RectTilingInstance& t : cli::random_rect_tilings(nc, nd, 5, 100 * nc + nd)) {
        ReductionOutput xf = reduce_recttiling_to_mc_xf(t);
        ReductionOutput u = reduce_recttiling_to_mc_u(t);
        c_valid = c_valid && witness_valid(xf) && witness_valid(u);
        xf_w.insert(xf.cert.width);
        xf_td.insert(xf.cert.td);
        u_w.insert(u.cert.width);
        u_td.insert(u.cert.td);
      }
  bool c = c_valid && xf_w.size() == 1 && u_w.size() == 1 && u_td.size() == 1;
  note(o.detail, std::string("c:") + (c ? "ok" : "bad") + " xf-width=" + set_text(xf_w) +
                     " u-width=" + set_text(u_w) + " u-td=" + set_text(u_td) + " xf-td=" + set_text(xf_td));

  // (d) pwsat formulas: depth 3 on the criterion-4 family, and constant
  // width for fixed k and primal pathwidth while n grows to 12.
  bool d = true;
  std::set<int> depths;
  for (const PwSatInstance& i : cli::all_pwsat(3, 2, 2))
    for (FragmentSet t : {FragmentSet{Temporal::F, Temporal::G}, FragmentSet{Temporal::U}}) {
      ReductionOutput out = reduce_pwsat_to_sat(i, t);
      depths.insert(out.cert.td);
      d = d && out.cert.td == 3 && witness_valid(out);
    }
  std::string dd = " td=" + set_text(depths);
  for (int pw = 1; pw <= 2; ++pw)
    for (int k = 1; k <= 3; ++k) {
      std::set<int> widths;
      for (int n = 3; n <= 12; ++n) {
        // Banded CNF: each clause spans pw + 1 consecutive variables.
        PwSatInstance i;
        i.cnf.num_vars = n;
        for (int j = 1; j + pw <= n; ++j) {
          std::vector<int> cl;
          for (int t = 0; t <= pw; ++t) cl.push_back(t % 2 ? -(j + t) : j + t);
          i.cnf.clauses.push_back(cl);
        }
        i.partitions.assign(k, {});
        for (int v = 1; v <= n; ++v) i.partitions[(v - 1) % k].push_back(v);
        i.capacities.assign(k, 1);
        if (exact_pathwidth(primal_graph(i.cnf)).width != pw) d = false;
        ReductionOutput out = reduce_pwsat_to_sat(i);
        d = d && witness_valid(out);
        widths.insert(out.cert.width);
      }
      d = d && widths.size() == 1;
      dd += " pw" + std::to_string(pw) + "k" + std::to_string(k) + "=" + set_text(widths);
    }
  note(o.detail, std::string("d:") + (d ? "ok" : "bad") + dd);
  o.pass = a && b && c && d;
  return o;
}

// All total structures on 1..3 worlds over {p, q} with initial world 0 in
// which every world is reachable from 0, one per isomorphism class fixing 0.
std::vector<KripkeStructure> small_structures() {
  std::vector<KripkeStructure> out;
  std::set<std::string> seen;
  const std::vector<std::string> props{"p", "q"};
  for (int n = 1; n <= 3; ++n) {
    int rel_codes = 1 << (n * n);
    int label_codes = 1 << (2 * n);
    for (int rel = 0; rel < rel_codes; ++rel) {
      bool total = true;
      for (int w = 0; w < n; ++w) total = total && ((rel >> (w * n)) & ((1 << n) - 1)) != 0;
      if (!total) continue;
      int reach = 1;
      for (int it = 0; it < n; ++it)
        for (int w = 0; w < n; ++w)
          if (reach >> w & 1) reach |= (rel >> (w * n)) & ((1 << n) - 1);
      if (reach != (1 << n) - 1) continue;
      for (int lab = 0; lab < label_codes; ++lab) {
        // Canonical key: the lexicographically smallest encoding over
        // permutations that fix world 0.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::string best;
        do {
          std::string key;
          for (int w = 0; w < n; ++w) {
            int src = perm[w];
            key += static_cast<char>('0' + ((lab >> (2 * src)) & 3));
            for (int v = 0; v < n; ++v) key += (rel >> (src * n + perm[v]) & 1) ? '1' : '0';
          }
          if (best.empty() || key < best) best = key;
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        if (!seen.insert(std::to_string(n) + best).second) continue;
        KripkeStructure s;
        for (int w = 0; w < n; ++w) {
          std::vector<std::string> labels;
          for (int p = 0; p < 2; ++p)
            if (lab >> (2 * w + p) & 1) labels.push_back(props[p]);
          s.add_world("w" + std::to_string(w), labels);
        }
        for (int w = 0; w < n; ++w)
          for (int v = 0; v < n; ++v)
            if (rel >> (w * n + v) & 1) s.add_edge(w, v);
        s.set_init(0);
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

// Every formula with at most max_size nodes over {p, q}, built bottom-up so
// that equal subtrees share nodes.
std::vector<Formula> small_formulas(int max_size) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  by_size[1] = {Formula::prop("p"), Formula::prop("q"), Formula::top(), Formula::bottom()};
  const Op unary[] = {Op::neg, Op::next, Op::finally, Op::globally};
  const Op binary[] = {Op::conj, Op::disj, Op::implies, Op::until};
  for (int s = 2; s <= max_size; ++s) {
    for (Op op : unary)
      for (const Formula& a : by_size[s - 1]) by_size[s].push_back(Formula::make(op, a, Formula()));
    for (int l = 1; l + 1 < s; ++l)
      for (Op op : binary)
        for (const Formula& a : by_size[l])
          for (const Formula& b : by_size[s - 1 - l]) by_size[s].push_back(Formula::make(op, a, b));
  }
  std::vector<Formula> all;
  for (const auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
  return all;
}

// Lasso length bound of the brute checker in criterion 6.
constexpr int kBruteBound = 6;

// Criterion 6: checker cross-validation.
Outcome criterion_6() {
  Outcome o;
  auto start = Clock::now();
  std::vector<KripkeStructure> structures = small_structures();
  std::vector<Formula> formulas = small_formulas(5);
  long pairs = 0, mismatches = 0;
  std::vector<UniversalChecker> checkers;
  checkers.reserve(formulas.size());
  for (const Formula& f : formulas) checkers.emplace_back(f);
  for (const KripkeStructure& s : structures) {
    BruteChecker brute(s, 0, kBruteBound);
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      ++pairs;
      if (checkers[i].holds(s, 0) != brute.holds(formulas[i])) ++mismatches;
    }
  }
  note(o.detail, "mc-vs-brute bound=" + std::to_string(kBruteBound) +
                     " structures=" + std::to_string(structures.size()) +
                     " formulas=" + std::to_string(formulas.size()) + " pairs=" + std::to_string(pairs) +
                     " mismatches=" + std::to_string(mismatches));

  testing::Rng rng(6);
  const std::vector<std::string> props{"p", "q"};
  int x_sat = 0, x_mc = 0;
  for (int i = 0; i < 500; ++i) {
    Formula f;
    do {
      f = testing::random_formula(rng, 1 + testing::pick(rng, 10), props, FragmentSet{Temporal::X});
    } while (temporal_depth(f) > 3);
    if (sat_x(f) != sat(f).has_value()) ++x_sat;
    KripkeStructure s = testing::random_structure(rng, 1 + testing::pick(rng, 4), props);
    if (mc_x_bounded(s, 0, f) != mc_universal(s, 0, f)) ++x_mc;
  }
  note(o.detail, "x-instances=500 sat_x-mismatches=" + std::to_string(x_sat) +
                     " mc_x-mismatches=" + std::to_string(x_mc));
  o.pass = mismatches == 0 && x_sat == 0 && x_mc == 0;
  time_limit(o, start, 600);
  return o;
}

// Criterion 7: semantic laws on random (lasso, formula) pairs.
Outcome criterion_7() {
  Outcome o;
  testing::Rng rng(7);
  const std::vector<std::string> props{"p", "q", "r"};
  const FragmentSet all{Temporal::X, Temporal::F, Temporal::G, Temporal::U};
  const FragmentSet no_x{Temporal::F, Temporal::G, Temporal::U};
  int duality = 0, suffix = 0, expansion = 0, stutter = 0;
  for (int i = 0; i < 1000; ++i) {
    LassoWord w = testing::random_word(rng, props, 4, 4);
    Formula f = testing::random_formula(rng, 1 + testing::pick(rng, 12), props, all);
    Formula g = testing::random_formula(rng, 1 + testing::pick(rng, 12), props, all);
    Formula h = testing::random_formula(rng, 1 + testing::pick(rng, 12), props, no_x);
    if (eval_on_word(w, Formula::finally(f)) != !eval_on_word(w, Formula::globally(Formula::neg(f))))
      ++duality;
    if (eval_on_word(w, Formula::next(f)) != eval_on_word(testing::drop_first(w), f)) ++suffix;
    Formula u = Formula::until(f, g);
    if (eval_positions(w, u) != eval_positions(w, Formula::disj(g, Formula::conj(f, Formula::next(u)))))
      ++expansion;
    int at = testing::pick(rng, w.length());
    if (eval_on_word(w, h) != eval_on_word(testing::stutter(w, at), h)) ++stutter;
  }
  o.pass = duality == 0 && suffix == 0 && expansion == 0 && stutter == 0;
  note(o.detail, "pairs=1000 duality=" + std::to_string(duality) + " x-suffix=" + std::to_string(suffix) +
                     " u-expansion=" + std::to_string(expansion) + " stutter=" + std::to_string(stutter));
  return o;
}

Graph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v");
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

// Criterion 8: decomposition toolkit.
Outcome criterion_8() {
  Outcome o;
  int invalid = 0, wrong_width = 0, published = 0, order = 0;
  auto check = [&](const Graph& g, const WidthResult& r) {
    if (!check_decomposition(g, r.decomposition).empty()) ++invalid;
    if (width(r.decomposition) != r.width) ++wrong_width;
  };
  for (int n = 1; n <= 9; ++n) {
    std::vector<std::pair<int, int>> path, clique;
    for (int i = 0; i + 1 < n; ++i) path.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) clique.emplace_back(i, j);
    Graph p = graph_of(n, path), k = graph_of(n, clique);
    auto pp = exact_pathwidth(p), pt = exact_treewidth(p), kp = exact_pathwidth(k), kt = exact_treewidth(k);
    for (auto* r : {&pp, &pt}) check(p, *r);
    for (auto* r : {&kp, &kt}) check(k, *r);
    int path_w = n > 1 ? 1 : 0;
    if (pp.width != path_w || pt.width != path_w || kp.width != n - 1 || kt.width != n - 1) ++published;
  }
  Graph c4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto c4t = exact_treewidth(c4);
  check(c4, c4t);
  if (c4t.width != 2) ++published;

  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + testing::pick(rng, 7);
    int density = testing::pick(rng, 101);
    Graph g = graph_of(n, {});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (testing::pick(rng, 100) < density) g.add_edge(a, b);
    auto pw = exact_pathwidth(g), tw = exact_treewidth(g), mf = minfill_upper(g), gp = greedy_path_upper(g);
    for (auto* r : {&pw, &tw, &mf, &gp}) check(g, *r);
    if (pw.width < tw.width || mf.width < tw.width || gp.width < pw.width) ++order;
  }

  // Decompositions of formula syntax graphs, as used by analyze.
  const std::vector<std::string> props{"p", "q", "r"};
  for (int i = 0; i < 100; ++i) {
    Formula f = testing::random_formula(rng, 1 + testing::pick(rng, 14), props,
                                        FragmentSet{Temporal::X, Temporal::F, Temporal::G, Temporal::U});
    Graph g = syntax_graph(f);
    auto tw = exact_treewidth(g), pw = exact_pathwidth(g), mf = minfill_upper(g);
    for (auto* r : {&tw, &pw, &mf}) check(g, *r);
    if (pw.width < tw.width || mf.width < tw.width) ++order;
  }
  o.pass = invalid == 0 && wrong_width == 0 && published == 0 && order == 0;
  note(o.detail, "random-graphs=200 invalid=" + std::to_string(invalid) + " width-mismatch=" +
                     std::to_string(wrong_width) + " published-mismatch=" + std::to_string(published) +
                     " order-violations=" + std::to_string(order));
  return o;
}

// Criterion 9: every mutated family must be caught.
Outcome criterion_9() {
  Outcome o;
  auto caught = [&](VerifyOptions v) {
    v.reduction.mutation = Mutation::drop_conjunct;
    VerifyReport r = cli::run_verify(v);
    bool hit = r.disagreements() > 0;
    o.pass = o.pass && hit;
    note(o.detail, cli::family_name(v.family) + ":" + std::to_string(r.disagreements()) + "/" +
                       std::to_string(r.rows.size()));
  };
  for (Family f : {Family::sat3_f, Family::sat3_x}) {
    VerifyOptions v = exhaustive(f);
    v.vars = 3;
    v.clauses = 2;
    caught(v);
  }
  for (Family f : square_families()) {
    VerifyOptions v = exhaustive(f);
    v.colors = 2;
    v.tiles = 2;
    v.k = 2;
    caught(v);
  }
  for (Family f : {Family::recttile_xf, Family::recttile_u}) {
    VerifyOptions v = exhaustive(f);
    v.colors = 2;
    v.tiles = 2;
    caught(v);
  }
  for (Family f : {Family::pwsat, Family::pwsat_u}) caught(pwsat_family(f));
  return o;
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>> kCriteria{
    {1, {"3sat reduction soundness", criterion_1}},
    {2, {"square tiling reduction soundness", criterion_2}},
    {3, {"rectangle tiling reduction soundness", criterion_3}},
    {4, {"pwsat reduction soundness", criterion_4}},
    {5, {"parameter bounds", criterion_5}},
    {6, {"checker cross-validation", criterion_6}},
    {7, {"semantic laws", criterion_7}},
    {8, {"decomposition toolkit", criterion_8}},
    {9, {"mutation self-test", criterion_9}},
};

int run_one(int n) {
  auto it = kCriteria.find(n);
  if (it == kCriteria.end()) {
    std::cerr << "unknown criterion " << n << "\n";
    return 2;
  }
  Outcome o;
  try {
    o = it->second.second();
  } catch (const std::exception& e) {
    o.pass = false;
    note(o.detail, std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << " [" << it->second.first << "] "
            << o.detail << std::endl;
  return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) return run_one(std::atoi(argv[1]));
  int failed = 0;
  for (const auto& [n, entry] : kCriteria) failed += run_one(n) != 0;
  return failed == 0 ? 0 : 1;
}
