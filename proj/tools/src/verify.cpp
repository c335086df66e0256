#include "ltlwb/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <variant>

#include "ltlwb/checker.hpp"
#include "ltlwb/errors.hpp"
#include "ltlwb/oracles.hpp"

namespace ltlwb::cli {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::pwsat, "pwsat"},           {Family::pwsat_u, "pwsat-u"},
    {Family::sat3_f, "3sat-f"},         {Family::sat3_x, "3sat-x"},
    {Family::sqtile_x, "sqtile-x"},     {Family::sqtile_f, "sqtile-f"},
    {Family::sqtile_g, "sqtile-g"},     {Family::sqtile_u, "sqtile-u"},
    {Family::recttile_xf, "recttile-xf"}, {Family::recttile_u, "recttile-u"},
};

using Instance = std::variant<Cnf3, PwSatInstance, SquareTilingInstance, RectTilingInstance>;

std::vector<std::string> color_names(int colors) {
  std::vector<std::string> out;
  for (int c = 0; c < colors; ++c) out.push_back(std::string(1, static_cast<char>('a' + c)));
  return out;
}

Tile tile_of_index(int index, int colors) {
  Tile t;
  t.right = index % colors;
  index /= colors;
  t.left = index % colors;
  index /= colors;
  t.down = index % colors;
  index /= colors;
  t.up = index;
  return t;
}

int pow_int(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Calls f with every nondecreasing sequence of length len over [0, n).
void multisets(int n, int len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(len, 0);
  if (len == 0 || n == 0) return;
  while (true) {
    f(idx);
    int i = len - 1;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < len; ++j) idx[j] = idx[i];
  }
}

// Calls f with every strictly increasing sequence of length len over [0, n).
void combinations(int n, int len, const std::function<void(const std::vector<int>&)>& f) {
  if (len > n || len == 0) return;
  std::vector<int> idx(len);
  for (int i = 0; i < len; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = len - 1;
    while (i >= 0 && idx[i] == n - len + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < len; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<Tile>> tile_sets(int colors, int max_tiles) {
  int total = pow_int(colors, 4);
  std::vector<std::vector<Tile>> out;
  for (int size = 1; size <= max_tiles; ++size)
    combinations(total, size, [&](const std::vector<int>& idx) {
      std::vector<Tile> set;
      for (int i : idx) set.push_back(tile_of_index(i, colors));
      out.push_back(std::move(set));
    });
  return out;
}

std::vector<Tile> random_tile_set(int colors, int tiles, std::mt19937_64& rng) {
  int total = pow_int(colors, 4);
  if (tiles > total) throw InvalidInstance("more tiles requested than distinct tiles exist");
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < tiles) chosen.insert(static_cast<int>(rng() % total));
  std::vector<Tile> out;
  for (int i : chosen) out.push_back(tile_of_index(i, colors));
  return out;
}

std::string describe_clauses(const std::vector<std::vector<int>>& clauses) {
  std::string s;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (j) s += ';';
    for (std::size_t i = 0; i < clauses[j].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(clauses[j][i]);
    }
  }
  return s;
}

std::string describe_tiles(const std::vector<std::string>& colors, const std::vector<Tile>& tiles) {
  std::string s;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (i) s += ',';
    for (int c : {tiles[i].up, tiles[i].down, tiles[i].left, tiles[i].right}) s += colors[c];
  }
  return s;
}

std::string describe(const Instance& inst) {
  struct Visitor {
    std::string operator()(const Cnf3& c) const {
      std::vector<std::vector<int>> cl;
      for (const auto& a : c.clauses) cl.push_back({a[0], a[1], a[2]});
      return "n" + std::to_string(c.num_vars) + ":" + describe_clauses(cl);
    }
    std::string operator()(const PwSatInstance& i) const {
      std::string s = "n" + std::to_string(i.num_vars()) + ":" + describe_clauses(i.cnf.clauses) + "|";
      for (int p = 0; p < i.k(); ++p) {
        if (p) s += ';';
        for (std::size_t j = 0; j < i.partitions[p].size(); ++j) {
          if (j) s += ',';
          s += std::to_string(i.partitions[p][j]);
        }
        s += "=" + std::to_string(i.capacities[p]);
      }
      return s;
    }
    std::string operator()(const SquareTilingInstance& t) const {
      return describe_tiles(t.colors, t.tiles) + "|k" + std::to_string(t.k);
    }
    std::string operator()(const RectTilingInstance& t) const {
      return describe_tiles(t.colors, t.tiles) + "|" + t.colors[t.c0] + t.colors[t.c1];
    }
  };
  return std::visit(Visitor{}, inst);
}

std::vector<Instance> instances_for(const VerifyOptions& o) {
  std::vector<Instance> out;
  auto add = [&](auto v) {
    for (auto& x : v) out.emplace_back(std::move(x));
  };
  switch (o.family) {
    case Family::sat3_f:
    case Family::sat3_x:
      if (o.exhaustive)
        add(all_3cnfs(o.vars, o.clauses));
      else
        add(random_3cnfs(o.vars, o.clauses, o.count, o.seed));
      break;
    case Family::pwsat:
    case Family::pwsat_u:
      if (o.exhaustive)
        add(all_pwsat(o.vars, o.clauses, o.partitions));
      else
        add(random_pwsat(o.vars, o.clauses, o.partitions, o.count, o.seed));
      break;
    case Family::sqtile_x:
    case Family::sqtile_f:
    case Family::sqtile_g:
    case Family::sqtile_u:
      if (o.exhaustive)
        add(all_square_tilings(o.colors, o.tiles, o.k));
      else
        add(random_square_tilings(o.colors, o.tiles, o.k, o.count, o.seed));
      break;
    case Family::recttile_xf:
    case Family::recttile_u:
      if (o.exhaustive)
        add(all_rect_tilings(o.colors, o.tiles));
      else
        add(random_rect_tilings(o.colors, o.tiles, o.count, o.seed));
      break;
  }
  return out;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Oracle answer and whether its witness re-validates.
std::pair<bool, bool> run_oracle(const Instance& inst) {
  if (auto* c = std::get_if<Cnf3>(&inst)) {
    Cnf cnf = c->to_cnf();
    auto a = solve_cnf(cnf);
    return {a.has_value(), !a || satisfies(cnf, *a)};
  }
  if (auto* p = std::get_if<PwSatInstance>(&inst)) {
    auto a = solve_pwsat(*p);
    return {a.has_value(), !a || (satisfies(p->cnf, *a) && is_saturated(*p, *a))};
  }
  if (auto* s = std::get_if<SquareTilingInstance>(&inst)) {
    auto t = solve_square_tiling(*s);
    return {t.has_value(), !t || is_valid_square_tiling(*s, *t)};
  }
  const auto& r = std::get<RectTilingInstance>(inst);
  auto t = solve_rect_tiling(r);
  return {t.has_value(), !t || is_valid_rect_tiling(r, *t)};
}

ReductionOutput run_reduction(Family f, const Instance& inst, const ReductionOptions& opt) {
  switch (f) {
    case Family::pwsat:
      return reduce_pwsat_to_sat(std::get<PwSatInstance>(inst), {Temporal::F, Temporal::G}, opt);
    case Family::pwsat_u:
      return reduce_pwsat_to_sat(std::get<PwSatInstance>(inst), {Temporal::U}, opt);
    case Family::sat3_f:
      return reduce_3sat_to_mc(std::get<Cnf3>(inst), Temporal::F, opt);
    case Family::sat3_x:
      return reduce_3sat_to_mc(std::get<Cnf3>(inst), Temporal::X, opt);
    case Family::sqtile_x:
      return reduce_sqtiling_to_mc_x(std::get<SquareTilingInstance>(inst), opt);
    case Family::sqtile_f:
      return reduce_sqtiling_to_mc_t(std::get<SquareTilingInstance>(inst), Temporal::F, opt);
    case Family::sqtile_g:
      return reduce_sqtiling_to_mc_t(std::get<SquareTilingInstance>(inst), Temporal::G, opt);
    case Family::sqtile_u:
      return reduce_sqtiling_to_mc_t(std::get<SquareTilingInstance>(inst), Temporal::U, opt);
    case Family::recttile_xf:
      return reduce_recttiling_to_mc_xf(std::get<RectTilingInstance>(inst), opt);
    case Family::recttile_u:
      return reduce_recttiling_to_mc_u(std::get<RectTilingInstance>(inst), opt);
  }
  throw Error("unknown family");
}

// Target answer and whether the checker's witness re-validates.
std::pair<bool, bool> run_checker(const ReductionOutput& out) {
  if (out.target == ReductionOutput::Target::sat) {
    auto w = sat(out.formula);
    if (!w) return {false, true};
    return {true, is_valid_lasso(w->structure, w->lasso) &&
                      eval_on_lasso(w->structure, w->lasso, out.formula)};
  }
  const McInstance& mc = *out.mc;
  UniversalChecker checker(mc.formula);
  auto cex = checker.counterexample(mc.structure, mc.world);
  if (!cex) return {true, true};
  bool ok = is_valid_lasso(mc.structure, *cex) && cex->at(0) == mc.world &&
            !eval_on_lasso(mc.structure, *cex, mc.formula);
  return {false, ok};
}

}  // namespace

Family parse_family(const std::string& name) {
  for (const auto& f : kFamilies)
    if (name == f.name) return f.family;
  throw Error("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  for (const auto& x : kFamilies)
    if (x.family == f) return x.name;
  return "?";
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& f : kFamilies) out.push_back(f.family);
  return out;
}

std::vector<Cnf3> all_3cnfs(int max_vars, int max_clauses) {
  std::vector<Cnf3> out;
  for (int n = 1; n <= max_vars; ++n) {
    std::vector<int> lits;
    for (int v = 1; v <= n; ++v) {
      lits.push_back(v);
      lits.push_back(-v);
    }
    std::vector<std::array<int, 3>> clauses;
    multisets(static_cast<int>(lits.size()), 3, [&](const std::vector<int>& idx) {
      clauses.push_back({lits[idx[0]], lits[idx[1]], lits[idx[2]]});
    });
    for (int m = 1; m <= max_clauses; ++m)
      multisets(static_cast<int>(clauses.size()), m, [&](const std::vector<int>& idx) {
        Cnf3 c;
        c.num_vars = n;
        for (int i : idx) c.clauses.push_back(clauses[i]);
        out.push_back(std::move(c));
      });
  }
  return out;
}

std::vector<PwSatInstance> all_pwsat(int max_vars, int max_clauses, int max_k) {
  std::vector<PwSatInstance> out;
  for (int n = 1; n <= max_vars; ++n) {
    // Each variable is absent, positive or negative in a clause.
    std::vector<std::vector<int>> clauses;
    for (int code = 1; code < pow_int(3, n); ++code) {
      std::vector<int> clause;
      int c = code;
      for (int v = 1; v <= n; ++v, c /= 3) {
        if (c % 3 == 1) clause.push_back(v);
        if (c % 3 == 2) clause.push_back(-v);
      }
      clauses.push_back(clause);
    }
    std::vector<std::vector<std::vector<int>>> clause_sets;
    for (int m = 1; m <= max_clauses; ++m)
      combinations(static_cast<int>(clauses.size()), m, [&](const std::vector<int>& idx) {
        std::vector<std::vector<int>> set;
        for (int i : idx) set.push_back(clauses[i]);
        clause_sets.push_back(std::move(set));
      });
    // Restricted growth strings give partitions with blocks ordered by minimum.
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> grow = [&](int v, int blocks) {
      if (v == n) {
        if (blocks > max_k) return;
        std::vector<std::vector<int>> parts(blocks);
        for (int i = 0; i < n; ++i) parts[rgs[i]].push_back(i + 1);
        partitions.push_back(std::move(parts));
        return;
      }
      for (int b = 0; b <= std::min(blocks, max_k - 1); ++b) {
        rgs[v] = b;
        grow(v + 1, std::max(blocks, b + 1));
      }
    };
    grow(0, 0);
    std::stable_sort(partitions.begin(), partitions.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& set : clause_sets)
      for (const auto& parts : partitions) {
        int k = static_cast<int>(parts.size());
        std::vector<int> caps(k, 0);
        while (true) {
          PwSatInstance inst;
          inst.cnf.num_vars = n;
          inst.cnf.clauses = set;
          inst.partitions = parts;
          inst.capacities = caps;
          out.push_back(std::move(inst));
          int p = k - 1;
          while (p >= 0 && caps[p] == static_cast<int>(parts[p].size())) caps[p--] = 0;
          if (p < 0) break;
          ++caps[p];
        }
      }
  }
  return out;
}

std::vector<SquareTilingInstance> all_square_tilings(int colors, int max_tiles, int k) {
  std::vector<SquareTilingInstance> out;
  for (auto& set : tile_sets(colors, max_tiles)) out.push_back({color_names(colors), std::move(set), k});
  return out;
}

std::vector<RectTilingInstance> all_rect_tilings(int colors, int max_tiles) {
  std::vector<RectTilingInstance> out;
  for (const auto& set : tile_sets(colors, max_tiles))
    for (int c0 = 0; c0 < colors; ++c0)
      for (int c1 = 0; c1 < colors; ++c1) out.push_back({color_names(colors), set, c0, c1});
  return out;
}

std::vector<Cnf3> random_3cnfs(int vars, int clauses, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Cnf3> out;
  for (int i = 0; i < count; ++i) {
    Cnf3 c;
    c.num_vars = vars;
    for (int j = 0; j < clauses; ++j) {
      std::array<int, 3> cl{};
      for (int& l : cl) {
        int v = 1 + static_cast<int>(rng() % vars);
        l = rng() % 2 ? v : -v;
      }
      c.clauses.push_back(cl);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PwSatInstance> random_pwsat(int vars, int clauses, int k, int count, std::uint64_t seed) {
  if (k > vars) throw InvalidInstance("more partitions than variables");
  std::mt19937_64 rng(seed);
  std::vector<PwSatInstance> out;
  for (int i = 0; i < count; ++i) {
    PwSatInstance inst;
    inst.cnf.num_vars = vars;
    for (int j = 0; j < clauses; ++j) {
      int len = 1 + static_cast<int>(rng() % std::min(3, vars));
      std::set<int> used;
      std::vector<int> cl;
      while (static_cast<int>(cl.size()) < len) {
        int v = 1 + static_cast<int>(rng() % vars);
        if (!used.insert(v).second) continue;
        cl.push_back(rng() % 2 ? v : -v);
      }
      inst.cnf.clauses.push_back(cl);
    }
    std::vector<int> order(vars);
    for (int v = 0; v < vars; ++v) order[v] = v + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> owner(vars + 1);
    for (int j = 0; j < vars; ++j) owner[order[j]] = j < k ? j : static_cast<int>(rng() % k);
    inst.partitions.assign(k, {});
    for (int v = 1; v <= vars; ++v) inst.partitions[owner[v]].push_back(v);
    // Renumber blocks by their smallest variable.
    std::sort(inst.partitions.begin(), inst.partitions.end());
    for (const auto& p : inst.partitions)
      inst.capacities.push_back(static_cast<int>(rng() % (p.size() + 1)));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<SquareTilingInstance> random_square_tilings(int colors, int tiles, int k, int count,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SquareTilingInstance> out;
  for (int i = 0; i < count; ++i) out.push_back({color_names(colors), random_tile_set(colors, tiles, rng), k});
  return out;
}

std::vector<RectTilingInstance> random_rect_tilings(int colors, int tiles, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RectTilingInstance> out;
  for (int i = 0; i < count; ++i) {
    auto set = random_tile_set(colors, tiles, rng);
    int c0 = static_cast<int>(rng() % colors);
    int c1 = static_cast<int>(rng() % colors);
    out.push_back({color_names(colors), std::move(set), c0, c1});
  }
  return out;
}

int VerifyReport::disagreements() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.agree; }));
}

int VerifyReport::invalid_witnesses() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.witness_ok; }));
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  const bool sat_target = family == Family::pwsat || family == Family::pwsat_u;
  for (const auto& r : rows) {
    std::string target = sat_target ? (r.target ? "sat" : "unsat") : (r.target ? "true" : "false");
    os << "row " << r.index << " source=" << (r.source ? "yes" : "no") << " target=" << target
       << " agree=" << (r.agree ? 1 : 0) << " witness=" << (r.witness_ok ? "ok" : "bad") << " "
       << r.cert.line().substr(5) << " instance=" << r.instance << "\n";
  }
  os << "summary family=" << family_name(family) << " instances=" << rows.size()
     << " agree=" << rows.size() - disagreements() << " disagree=" << disagreements()
     << " invalid-witness=" << invalid_witnesses() << "\n";
  return os.str();
}

std::string VerifyReport::timings() const {
  std::ostringstream os;
  double o = 0, r = 0, c = 0;
  for (const auto& row : rows) {
    o += row.oracle_ms;
    r += row.reduce_ms;
    c += row.check_ms;
  }
  os << "time family=" << family_name(family) << " oracle_ms=" << o << " reduce_ms=" << r
     << " check_ms=" << c << "\n";
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& opt) {
  VerifyReport report;
  report.family = opt.family;
  auto instances = instances_for(opt);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    VerifyRow row;
    row.index = static_cast<int>(i);
    row.instance = describe(instances[i]);

    auto t0 = Clock::now();
    auto [source, oracle_ok] = run_oracle(instances[i]);
    row.oracle_ms = ms_since(t0);

    t0 = Clock::now();
    ReductionOutput out = run_reduction(opt.family, instances[i], opt.reduction);
    row.reduce_ms = ms_since(t0);

    t0 = Clock::now();
    auto [target, check_ok] = run_checker(out);
    row.check_ms = ms_since(t0);

    bool decomposition_ok = out.witness && check_decomposition(witness_graph(out), *out.witness).empty() &&
                            width(*out.witness) == out.cert.width;
    row.source = source;
    row.target = target;
    row.agree = source_answer_from_target(out, target) == source;
    row.witness_ok = oracle_ok && check_ok && decomposition_ok;
    row.cert = out.cert;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ltlwb::cli
