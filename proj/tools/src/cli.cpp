#include "ltlwb/cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ltlwb/checker.hpp"
#include "ltlwb/cli/verify.hpp"
#include "ltlwb/cnf.hpp"
#include "ltlwb/errors.hpp"
#include "ltlwb/formula.hpp"
#include "ltlwb/graph.hpp"
#include "ltlwb/instances.hpp"
#include "ltlwb/kripke.hpp"
#include "ltlwb/oracles.hpp"
#include "ltlwb/reductions.hpp"

namespace ltlwb::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

// A formula argument names a file when one exists at that path, otherwise it
// is the formula text itself.
Formula formula_arg(const std::string& arg) {
  if (fs::is_regular_file(arg)) return parse_formula(read_file(arg));
  return parse_formula(arg);
}

bool looks_like_kripke(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string w;
    if (!(words >> w)) continue;
    return w == "world" || w == "edge" || w == "init";
  }
  return false;
}

std::string widths(const Graph& g, int limit) {
  if (g.num_vertices() <= limit) {
    int tw = exact_treewidth(g, limit).width;
    int pw = exact_pathwidth(g, limit).width;
    return "tw=" + std::to_string(tw) + " pw=" + std::to_string(pw);
  }
  int tw = minfill_upper(g).width;
  int pw = greedy_path_upper(g).width;
  return "tw<=" + std::to_string(tw) + " pw<=" + std::to_string(pw) + " upper-bound";
}

void analyze_formula(const Formula& f, int limit, std::ostream& out) {
  out << "td=" << temporal_depth(f) << " nvar=" << nvar(f) << " fragment=" << fragment_of(f).to_string()
      << " " << widths(syntax_graph(f), limit) << "\n";
}

int cmd_analyze(const std::string& input, int limit, std::ostream& out) {
  if (!fs::is_regular_file(input)) {
    analyze_formula(parse_formula(input), limit, out);
    return kExitOk;
  }
  std::string text = read_file(input);
  if (!looks_like_kripke(text)) {
    analyze_formula(parse_formula(text), limit, out);
    return kExitOk;
  }
  KripkeStructure s = parse_kripke(text);
  auto bad = validate_structure(s);
  if (!bad.empty()) throw InvalidInstance("structure: " + bad.front().detail);
  out << "worlds=" << s.num_worlds() << " delta=" << branching_degree(s) << " "
      << widths(structure_graph(s), limit) << "\n";
  return kExitOk;
}

ReductionOutput reduce_family(const std::string& family, const std::string& text, FragmentSet pwsat_target,
                              const ReductionOptions& opt) {
  if (family == "pwsat") return reduce_pwsat_to_sat(parse_pwsat(text), pwsat_target, opt);
  if (family == "3sat-f") return reduce_3sat_to_mc(to_cnf3(parse_dimacs(text)), Temporal::F, opt);
  if (family == "3sat-x") return reduce_3sat_to_mc(to_cnf3(parse_dimacs(text)), Temporal::X, opt);
  if (family == "sqtile-x") return reduce_sqtiling_to_mc_x(parse_square_tiling(text), opt);
  if (family == "sqtile-f") return reduce_sqtiling_to_mc_t(parse_square_tiling(text), Temporal::F, opt);
  if (family == "sqtile-g") return reduce_sqtiling_to_mc_t(parse_square_tiling(text), Temporal::G, opt);
  if (family == "sqtile-u") return reduce_sqtiling_to_mc_t(parse_square_tiling(text), Temporal::U, opt);
  if (family == "recttile-xf") return reduce_recttiling_to_mc_xf(parse_rect_tiling(text), opt);
  if (family == "recttile-u") return reduce_recttiling_to_mc_u(parse_rect_tiling(text), opt);
  throw Error("unknown family '" + family + "'");
}

int cmd_reduce(const std::string& family, const std::string& input, const std::string& outdir,
               const std::string& target, const ReductionOptions& opt, std::ostream& out) {
  ReductionOutput r = reduce_family(family, read_file(input), FragmentSet::parse(target), opt);
  fs::create_directories(outdir);
  fs::path dir(outdir);
  write_file(dir / "formula.ltl", to_string(r.formula) + "\n");
  if (r.mc) write_file(dir / "structure.kripke", write_kripke(r.mc->structure));
  std::string header = r.witness_of == ReductionOutput::WitnessOf::formula ? "# graph: syntax\n"
                                                                          : "# graph: structure\n";
  write_file(dir / "witness.dec", header + write_decomposition(*r.witness));
  write_file(dir / "cert.txt", r.cert.line() + "\n");
  out << r.cert.line() << "\n";
  return kExitOk;
}

struct CheckArgs {
  std::string mode;
  std::vector<std::string> files;
  std::string world;
  int bound = 12;
  std::string witness;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const bool needs_structure = a.mode == "mc" || a.mode == "brute" || a.mode == "mc-x";
  const bool sat_mode = a.mode == "sat" || a.mode == "sat-x";
  if (!needs_structure && !sat_mode) throw Error("unknown check mode '" + a.mode + "'");
  if (a.files.size() != (needs_structure ? 2u : 1u))
    throw Error(needs_structure ? "expected <structure> <formula>" : "expected <formula>");

  if (sat_mode) {
    Formula f = formula_arg(a.files[0]);
    if (a.mode == "sat-x") {
      out << (sat_x(f) ? "sat" : "unsat") << "\n";
      return kExitOk;
    }
    auto w = sat(f);
    out << (w ? "sat" : "unsat") << "\n";
    if (w && !a.witness.empty()) {
      write_file(a.witness, write_lasso(w->structure, w->lasso));
      write_file(a.witness + ".kripke", write_kripke(w->structure));
    }
    return kExitOk;
  }

  KripkeStructure s = parse_kripke(read_file(a.files[0]));
  auto bad = validate_structure(s);
  if (!bad.empty()) throw InvalidInstance("structure: " + bad.front().detail);
  Formula f = formula_arg(a.files[1]);
  WorldId w = s.init();
  if (!a.world.empty()) {
    auto found = s.find_world(a.world);
    if (!found) throw Error("unknown world '" + a.world + "'");
    w = *found;
  }
  if (w < 0) throw InvalidInstance("structure has no initial world");
  if (a.mode == "mc-x") {
    out << (mc_x_bounded(s, w, f) ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (a.mode == "brute") {
    out << (brute_mc(s, w, f, a.bound) ? "true" : "false") << "\n";
    return kExitOk;
  }
  UniversalChecker checker(f);
  auto cex = checker.counterexample(s, w);
  out << (cex ? "false" : "true") << "\n";
  if (cex && !a.witness.empty()) write_file(a.witness, write_lasso(s, *cex));
  return kExitOk;
}

int cmd_oracle(const std::string& problem, const std::string& input, long bound, std::ostream& out) {
  std::string text = read_file(input);
  if (problem == "cnf") {
    auto a = solve_cnf(parse_dimacs(text));
    out << (a ? "sat\n" + write_assignment(*a) : "unsat\n");
    return kExitOk;
  }
  if (problem == "pwsat") {
    auto a = solve_pwsat(parse_pwsat(text));
    out << (a ? "sat\n" + write_assignment(*a) : "unsat\n");
    return kExitOk;
  }
  if (problem == "sqtile") {
    auto t = solve_square_tiling(parse_square_tiling(text));
    out << (t ? "yes\n" + write_tiling(*t) : "no\n");
    return kExitOk;
  }
  if (problem == "recttile") {
    auto t = solve_rect_tiling(parse_rect_tiling(text), bound);
    if (t)
      out << "yes\nm " << t->height << "\n" << write_tiling(*t);
    else
      out << "no\n";
    return kExitOk;
  }
  throw Error("unknown oracle problem '" + problem + "'");
}

struct VerifyArgs {
  std::string family;
  bool exhaustive = false;
  std::vector<std::string> bounds;
  std::map<std::string, long> flags;
  std::string mutate = "none";
  bool as_printed = false;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  o.family = parse_family(a.family);
  o.exhaustive = a.exhaustive;
  std::map<std::string, long> values = a.flags;
  for (const auto& kv : a.bounds) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error("expected key=value, got '" + kv + "'");
    std::size_t used = 0;
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    long v = 0;
    try {
      v = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw Error("bad value in '" + kv + "'");
    values[key] = v;
  }
  for (const auto& [key, v] : values) {
    if (key == "vars") o.vars = static_cast<int>(v);
    else if (key == "clauses") o.clauses = static_cast<int>(v);
    else if (key == "partitions") o.partitions = static_cast<int>(v);
    else if (key == "colors") o.colors = static_cast<int>(v);
    else if (key == "tiles") o.tiles = static_cast<int>(v);
    else if (key == "k") o.k = static_cast<int>(v);
    else if (key == "count") o.count = static_cast<int>(v);
    else if (key == "seed") o.seed = static_cast<std::uint64_t>(v);
    else throw Error("unknown bound '" + key + "'");
  }
  if (o.vars < 1 || o.clauses < 1 || o.partitions < 1 || o.colors < 1 || o.tiles < 1 || o.k < 1 ||
      o.count < 0)
    throw Error("bounds must be positive");
  if (a.mutate == "drop-conjunct")
    o.reduction.mutation = Mutation::drop_conjunct;
  else if (a.mutate != "none")
    throw Error("unknown mutation '" + a.mutate + "'");
  if (a.as_printed) o.reduction.fidelity = Fidelity::as_printed;

  VerifyReport report = run_verify(o);
  out << report.text();
  if (a.timings)
    for (const auto& r : report.rows)
      err << "time row=" << r.index << " oracle_ms=" << r.oracle_ms << " reduce_ms=" << r.reduce_ms
          << " check_ms=" << r.check_ms << "\n";
  err << report.timings();
  return report.passed() ? kExitOk : kExitDisagreement;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal logic workbench: analysis, checking, reductions and verification", "ltlwb"};
  app.require_subcommand(1);

  std::string analyze_input;
  int limit = kDefaultExactLimit;
  auto* analyze = app.add_subcommand("analyze", "Print parameters and widths of a formula or structure");
  analyze->add_option("input", analyze_input, "Formula file, structure file or formula text")->required();
  analyze->add_option("--limit", limit, "Largest graph handed to the exact width solvers");

  std::string family, input, outdir, target = "FG", mutate = "none";
  bool as_printed = false;
  auto* reduce = app.add_subcommand("reduce", "Reduce a source instance and write the target files");
  reduce->add_option("family", family,
                     "pwsat|3sat-f|3sat-x|sqtile-x|sqtile-f|sqtile-g|sqtile-u|recttile-xf|recttile-u")
      ->required();
  reduce->add_option("input", input, "Instance file")->required();
  reduce->add_option("outdir", outdir, "Output directory")->required();
  reduce->add_option("--target", target, "Operator set of the pwsat formula (FG, F, G or U)");
  reduce->add_option("--mutate", mutate, "none|drop-conjunct");
  reduce->add_flag("--as-printed", as_printed, "Emit the constructions without repairs");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Model checking and satisfiability");
  check->add_option("mode", check_args.mode, "mc|sat|brute|mc-x|sat-x")->required();
  check->add_option("files", check_args.files, "[structure] formula (file or text)")->required();
  check->add_option("--world", check_args.world, "Start world (default: the initial world)");
  check->add_option("--bound", check_args.bound, "Lasso length bound for brute");
  check->add_option("--witness", check_args.witness, "Write the witness lasso to this path");

  std::string problem, oracle_input;
  long bound = -1;
  auto* oracle = app.add_subcommand("oracle", "Solve a source instance by brute force");
  oracle->add_option("problem", problem, "cnf|pwsat|sqtile|recttile")->required();
  oracle->add_option("input", oracle_input, "Instance file")->required();
  oracle->add_option("--bound", bound, "Height bound for recttile (default |D|^n+1)");

  VerifyArgs va;
  std::map<std::string, int> int_flags{{"vars", 0},  {"clauses", 0}, {"partitions", 0}, {"colors", 0},
                                       {"tiles", 0}, {"k", 0},       {"count", 0}};
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Check a reduction family against the oracles");
  verify->add_option("family", va.family, "Reduction family; pwsat-u uses the U-only formula")->required();
  verify->add_option("bounds", va.bounds, "key=value bounds (vars, clauses, partitions, colors, tiles, k, "
                                          "count, seed)");
  verify->add_flag("--exhaustive", va.exhaustive, "Enumerate all instances within the bounds");
  std::map<std::string, CLI::Option*> flag_opts;
  for (auto& [name, value] : int_flags)
    flag_opts[name] = verify->add_option("--" + name, value, "Bound " + name);
  auto* seed_opt = verify->add_option("--seed", seed, "Seed of the random family");
  verify->add_option("--mutate", va.mutate, "none|drop-conjunct");
  verify->add_flag("--as-printed", va.as_printed, "Use the constructions without repairs");
  verify->add_flag("--timings", va.timings, "Per-row timings on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_input, limit, out);
    if (*reduce) {
      ReductionOptions opt;
      if (mutate == "drop-conjunct")
        opt.mutation = Mutation::drop_conjunct;
      else if (mutate != "none")
        throw Error("unknown mutation '" + mutate + "'");
      if (as_printed) opt.fidelity = Fidelity::as_printed;
      return cmd_reduce(family, input, outdir, target, opt, out);
    }
    if (*check) return cmd_check(check_args, out);
    if (*oracle) return cmd_oracle(problem, oracle_input, bound, out);
    if (*verify) {
      for (auto& [name, opt] : flag_opts)
        if (opt->count() > 0) va.flags[name] = int_flags[name];
      if (seed_opt->count() > 0) va.flags["seed"] = static_cast<long>(seed);
      return cmd_verify(va, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ltlwb::cli
