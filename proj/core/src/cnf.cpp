#include "ltlwb/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "ltlwb/errors.hpp"

namespace ltlwb {

Cnf Cnf3::to_cnf() const {
  Cnf c;
  c.num_vars = num_vars;
  for (const auto& cl : clauses) c.clauses.emplace_back(cl.begin(), cl.end());
  return c;
}

Cnf3 to_cnf3(const Cnf& c) {
  Cnf3 out;
  out.num_vars = c.num_vars;
  for (const auto& cl : c.clauses) {
    if (cl.size() != 3) throw InvalidInstance("clause does not have exactly 3 literals");
    out.clauses.push_back({cl[0], cl[1], cl[2]});
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  Cnf c;
  bool header = false;
  int declared = 0;
  std::vector<int> cur;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    std::size_t offset = pos;
    pos = end + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string first;
    if (!(in >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string fmt;
      if (header || !(in >> fmt >> c.num_vars >> declared) || fmt != "cnf" || c.num_vars < 0 ||
          declared < 0)
        throw ParseError("bad problem line", offset);
      header = true;
      continue;
    }
    if (first == "partition" || first == "capacity") continue;
    if (!header) throw ParseError("clause before problem line", offset);
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      char* stop = nullptr;
      long v = std::strtol(tok.c_str(), &stop, 10);
      if (*stop != '\0') throw ParseError("bad literal '" + tok + "'", offset);
      if (v == 0) {
        c.clauses.push_back(cur);
        cur.clear();
        continue;
      }
      if (std::labs(v) > c.num_vars) throw ParseError("literal out of range", offset);
      cur.push_back(static_cast<int>(v));
    }
  }
  if (!header) throw ParseError("missing problem line", 0);
  if (!cur.empty()) c.clauses.push_back(cur);
  if (static_cast<int>(c.clauses.size()) != declared)
    throw ParseError("clause count does not match problem line", 0);
  return c;
}

std::string write_dimacs(const Cnf& c) {
  std::string out = "p cnf " + std::to_string(c.num_vars) + " " + std::to_string(c.clauses.size()) + "\n";
  for (const auto& cl : c.clauses) {
    for (int l : cl) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

bool satisfies(const Cnf& c, const std::vector<bool>& a) {
  for (const auto& cl : c.clauses) {
    bool ok = false;
    for (int l : cl)
      if (a[std::abs(l) - 1] == (l > 0)) ok = true;
    if (!ok) return false;
  }
  return true;
}

Formula cnf_formula(const Cnf& c, const std::string& prefix) {
  std::vector<Formula> clauses;
  for (const auto& cl : c.clauses) {
    std::vector<Formula> lits;
    for (int l : cl) {
      Formula p = Formula::prop(prefix + std::to_string(std::abs(l)));
      lits.push_back(l > 0 ? p : Formula::neg(p));
    }
    clauses.push_back(disj_all(lits));
  }
  return conj_all(clauses);
}

}  // namespace ltlwb
