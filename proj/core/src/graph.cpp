#include "ltlwb/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ltlwb/errors.hpp"

namespace ltlwb {

int Graph::add_vertex(std::string role) {
  roles_.push_back(std::move(role));
  adj_.emplace_back();
  return num_vertices() - 1;
}

void Graph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
    throw Error("edge references unknown vertex");
  if (a == b || has_edge(a, b)) return;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  ++num_edges_;
}

bool Graph::has_edge(int a, int b) const {
  const auto& small = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  int other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::find(small.begin(), small.end(), other) != small.end();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_vertices(); ++a)
    for (int b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition Decomposition::path(std::vector<std::vector<int>> bags) {
  Decomposition d;
  d.shape = Shape::path;
  d.bags = std::move(bags);
  for (int i = 0; i + 1 < static_cast<int>(d.bags.size()); ++i) d.links.emplace_back(i, i + 1);
  return d;
}

namespace {

std::string_view role_of(Op op) {
  switch (op) {
    case Op::prop: return "prop";
    case Op::top: return "true";
    case Op::bottom: return "false";
    case Op::neg: return "not";
    case Op::conj: return "and";
    case Op::disj: return "or";
    case Op::implies: return "implies";
    case Op::next: return "X";
    case Op::finally: return "F";
    case Op::globally: return "G";
    case Op::until: return "U";
  }
  return "?";
}

}  // namespace

std::vector<DecompositionViolation> check_decomposition(const Graph& g, const Decomposition& d) {
  using K = DecompositionViolation::Kind;
  std::vector<DecompositionViolation> out;
  int nb = static_cast<int>(d.bags.size());
  if (nb == 0) {
    out.push_back({K::bad_shape, -1, -1, "no bags"});
    return out;
  }
  std::vector<std::vector<int>> link_adj(nb);
  bool links_ok = true;
  for (auto [a, b] : d.links) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
      out.push_back({K::bad_shape, a, b, "link references unknown bag"});
      links_ok = false;
      continue;
    }
    link_adj[a].push_back(b);
    link_adj[b].push_back(a);
  }
  if (links_ok) {
    if (static_cast<int>(d.links.size()) != nb - 1) {
      out.push_back({K::bad_shape, -1, -1, "links do not form a tree"});
      links_ok = false;
    } else {
      std::vector<char> seen(nb, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : link_adj[x])
          if (!seen[y]) {
            seen[y] = 1;
            ++count;
            stack.push_back(y);
          }
      }
      if (count != nb) {
        out.push_back({K::bad_shape, -1, -1, "links do not form a tree"});
        links_ok = false;
      }
    }
    if (links_ok && d.shape == Decomposition::Shape::path) {
      for (int i = 0; i < nb; ++i)
        if (link_adj[i].size() > 2) {
          out.push_back({K::bad_shape, i, -1, "links do not form a path"});
          links_ok = false;
          break;
        }
    }
  }

  int n = g.num_vertices();
  std::vector<std::vector<int>> where(n);
  for (int i = 0; i < nb; ++i) {
    std::set<int> uniq;
    for (int v : d.bags[i]) {
      if (v < 0 || v >= n) {
        out.push_back({K::bad_vertex, v, i, "bag " + std::to_string(i) + " has unknown vertex"});
        continue;
      }
      if (uniq.insert(v).second) where[v].push_back(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (where[v].empty()) out.push_back({K::missing_vertex, v, -1, "vertex in no bag"});

  std::vector<int> mark(nb, -1);
  for (auto [a, b] : g.edges()) {
    for (int i : where[a]) mark[i] = a;
    bool found = false;
    for (int i : where[b])
      if (mark[i] == a) found = true;
    for (int i : where[a]) mark[i] = -1;
    if (!found) out.push_back({K::uncovered_edge, a, b, "edge in no bag"});
  }

  if (links_ok) {
    std::vector<char> in(nb, 0), seen(nb, 0);
    for (int v = 0; v < n; ++v) {
      if (where[v].size() <= 1) continue;
      for (int i : where[v]) in[i] = 1;
      std::vector<int> stack{where[v][0]};
      seen[where[v][0]] = 1;
      std::size_t count = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : link_adj[x])
          if (in[y] && !seen[y]) {
            seen[y] = 1;
            ++count;
            stack.push_back(y);
          }
      }
      if (count != where[v].size())
        out.push_back({K::disconnected, v, -1, "bags containing vertex are not connected"});
      for (int i : where[v]) in[i] = seen[i] = 0;
    }
  }
  return out;
}

int width(const Decomposition& d) {
  if (d.bags.empty()) throw Error("empty decomposition");
  std::size_t m = 0;
  for (const auto& b : d.bags) {
    std::set<int> uniq(b.begin(), b.end());
    m = std::max(m, uniq.size());
  }
  return m == 0 ? 0 : static_cast<int>(m) - 1;
}

Decomposition interval_fill(std::vector<std::vector<int>> bags) {
  std::map<int, std::pair<int, int>> span;
  for (int i = 0; i < static_cast<int>(bags.size()); ++i)
    for (int v : bags[i]) {
      auto it = span.find(v);
      if (it == span.end())
        span[v] = {i, i};
      else
        it->second.second = i;
    }
  std::vector<std::vector<int>> out(bags.size());
  for (auto& [v, s] : span)
    for (int i = s.first; i <= s.second; ++i) out[i].push_back(v);
  return Decomposition::path(std::move(out));
}

Decomposition pad_path(Decomposition d, int target) {
  if (d.shape != Decomposition::Shape::path) throw Error("pad_path: path decomposition required");
  if (d.bags.empty() || width(d) >= target) return d;
  const int nb = static_cast<int>(d.bags.size());
  int m = 0;
  for (int i = 1; i < nb; ++i)
    if (d.bags[i].size() > d.bags[m].size()) m = i;
  auto has = [&](int i, int v) {
    return std::find(d.bags[i].begin(), d.bags[i].end(), v) != d.bags[i].end();
  };
  // Nearest bags first; every vertex found at distance r is absent from the
  // bags strictly between it and m, so the whole gap is filled.
  for (int r = 1; r < nb && static_cast<int>(d.bags[m].size()) < target + 1; ++r) {
    for (int side : {-1, 1}) {
      int j = m + side * r;
      if (j < 0 || j >= nb) continue;
      std::vector<int> cand;
      for (int v : d.bags[j])
        if (!has(m, v)) cand.push_back(v);
      std::sort(cand.begin(), cand.end());
      for (int v : cand) {
        if (static_cast<int>(d.bags[m].size()) >= target + 1) break;
        if (has(m, v)) continue;
        for (int i = std::min(j, m); i <= std::max(j, m); ++i)
          if (!has(i, v)) d.bags[i].push_back(v);
      }
    }
  }
  for (auto& b : d.bags) std::sort(b.begin(), b.end());
  return d;
}

SyntaxGraph syntax_graph_indexed(const Formula& f) {
  SyntaxGraph sg;
  std::function<int(const Formula&)> visit = [&](const Formula& x) -> int {
    if (x.op() == Op::prop) {
      auto it = sg.prop_vertex.find(x.name());
      if (it != sg.prop_vertex.end()) {
        sg.vertex_of.emplace(x.node_id(), it->second);
        return it->second;
      }
      int v = sg.graph.add_vertex("prop:" + x.name());
      sg.prop_vertex[x.name()] = v;
      sg.vertex_of.emplace(x.node_id(), v);
      return v;
    }
    int v = sg.graph.add_vertex(std::string(role_of(x.op())));
    sg.vertex_of.emplace(x.node_id(), v);
    if (x.arity() >= 1) sg.graph.add_edge(v, visit(x.lhs()));
    if (x.arity() == 2) sg.graph.add_edge(v, visit(x.rhs()));
    return v;
  };
  visit(f);
  return sg;
}

Graph syntax_graph(const Formula& f) { return syntax_graph_indexed(f).graph; }

Graph primal_graph(const Cnf& c) {
  Graph g;
  for (int i = 1; i <= c.num_vars; ++i) g.add_vertex("x" + std::to_string(i));
  for (const auto& cl : c.clauses)
    for (std::size_t a = 0; a < cl.size(); ++a)
      for (std::size_t b = a + 1; b < cl.size(); ++b)
        g.add_edge(std::abs(cl[a]) - 1, std::abs(cl[b]) - 1);
  return g;
}

Graph incidence_graph(const Cnf& c) {
  Graph g;
  for (int i = 1; i <= c.num_vars; ++i) g.add_vertex("x" + std::to_string(i));
  for (std::size_t j = 0; j < c.clauses.size(); ++j) {
    int v = g.add_vertex("c" + std::to_string(j + 1));
    for (int l : c.clauses[j]) g.add_edge(v, std::abs(l) - 1);
  }
  return g;
}

Graph structure_graph(const KripkeStructure& s) {
  Graph g;
  for (int w = 0; w < s.num_worlds(); ++w) g.add_vertex(s.world_name(w));
  for (auto [a, b] : s.edges()) g.add_edge(a, b);
  return g;
}

bool incidence_minor_check(const Cnf& c) {
  for (const auto& cl : c.clauses)
    if (cl.size() < 2) throw Error("minor recipe needs clauses with at least two literals");
  Formula f = cnf_formula(c, "x");
  SyntaxGraph sg = syntax_graph_indexed(f);
  const Graph& g = sg.graph;
  // Class label per syntax vertex; empty means deleted.
  std::vector<std::string> cls(g.num_vertices());
  std::function<void(const Formula&, const std::string&)> clause = [&](const Formula& x,
                                                                      const std::string& name) {
    int v = sg.vertex_of.at(x.node_id());
    if (x.op() == Op::disj) {
      cls[v] = name;
      clause(x.lhs(), name);
      clause(x.rhs(), name);
    } else if (x.op() == Op::neg && x.child().op() == Op::prop) {
      cls[v] = x.child().name();
      cls[sg.vertex_of.at(x.child().node_id())] = x.child().name();
    } else if (x.op() == Op::prop) {
      cls[v] = x.name();
    } else {
      throw Error("formula is not CNF-shaped");
    }
  };
  std::vector<Formula> clauses;
  Formula spine = f;
  for (std::size_t j = c.clauses.size(); j > 1; --j) {
    clauses.push_back(spine.rhs());
    spine = spine.lhs();
  }
  clauses.push_back(spine);
  std::reverse(clauses.begin(), clauses.end());
  for (std::size_t j = 0; j < clauses.size(); ++j) clause(clauses[j], "c" + std::to_string(j + 1));

  // Each class must induce a connected subgraph so that it can be contracted.
  std::map<std::string, std::vector<int>> members;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!cls[v].empty()) members[cls[v]].push_back(v);
  for (auto& [name, vs] : members) {
    std::set<int> seen{vs[0]};
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (cls[y] == name && seen.insert(y).second) stack.push_back(y);
    }
    if (seen.size() != vs.size()) return false;
  }
  std::set<std::pair<std::string, std::string>> quotient;
  for (auto [a, b] : g.edges())
    if (!cls[a].empty() && !cls[b].empty() && cls[a] != cls[b])
      quotient.insert(std::minmax(cls[a], cls[b]));

  Graph inc = incidence_graph(c);
  std::set<std::pair<std::string, std::string>> expected;
  for (auto [a, b] : inc.edges()) expected.insert(std::minmax(inc.role(a), inc.role(b)));
  return quotient == expected;
}

std::string write_graph(const Graph& g) {
  std::string out;
  for (int v = 0; v < g.num_vertices(); ++v)
    out += "v " + std::to_string(v) + " " + g.role(v) + "\n";
  for (auto [a, b] : g.edges()) out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    fn(line, pos);
    pos = end + 1;
  }
}

int read_int(std::istringstream& in, std::size_t offset) {
  long v;
  if (!(in >> v)) throw ParseError("expected integer", offset);
  return static_cast<int>(v);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> offsets;
  for_each_line(text, [&](const std::string& line, std::size_t offset) {
    std::istringstream in(line);
    std::string kw;
    if (!(in >> kw)) return;
    if (kw == "v") {
      int id = read_int(in, offset);
      std::string role;
      if (!(in >> role)) throw ParseError("vertex without role", offset);
      if (id != g.num_vertices()) throw ParseError("vertex ids must be dense and ordered", offset);
      g.add_vertex(role);
    } else if (kw == "e") {
      int a = read_int(in, offset);
      int b = read_int(in, offset);
      edges.emplace_back(a, b);
      offsets.push_back(offset);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", offset);
    }
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a < 0 || b < 0 || a >= g.num_vertices() || b >= g.num_vertices())
      throw ParseError("edge references unknown vertex", offsets[i]);
    g.add_edge(a, b);
  }
  return g;
}

std::string write_decomposition(const Decomposition& d) {
  std::string out = d.shape == Decomposition::Shape::path ? "shape path\n" : "shape tree\n";
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out += "bag " + std::to_string(i);
    for (int v : d.bags[i]) out += " " + std::to_string(v);
    out += "\n";
  }
  for (auto [a, b] : d.links) out += "link " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

Decomposition parse_decomposition(std::string_view text) {
  Decomposition d;
  d.shape = Decomposition::Shape::path;
  for_each_line(text, [&](const std::string& line, std::size_t offset) {
    std::istringstream in(line);
    std::string kw;
    if (!(in >> kw)) return;
    if (kw == "shape") {
      std::string s;
      in >> s;
      if (s == "path")
        d.shape = Decomposition::Shape::path;
      else if (s == "tree")
        d.shape = Decomposition::Shape::tree;
      else
        throw ParseError("unknown shape '" + s + "'", offset);
    } else if (kw == "bag") {
      int idx = read_int(in, offset);
      if (idx != static_cast<int>(d.bags.size()))
        throw ParseError("bag indices must be dense and ordered", offset);
      std::vector<int> bag;
      long v;
      while (in >> v) bag.push_back(static_cast<int>(v));
      if (!in.eof()) throw ParseError("bad vertex id", offset);
      d.bags.push_back(std::move(bag));
    } else if (kw == "link") {
      int a = read_int(in, offset);
      int b = read_int(in, offset);
      d.links.emplace_back(a, b);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", offset);
    }
  });
  if (d.shape == Decomposition::Shape::path && d.links.empty())
    return Decomposition::path(std::move(d.bags));
  return d;
}

}  // namespace ltlwb
