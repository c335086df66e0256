#include <doctest.h>

#include "../common/random.hpp"
#include "ltlwb/cnf.hpp"
#include "ltlwb/errors.hpp"
#include "ltlwb/graph.hpp"

using namespace ltlwb;
using testing::Rng;

namespace {

Graph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v");
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_of(n, e);
}

Graph clique(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return graph_of(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_of(n, e);
}

Graph random_graph(Rng& rng, int n, int percent) {
  Graph g = graph_of(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (testing::pick(rng, 100) < percent) g.add_edge(i, j);
  return g;
}

bool valid(const Graph& g, const Decomposition& d) { return check_decomposition(g, d).empty(); }

bool acyclic(const Graph& g) { return g.num_edges() <= g.num_vertices() - 1 && exact_treewidth(g, 24).width <= 1; }

Cnf cnf(int n, std::vector<std::vector<int>> clauses) {
  Cnf c;
  c.num_vars = n;
  c.clauses = std::move(clauses);
  return c;
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("syntax graph merges proposition leaves only") {
    Graph g = syntax_graph(parse_formula("p & p"));
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);

    Graph h = syntax_graph(parse_formula("(p & q) | (p & r)"));
    CHECK(h.num_vertices() == 6);
    CHECK(h.num_edges() == 6);
    CHECK(exact_treewidth(h).width == 2);

    Graph n = syntax_graph(parse_formula("!p & p"));
    CHECK(n.num_vertices() == 3);
  }

  TEST_CASE("syntax graph of a proposition-free formula is a tree") {
    Graph g = syntax_graph(parse_formula("X true & (false U G true)"));
    CHECK(g.num_edges() == g.num_vertices() - 1);
    CHECK(exact_treewidth(g).width == 1);
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      Formula f = testing::random_formula(rng, 2 + testing::pick(rng, 12), {},
                                          FragmentSet{Temporal::X, Temporal::F, Temporal::G, Temporal::U});
      Graph r = syntax_graph(f);
      CHECK(r.num_edges() == r.num_vertices() - 1);
      CHECK(acyclic(r));
    }
  }

  TEST_CASE("syntax graph size equals nodes minus merged leaves") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
      Formula f = testing::random_formula(rng, 1 + testing::pick(rng, 15), {"p", "q", "r"},
                                          FragmentSet{Temporal::X, Temporal::U}, false);
      Graph g = syntax_graph(f);
      int props = nvar(f);
      CHECK(g.num_vertices() == static_cast<int>(f.size()) - leaf_count(f) + props);
    }
  }

  TEST_CASE("primal and incidence graphs") {
    Graph tri = primal_graph(cnf(3, {{1, 2, 3}}));
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);

    Graph path = primal_graph(cnf(3, {{1, 2}, {2, -3}}));
    CHECK(path.num_edges() == 2);
    CHECK(path.has_edge(0, 1));
    CHECK(path.has_edge(1, 2));
    CHECK_FALSE(path.has_edge(0, 2));

    Graph star = incidence_graph(cnf(2, {{1, 2}}));
    CHECK(star.num_vertices() == 3);
    CHECK(star.num_edges() == 2);
    CHECK(star.neighbors(2).size() == 2);
  }

  TEST_CASE("check_decomposition examples") {
    Graph g = path_graph(3);
    Decomposition all = Decomposition::path({{0, 1, 2}});
    CHECK(valid(g, all));
    CHECK(width(all) == 2);

    Decomposition two = Decomposition::path({{0, 1}, {1, 2}});
    CHECK(valid(g, two));
    CHECK(width(two) == 1);

    g.add_edge(0, 2);
    auto v = check_decomposition(g, two);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == DecompositionViolation::Kind::uncovered_edge);

    auto missing = check_decomposition(path_graph(3), Decomposition::path({{0, 1}}));
    bool found = false;
    for (const auto& x : missing) found |= x.kind == DecompositionViolation::Kind::missing_vertex;
    CHECK(found);

    auto gap = check_decomposition(path_graph(3), Decomposition::path({{0, 1}, {1, 2}, {0}}));
    found = false;
    for (const auto& x : gap) found |= x.kind == DecompositionViolation::Kind::disconnected;
    CHECK(found);

    auto bad = check_decomposition(path_graph(2), Decomposition::path({{0, 1, 7}}));
    found = false;
    for (const auto& x : bad) found |= x.kind == DecompositionViolation::Kind::bad_vertex;
    CHECK(found);
  }

  TEST_CASE("width") {
    CHECK(width(Decomposition::path({{0}})) == 0);
    CHECK(width(Decomposition::path({{0, 1}, {1, 2}})) == 1);
    CHECK_THROWS_AS(width(Decomposition{}), Error);
  }

  TEST_CASE("exact widths of small standard graphs") {
    auto p5 = exact_pathwidth(path_graph(5));
    CHECK(p5.width == 1);
    CHECK(valid(path_graph(5), p5.decomposition));
    CHECK(exact_pathwidth(clique(4)).width == 3);
    CHECK(exact_treewidth(clique(4)).width == 3);
    auto c4 = exact_treewidth(cycle(4));
    CHECK(c4.width == 2);
    CHECK(valid(cycle(4), c4.decomposition));
    CHECK(exact_pathwidth(cycle(6)).width == 2);
    CHECK(exact_treewidth(graph_of(0, {})).width == 0);
    for (int n = 1; n <= 7; ++n) {
      CHECK(exact_pathwidth(clique(n)).width == n - 1);
      CHECK(exact_treewidth(clique(n)).width == n - 1);
      CHECK(exact_pathwidth(path_graph(n)).width == (n > 1 ? 1 : 0));
    }
  }

  TEST_CASE("exact solvers enforce the vertex limit") {
    CHECK_THROWS_AS(exact_pathwidth(path_graph(15)), LimitExceeded);
    CHECK_THROWS_AS(exact_treewidth(path_graph(6), 5), LimitExceeded);
    CHECK(exact_treewidth(path_graph(15), 15).width == 1);
  }

  TEST_CASE("minfill examples") {
    Graph tree = graph_of(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}});
    CHECK(minfill_upper(tree).width == 1);
    CHECK(minfill_upper(clique(5)).width == 4);
  }

  TEST_CASE("exhaustive small graphs: bounds are ordered and decompositions valid") {
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
      for (int mask = 0; mask < (1 << slots.size()); ++mask) {
        Graph g = graph_of(n, {});
        for (std::size_t e = 0; e < slots.size(); ++e)
          if (mask >> e & 1) g.add_edge(slots[e].first, slots[e].second);
        auto tw = exact_treewidth(g);
        auto pw = exact_pathwidth(g);
        auto mf = minfill_upper(g);
        auto gp = greedy_path_upper(g);
        REQUIRE(valid(g, tw.decomposition));
        REQUIRE(valid(g, pw.decomposition));
        REQUIRE(valid(g, mf.decomposition));
        REQUIRE(valid(g, gp.decomposition));
        CHECK(width(tw.decomposition) == tw.width);
        CHECK(width(pw.decomposition) == pw.width);
        CHECK(pw.width >= tw.width);
        CHECK(mf.width >= tw.width);
        CHECK(gp.width >= pw.width);
      }
    }
  }

  TEST_CASE("random eight-vertex graphs: minfill bounds treewidth") {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
      Graph g = random_graph(rng, 8, 20 + testing::pick(rng, 60));
      auto tw = exact_treewidth(g);
      auto mf = minfill_upper(g);
      CHECK(valid(g, mf.decomposition));
      CHECK(mf.width >= tw.width);
    }
  }

  TEST_CASE("incidence graph is a minor of the CNF syntax graph") {
    CHECK(incidence_minor_check(cnf(3, {{1, -2}, {2, 3, -1}})));
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
      int n = 1 + testing::pick(rng, 4);
      Cnf c;
      c.num_vars = n;
      int m = 1 + testing::pick(rng, 4);
      for (int j = 0; j < m; ++j) {
        std::vector<int> cl;
        int len = 2 + testing::pick(rng, 2);
        for (int t = 0; t < len; ++t) cl.push_back((1 + testing::pick(rng, n)) * (testing::pick(rng, 2) ? 1 : -1));
        c.clauses.push_back(cl);
      }
      CHECK(incidence_minor_check(c));
    }
    CHECK_THROWS_AS(incidence_minor_check(cnf(1, {{1}})), Error);
  }

  TEST_CASE("interval_fill and pad_path keep decompositions valid") {
    Graph g = path_graph(4);
    Decomposition d = interval_fill({{0, 1}, {1, 2}, {0, 3}});
    CHECK(d.bags[1] == std::vector<int>{0, 1, 2});
    Rng rng(45);
    for (int i = 0; i < 100; ++i) {
      Graph r = random_graph(rng, 1 + testing::pick(rng, 9), 30);
      Decomposition base = exact_pathwidth(r).decomposition;
      int target = width(base) + testing::pick(rng, r.num_vertices() + 1);
      Decomposition padded = pad_path(base, target);
      CHECK(valid(r, padded));
      CHECK(width(padded) == std::min(target, std::max(width(base), r.num_vertices() - 1)));
    }
    Decomposition wide = Decomposition::path({{0, 1, 2, 3}});
    CHECK(width(pad_path(wide, 1)) == 3);
    Decomposition tree = minfill_upper(g).decomposition;
    tree.shape = Decomposition::Shape::tree;
    CHECK_THROWS_AS(pad_path(tree, 5), Error);
  }

  TEST_CASE("structure graph") {
    KripkeStructure s;
    s.add_world("a");
    s.add_world("b");
    s.add_edge(0, 1);
    s.add_edge(1, 0);
    s.add_edge(1, 1);
    Graph g = structure_graph(s);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
  }

  TEST_CASE("graph and decomposition text round trips") {
    Rng rng(46);
    for (int i = 0; i < 30; ++i) {
      Graph g = random_graph(rng, 1 + testing::pick(rng, 8), 40);
      std::string t = write_graph(g);
      CHECK(write_graph(parse_graph(t)) == t);
      Decomposition d = minfill_upper(g).decomposition;
      std::string dt = write_decomposition(d);
      Decomposition back = parse_decomposition(dt);
      CHECK(write_decomposition(back) == dt);
      CHECK(valid(g, back));
    }
    CHECK_THROWS_AS(parse_graph("v 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("v 0 x\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_decomposition("bag 1 0\n"), ParseError);
    CHECK(parse_decomposition("# c\nbag 0 1 2\nbag 1 2\n").links.size() == 1);
  }
}
