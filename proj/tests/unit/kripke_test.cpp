#include <doctest.h>

#include "../common/random.hpp"
#include "ltlwb/errors.hpp"
#include "ltlwb/kripke.hpp"
#include "ltlwb/reductions.hpp"

using namespace ltlwb;
using testing::Rng;

namespace {

KripkeStructure self_loop(std::vector<std::string> labels) {
  KripkeStructure s;
  s.add_world("w", labels);
  s.add_edge(0, 0);
  s.set_init(0);
  return s;
}

Cnf3 cnf3(int n, std::vector<std::array<int, 3>> clauses) {
  Cnf3 c;
  c.num_vars = n;
  c.clauses = std::move(clauses);
  return c;
}

const std::vector<std::string> kProps{"p", "q"};

}  // namespace

TEST_SUITE("kripke") {
  TEST_CASE("validate_structure") {
    CHECK(validate_structure(self_loop({})).empty());

    KripkeStructure bare;
    bare.add_world("w");
    bare.set_init(0);
    auto v = validate_structure(bare);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::non_total);
    CHECK(v[0].world == 0);

    KripkeStructure dangling = self_loop({});
    dangling.add_edge("w", "nowhere");
    auto d = validate_structure(dangling);
    REQUIRE(d.size() == 1);
    CHECK(d[0].kind == Violation::Kind::dangling_edge);

    KripkeStructure no_init;
    no_init.add_world("w");
    no_init.add_edge(0, 0);
    CHECK(validate_structure(no_init).size() == 1);
  }

  TEST_CASE("the 3-variable assignment structure is valid") {
    ReductionOutput out = reduce_3sat_to_mc(cnf3(3, {{1, 2, 3}}), Temporal::F);
    REQUIRE(out.mc);
    CHECK(validate_structure(out.mc->structure).empty());
  }

  TEST_CASE("branching_degree") {
    CHECK(branching_degree(self_loop({"p"})) == 1);
    for (int n = 2; n <= 6; ++n) {
      std::vector<std::array<int, 3>> clauses;
      for (int v = 1; v <= n; ++v) clauses.push_back({v, -v, v});
      ReductionOutput out = reduce_3sat_to_mc(cnf3(n, clauses), Temporal::F);
      CHECK(branching_degree(out.mc->structure) == 2);
    }
    SquareTilingInstance t{{"a", "b"}, {{0, 0, 0, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}}, 2};
    ReductionOutput sq = reduce_sqtiling_to_mc_x(t);
    CHECK(branching_degree(sq.mc->structure) == 3);
  }

  TEST_CASE("eval_on_lasso examples") {
    KripkeStructure s = self_loop({"p"});
    Lasso l{{}, {0}};
    CHECK(eval_on_lasso(s, l, parse_formula("G p")));
    CHECK_FALSE(eval_on_lasso(s, l, parse_formula("F !p")));

    KripkeStructure two;
    two.add_world("a", {"p"});
    two.add_world("b", {"q"});
    two.add_edge(0, 1);
    two.add_edge(1, 0);
    two.set_init(0);
    Lasso ab{{}, {0, 1}};
    CHECK(eval_on_lasso(two, ab, parse_formula("p U q")));
    CHECK_FALSE(eval_on_lasso(two, ab, parse_formula("q U p & X p")));
    CHECK(eval_on_lasso(two, ab, parse_formula("G F q")));
  }

  TEST_CASE("eval_on_lasso rejects an invalid lasso") {
    KripkeStructure s = self_loop({"p"});
    s.add_world("v");
    s.add_edge(1, 1);
    CHECK_FALSE(is_valid_lasso(s, Lasso{{}, {0, 1}}));
    CHECK_THROWS_AS(eval_on_lasso(s, Lasso{{}, {0, 1}}, parse_formula("p")), Error);
    CHECK_THROWS_AS(eval_on_lasso(s, Lasso{{0}, {}}, parse_formula("p")), Error);
  }

  TEST_CASE("semantic laws on random lassos") {
    Rng rng(21);
    const FragmentSet all{Temporal::X, Temporal::F, Temporal::G, Temporal::U};
    for (int i = 0; i < 400; ++i) {
      LassoWord w = testing::random_word(rng, kProps, 3, 3);
      Formula a = testing::random_formula(rng, 1 + testing::pick(rng, 6), kProps, all);
      Formula b = testing::random_formula(rng, 1 + testing::pick(rng, 6), kProps, all);
      CHECK(eval_on_word(w, Formula::finally(a)) ==
            !eval_on_word(w, Formula::globally(Formula::neg(a))));
      CHECK(eval_on_word(w, Formula::next(a)) == eval_on_word(testing::drop_first(w), a));
      Formula u = Formula::until(a, b);
      auto lhs = eval_positions(w, u);
      auto rhs = eval_positions(w, Formula::disj(b, Formula::conj(a, Formula::next(u))));
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("formulas without X are stutter invariant") {
    Rng rng(22);
    for (int i = 0; i < 400; ++i) {
      LassoWord w = testing::random_word(rng, kProps, 3, 3);
      Formula f = testing::random_formula(rng, 1 + testing::pick(rng, 8), kProps,
                                          FragmentSet{Temporal::F, Temporal::G, Temporal::U});
      int at = testing::pick(rng, w.length());
      CHECK(eval_on_word(w, f) == eval_on_word(testing::stutter(w, at), f));
    }
  }

  TEST_CASE("word_of and word evaluation agree with structure evaluation") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
      LassoWord w = testing::random_word(rng, kProps, 3, 3);
      KripkeStructure s = testing::word_structure(w);
      Lasso l;
      for (int j = 0; j < static_cast<int>(w.prefix.size()); ++j) l.prefix.push_back(j);
      for (int j = 0; j < static_cast<int>(w.cycle.size()); ++j)
        l.cycle.push_back(static_cast<int>(w.prefix.size()) + j);
      Formula f = testing::random_formula(rng, 1 + testing::pick(rng, 8), kProps,
                                          FragmentSet{Temporal::X, Temporal::F, Temporal::U});
      CHECK(eval_on_lasso(s, l, f) == eval_on_word(w, f));
      CHECK(word_of(s, l).cycle == w.cycle);
    }
  }

  TEST_CASE("kripke text round trip is bit exact") {
    const char* text =
        "# two worlds\n"
        "world a p q\n"
        "world b\n"
        "edge a b\n"
        "edge b b\n"
        "edge b a\n"
        "init a\n";
    KripkeStructure s = parse_kripke(text);
    CHECK(s.num_worlds() == 2);
    CHECK(s.has_label(0, "q"));
    CHECK(s.successors(1).size() == 2);
    std::string once = write_kripke(s);
    CHECK(write_kripke(parse_kripke(once)) == once);

    Rng rng(24);
    for (int i = 0; i < 50; ++i) {
      KripkeStructure r = testing::random_structure(rng, 1 + testing::pick(rng, 5), kProps);
      std::string t = write_kripke(r);
      CHECK(write_kripke(parse_kripke(t)) == t);
    }
  }

  TEST_CASE("kripke parser errors") {
    CHECK_THROWS_AS(parse_kripke("world\n"), ParseError);
    CHECK_THROWS_AS(parse_kripke("vertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_kripke("world a\nworld a\n"), Error);
  }

  TEST_CASE("duplicate edges and labels are merged") {
    KripkeStructure s;
    s.add_world("a", {"p", "p"});
    s.add_edge(0, 0);
    s.add_edge(0, 0);
    CHECK(s.labels(0).size() == 1);
    CHECK(s.successors(0).size() == 1);
  }

  TEST_CASE("lasso text round trip") {
    KripkeStructure s = parse_kripke("world a\nworld b\nedge a b\nedge b b\ninit a\n");
    Lasso l{{0}, {1}};
    CHECK(parse_lasso(s, write_lasso(s, l)) == l);
  }
}
