#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "folbox/documents.hpp"
#include "folbox/errors.hpp"
#include "folbox/kripke.hpp"
#include "folbox/oracle.hpp"
#include "folbox/syntax.hpp"
#include "folbox/text.hpp"
#include "support/brute_force.hpp"
#include "support/generators.hpp"
#include "support/schemas.hpp"

using namespace folbox;
using folbox::testing::Gen;

namespace {

Formula f(const char* text) { return parse_formula(text); }

const std::string kData = FOLBOX_TEST_DATA;

StructureDoc load(const std::string& name) {
  return parse_structure(read_json_file(kData + "/structures/" + name));
}

Structure one_world_p_true() {
  return Structure({"w0"}, {{"a"}}, {{Predicate{"P", 1}, {{Tuple{0}}}}});
}

}  // namespace

TEST_CASE("satisfies examples") {
  const Structure s = one_world_p_true();
  CHECK(satisfies(s, Valuation{}, 0, f("[]P(x)")));

  Valuation v;
  v.assign(0, Var{"x"}, 0);
  v.assign(0, Var{"y"}, 0);
  CHECK(satisfies(s, v, 0, f("x = y")));

  const Structure two({"w0", "w1"}, {{"a"}, {"a"}},
                      {{Predicate{"P", 1}, {{Tuple{0}}, {}}}});
  CHECK_FALSE(satisfies(two, Valuation{}, 0, f("[]P(x)")));
  CHECK(satisfies(two, Valuation{}, 0, f("P(x)")));
}

TEST_CASE("satisfies rejects bad points") {
  const Structure s = one_world_p_true();
  CHECK_THROWS_AS(satisfies(s, Valuation{}, 3, f("P(x)")), UnknownWorld);
  CHECK_THROWS_AS(satisfies(s, Valuation{}, "w7", f("P(x)")), UnknownWorld);
  Valuation v;
  v.assign(0, Var{"x"}, 5);
  CHECK_THROWS_AS(satisfies(s, v, 0, f("P(x)")), DomainError);
}

TEST_CASE("structure construction enforces containments") {
  CHECK_THROWS_AS(Structure({}, {}, {}), DomainError);
  CHECK_THROWS_AS(Structure({"w0"}, {{}}, {}), DomainError);
  CHECK_THROWS_AS(Structure({"w0", "w0"}, {{"a"}, {"a"}}, {}), DomainError);
  CHECK_THROWS_AS(Structure({"w0"}, {{"a"}}, {{Predicate{"P", 1}, {{Tuple{1}}}}}), DomainError);
  CHECK_THROWS_AS(Structure({"w0"}, {{"a"}}, {{Predicate{"P", 1}, {{Tuple{0, 0}}}}}),
                  ArityError);
}

TEST_CASE("default element is the least name") {
  const Structure s({"w0"}, {{"c", "a", "b"}}, {{Predicate{"P", 1}, {{Tuple{1}}}}});
  CHECK(s.default_element(0) == 1);
  CHECK(satisfies(s, Valuation{}, 0, f("P(x)")));
}

TEST_CASE("valid_in examples") {
  Gen gen(5);
  for (int i = 0; i < 20; ++i) {
    const Structure s = gen.structure({{"P", 1}});
    CHECK(valid_in(s, f("P(x) | ~P(x)")));
  }
  const Structure two({"w0", "w1"}, {{"a", "b"}, {"a"}},
                      {{Predicate{"P", 1}, {{Tuple{0}, Tuple{1}}, {}}}});
  CHECK_FALSE(valid_in(two, f("forall x. P(x)")));
}

TEST_CASE("valid_in of box agrees with valid_in") {
  Gen gen(17);
  const auto shape = folbox::testing::monadic_shape(2, 3);
  for (int i = 0; i < 200; ++i) {
    const Formula a = gen.formula(shape, 4);
    const Structure s = gen.structure(shape.predicates);
    CHECK(valid_in(s, box(a)) == valid_in(s, a));
  }
}

TEST_CASE("kripke agrees with the classical brute-force evaluator on one world") {
  Gen gen(23);
  auto shape = folbox::testing::monadic_shape(2, 3, false);
  shape.predicates.push_back({"R", 2});
  for (int i = 0; i < 300; ++i) {
    const Formula a = gen.formula(shape, 5);
    const Structure s = gen.structure(shape.predicates, 1, 3);
    folbox::testing::ClassicalModel m{s.domain_size(0), {}};
    for (const auto& [p, ext] : s.interpretation()) {
      for (const Tuple& t : ext[0]) m.ext[p.name].insert(t);
    }
    const Valuation v = gen.valuation(s, shape.vars);
    std::map<Var, std::size_t> env;
    for (const Var& x : shape.vars) env[x] = v.value(s, 0, x);
    CHECK(satisfies(s, v, 0, a) == folbox::testing::classical_holds(a, m, env));
  }
}

TEST_CASE("valuation locality") {
  Gen gen(29);
  const auto shape = folbox::testing::monadic_shape(2, 3);
  for (int i = 0; i < 300; ++i) {
    const Formula a = gen.formula(shape, 5);
    const Structure s = gen.structure(shape.predicates);
    const WorldId w = gen.below(s.world_count());
    const Valuation v1 = gen.valuation(s, shape.vars);
    Valuation v2 = gen.valuation(s, shape.vars);
    for (const Var& x : forallbox_free_vars(a)) v2.assign(w, x, v1.value(s, w, x));
    CHECK(satisfies(s, v1, w, a) == satisfies(s, v2, w, a));
  }
}

TEST_CASE("rigidity of modal formulas") {
  Gen gen(31);
  const auto shape = folbox::testing::monadic_shape(2, 3);
  for (int i = 0; i < 300; ++i) {
    const Formula a = gen.formula(shape, 4);
    const Structure s = gen.structure(shape.predicates);
    const Valuation v1 = gen.valuation(s, shape.vars), v2 = gen.valuation(s, shape.vars);
    const WorldId w1 = gen.below(s.world_count()), w2 = gen.below(s.world_count());
    CHECK(satisfies(s, v1, w1, box(a)) == satisfies(s, v2, w2, box(a)));
    CHECK(satisfies(s, v1, w1, diamond(a)) == satisfies(s, v2, w2, diamond(a)));
  }
}

TEST_CASE("non-(!) axiom instances are valid in random structures") {
  Gen gen(37);
  auto shape = folbox::testing::monadic_shape(2, 3);
  shape.predicates.push_back({"R", 2});
  for (Rule rule : folbox::testing::sound_schemas()) {
    for (int i = 0; i < 30; ++i) {
      const Formula a = folbox::testing::schema_instance(gen, rule, shape, 3).formula;
      for (int j = 0; j < 5; ++j) {
        const Structure s = gen.structure(shape.predicates);
        CHECK_MESSAGE(valid_in(s, a), to_string(rule) << ": " << print_formula(a));
      }
    }
  }
}

TEST_CASE("Barcan formula and its converse hold in every structure") {
  Gen gen(41);
  const Formula barcan = f("(forall x. []P(x)) -> []forall x. P(x)");
  const Formula converse = f("[](forall x. P(x)) -> forall x. []P(x)");
  for (int i = 0; i < 200; ++i) {
    const Structure s = gen.structure({{"P", 1}});
    CHECK(valid_in(s, barcan));
    CHECK(valid_in(s, converse));
  }
}

TEST_CASE("relative universal structures") {
  const Oracle oracle;
  SUBCASE("empty seed list") {
    const Structure s = build_relative_universal({});
    CHECK(s.world_count() == 1);
    CHECK(s.domain_size(0) == 1);
  }
  SUBCASE("P(x) with P empty") {
    const Formula a = f("P(x)");
    const Structure cert({"w0"}, {{"a"}}, {{Predicate{"P", 1}, {{}}}});
    const std::vector<UniversalSeed> seeds{{a, PointedModel{cert, 0, Valuation{}}}};
    const Structure s = build_relative_universal(seeds);
    CHECK_FALSE(valid_in(s, a));
    CHECK(valid_in(s, neg(box(a))));
  }
  SUBCASE("at least two elements is falsified by a one-element world") {
    const Formula a = f("exists x. exists y. ~(x = y)");
    const ClassicalVerdict v = oracle.is_fol_thesis(a);
    REQUIRE(v.certificate);
    CHECK(v.certificate->structure.domain_size(0) == 1);
    const std::vector<UniversalSeed> seeds{{a, *v.certificate}};
    CHECK(valid_in(build_relative_universal(seeds), neg(box(a))));
  }
  SUBCASE("bad certificates") {
    const Structure cert({"w0"}, {{"a"}}, {{Predicate{"P", 1}, {{Tuple{0}}}}});
    const std::vector<UniversalSeed> not_falsified{{f("P(x)"), PointedModel{cert, 0, Valuation{}}}};
    CHECK_THROWS_AS(build_relative_universal(not_falsified), CertificateError);
    const std::vector<UniversalSeed> modal{{f("[]P(x)"), PointedModel{cert, 0, Valuation{}}}};
    CHECK_THROWS_AS(build_relative_universal(modal), CertificateError);
  }
  SUBCASE("every seed fails, so every ~[]seed holds") {
    Gen gen(43);
    const auto shape = folbox::testing::monadic_shape(2, 2, false);
    std::vector<UniversalSeed> seeds;
    std::vector<Formula> seeded;
    while (seeds.size() < 6) {
      const Formula a = gen.formula(shape, 4);
      const ClassicalVerdict v = oracle.is_fol_thesis(a);
      if (v.status != Verdict::NonThesis) continue;
      seeds.push_back({a, *v.certificate});
      seeded.push_back(a);
    }
    const Structure s = build_relative_universal(seeds);
    CHECK(s.world_count() == 6);
    for (const Formula& a : seeded) {
      CHECK_FALSE(valid_in(s, a));
      CHECK(valid_in(s, neg(box(a))));
    }
  }
}

TEST_CASE("structure documents") {
  const StructureDoc single = load("single.json");
  CHECK(single.structure.world_count() == 1);
  CHECK(valid_in(single.structure, f("P(x)")));

  const StructureDoc two = load("two_worlds.json");
  CHECK(two.structure.domain_size(0) == 2);
  CHECK(two.structure.domain_size(1) == 1);
  REQUIRE(two.valuation);
  CHECK(satisfies(two.structure, *two.valuation, "w0", f("R(x, y) & ~P(y)")));
  CHECK_FALSE(satisfies(two.structure, *two.valuation, "w0", f("[]P(x)")));

  CHECK_THROWS_AS(load("bad_domain.json"), DomainError);
  CHECK_THROWS_AS(load("bad_valuation.json"), DomainError);
  CHECK_THROWS_AS(load("unknown_world.json"), UnknownWorld);
  CHECK_THROWS_AS(load("arity_conflict.json"), ArityError);
  CHECK_THROWS_AS(load("bad_tuple.json"), ArityError);
  CHECK_THROWS_AS(read_json_file(kData + "/structures/missing.json"), DocumentError);
  CHECK_THROWS_AS(parse_structure(nlohmann::json::parse(R"({"worlds": "w0"})")), DocumentError);
}

TEST_CASE("structure documents round trip") {
  Gen gen(47);
  for (int i = 0; i < 50; ++i) {
    const Structure s = gen.structure({{"P", 1}, {"R", 2}});
    const StructureDoc back = parse_structure(structure_to_json(s));
    CHECK(back.structure.worlds() == s.worlds());
    CHECK(back.structure.interpretation() == s.interpretation());
    const PointedModel m{s, 0, gen.valuation(s, {Var{"x"}})};
    const PointedModel pm = parse_pointed(pointed_to_json(m));
    CHECK(pm.valuation == m.valuation);
    CHECK(pm.world == 0);
  }
}
