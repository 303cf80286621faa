#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "folbox/decider.hpp"
#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"
#include "folbox/text.hpp"
#include "support/generators.hpp"
#include "support/schemas.hpp"

using namespace folbox;
using folbox::testing::Gen;

namespace {

Formula f(const char* text) { return parse_formula(text); }

bool thesis(const char* text) { return is_thesis(f(text)).thesis; }

// Every disjunction holds through a plain or boxed part, so the verdict does
// not rest on the <>-part.
bool settled_without_possibly(const ThesisVerdict& v, const Oracle& oracle) {
  for (const ElementaryDisjunction& d : v.form.parts) {
    bool ok = d.plain && oracle.is_fol_thesis(*d.plain).status == Verdict::Thesis;
    for (const Formula& c : d.necessarily) {
      ok = ok || oracle.is_fol_thesis(c).status == Verdict::Thesis;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("elem_disj_thesis examples") {
  ElementaryDisjunction possibly;
  possibly.possibly = f("P(x)");
  CHECK(elem_disj_thesis(possibly));

  ElementaryDisjunction identity;
  identity.plain = f("x = y");
  CHECK_FALSE(elem_disj_thesis(identity));

  ElementaryDisjunction boxed;
  boxed.necessarily = {f("x = x")};
  CHECK(elem_disj_thesis(boxed));

  CHECK_FALSE(elem_disj_thesis(ElementaryDisjunction{}));

  ElementaryDisjunction binary;
  binary.plain = f("R(x, y)");
  CHECK_THROWS_AS(elem_disj_thesis(binary), FragmentError);
}

TEST_CASE("trace records branches in order") {
  ElementaryDisjunction d;
  d.possibly = f("P(x) & ~P(x)");
  d.necessarily = {f("P(x)"), f("x = x")};
  d.plain = f("Q(x)");
  const DisjunctTrace t = trace_disjunction(d);
  CHECK(t.branch == Branch::NecessarilyThesis);
  REQUIRE(t.calls.size() == 3);
  CHECK(t.calls[0].verdict.status == Verdict::Unsatisfiable);
  CHECK(t.calls[1].verdict.status == Verdict::NonThesis);
  CHECK(t.calls[2].verdict.status == Verdict::Thesis);
}

TEST_CASE("is_thesis examples") {
  CHECK(thesis("[]P(x) -> forall x. P(x)"));
  CHECK(thesis("(forall x. []P(x)) -> []forall x. P(x)"));
  CHECK(thesis("[](forall x. P(x)) -> forall x. []P(x)"));
  CHECK(thesis("(<>exists x. P(x)) -> <>P(y)"));
  CHECK(thesis("(forall x. []P(x)) -> []P(y)"));
  CHECK_FALSE(thesis("[]P(x)"));
  CHECK(thesis("~[](x = y)"));
  CHECK(thesis("~[]~(x = y)"));
  CHECK(thesis("~[]P(x)"));
  CHECK(thesis("~[]~P(x)"));
  CHECK_FALSE(thesis("[](x = y)"));
  CHECK_FALSE(thesis("[]~(x = y)"));
  CHECK_FALSE(thesis("[]exists x. exists y. ~(x = y)"));
  CHECK(thesis("[]exists x. exists y. x = y"));
  CHECK_THROWS_AS(is_thesis(f("[]R(x, y)")), FragmentError);
}

TEST_CASE("box_status examples") {
  CHECK(box_status(f("x = x")) == BoxStatus::BoxThesis);
  CHECK(box_status(f("x = y")) == BoxStatus::NegBoxThesis);
  CHECK(box_status(f("P(x) | ~P(x)")) == BoxStatus::BoxThesis);
}

TEST_CASE("countermodels falsify non-theses") {
  for (const char* text : {"[]P(x)", "[](x = y)", "[]~(x = y)", "[]P(x) | []Q(x)",
                           "P(x) | <>(Q(x) & ~Q(x))", "[]exists x. exists y. ~(x = y)"}) {
    CAPTURE(text);
    const auto m = countermodel(f(text));
    REQUIRE(m);
    CHECK_FALSE(satisfies(*m, f(text)));
  }
  CHECK_FALSE(countermodel(f("~[]P(x)")));
}

TEST_CASE("logical closure on random formulas") {
  Gen gen(301);
  const auto shape = folbox::testing::monadic_shape(2, 2);
  for (int i = 0; i < 150; ++i) {
    const Formula a = gen.formula(shape, 4);
    const Formula b = gen.formula(shape, 4);
    const bool ta = is_thesis(a).thesis;
    CHECK_FALSE((ta && is_thesis(neg(a)).thesis));
    CHECK(ta == is_thesis(box(a)).thesis);
    CHECK((box_status(a) == BoxStatus::BoxThesis) == ta);
    if (ta && is_thesis(imp(a, b)).thesis) CHECK(is_thesis(b).thesis);
    // Exactly one of []A, ~[]A is a thesis.
    CHECK(is_thesis(box(a)).thesis != is_thesis(neg(box(a))).thesis);
  }
}

TEST_CASE("verdicts agree with model checking") {
  const Oracle oracle;
  Gen gen(307);
  const auto shape = folbox::testing::monadic_shape(2, 3);
  for (int i = 0; i < 150; ++i) {
    const Formula a = gen.formula(shape, 4);
    CAPTURE(print_formula(a));
    const ThesisVerdict v = is_thesis(a, oracle);
    if (v.thesis) {
      const auto seeds = seeds_from(v);
      CHECK(valid_in(build_relative_universal(seeds), a));
      if (settled_without_possibly(v, oracle)) {
        for (int j = 0; j < 10; ++j) CHECK(valid_in(gen.structure(shape.predicates), a));
      }
    } else {
      const auto m = countermodel(a, oracle);
      REQUIRE(m);
      CHECK_FALSE(satisfies(*m, a));
    }
  }
}

TEST_CASE("trace verdicts match fresh oracle calls") {
  Gen gen(311);
  const auto shape = folbox::testing::monadic_shape(2, 2);
  for (int i = 0; i < 100; ++i) {
    const ThesisVerdict v = is_thesis(gen.formula(shape, 4));
    const Oracle fresh;
    for (const DisjunctTrace& t : v.trace) {
      for (const OracleCall& c : t.calls) {
        const ClassicalVerdict again = c.part == OracleCall::Part::Possibly
                                           ? fresh.is_satisfiable(c.formula)
                                           : fresh.is_fol_thesis(c.formula);
        CHECK(again.status == c.verdict.status);
      }
    }
  }
}

TEST_CASE("axiom instances are theses") {
  Gen gen(313);
  const auto shape = folbox::testing::monadic_shape(2, 2);
  for (Rule rule : folbox::testing::sound_schemas()) {
    for (int i = 0; i < 20; ++i) {
      const Formula a = folbox::testing::schema_instance(gen, rule, shape, 3).formula;
      CHECK_MESSAGE(is_thesis(a).thesis, to_string(rule) << ": " << print_formula(a));
    }
  }
  const Oracle oracle;
  auto plain = shape;
  plain.modal = false;
  int bang = 0;
  while (bang < 20) {
    const Formula a = gen.formula(plain, 4);
    if (oracle.is_fol_thesis(a).status != Verdict::NonThesis) continue;
    CHECK(is_thesis(neg(box(a))).thesis);
    ++bang;
  }
}
