#include "schemas.hpp"

#include <stdexcept>

#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"

namespace folbox::testing {

const std::vector<Rule>& sound_schemas() {
  static const std::vector<Rule> rules{Rule::K,    Rule::T,  Rule::Five, Rule::All1,
                                       Rule::All2, Rule::Id, Rule::Eq,   Rule::Mix};
  return rules;
}

SchemaInstance schema_instance(Gen& gen, Rule rule, const FormulaShape& shape, std::size_t depth) {
  auto pick_var = [&] { return shape.vars[gen.below(shape.vars.size())]; };
  auto any = [&] { return gen.formula(shape, depth); };
  switch (rule) {
    case Rule::K: {
      const Formula a = any(), b = any();
      return {imp(box(imp(a, b)), imp(box(a), box(b))), {}};
    }
    case Rule::T: {
      const Formula a = any();
      return {imp(box(a), a), {}};
    }
    case Rule::Five: {
      const Formula a = any();
      return {imp(neg(box(a)), box(neg(box(a)))), {}};
    }
    case Rule::All1:
      for (;;) {
        const Var x = pick_var(), y = pick_var();
        const Formula a = any();
        try {
          const Formula inst = substitute(a, x, y);
          return {imp(forall(x, a), inst), Aux{x, y, std::nullopt, std::nullopt}};
        } catch (const CaptureError&) {
        }
      }
    case Rule::All2:
      for (;;) {
        const Var x = pick_var();
        const Formula a = any(), b = any();
        if (forallbox_free_vars(a).count(x)) continue;
        return {imp(forall(x, imp(a, b)), imp(a, forall(x, b))), {}};
      }
    case Rule::Id: {
      const Var x = pick_var();
      return {eq(x, x), {}};
    }
    case Rule::Eq: {
      FormulaShape plain = shape;
      plain.modal = false;
      for (;;) {
        const Var x = pick_var(), y = pick_var();
        const Formula a = gen.formula(plain, depth);
        const std::size_t n = count_free_occurrences(a, x);
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < n; ++i) {
          if (gen.chance(0.5)) chosen.push_back(i);
        }
        try {
          const Formula b = substitute_some(a, x, y, chosen);
          return {imp(conj(eq(x, y), a), b), Aux{x, y, chosen, std::nullopt}};
        } catch (const CaptureError&) {
        }
      }
    }
    case Rule::Mix: {
      const Formula a = any();
      return {imp(box(a), forall(pick_var(), a)), {}};
    }
    default:
      throw std::logic_error("no generator for " + to_string(rule));
  }
}

}  // namespace folbox::testing
