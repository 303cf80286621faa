#ifndef FOLBOX_NORMAL_FORM_HPP_
#define FOLBOX_NORMAL_FORM_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "folbox/formula.hpp"

namespace folbox {

// plain | <>possibly | []necessarily[0] | ... with every component
// modality-free. Absent parts contribute nothing to the disjunction; an
// entirely empty disjunction is false.
struct ElementaryDisjunction {
  std::optional<Formula> plain;
  std::optional<Formula> possibly;
  std::vector<Formula> necessarily;

  bool empty() const { return !plain && !possibly && necessarily.empty(); }
  Formula to_formula() const;

  bool operator==(const ElementaryDisjunction&) const = default;
};

// Conjunction of elementary disjunctions; never empty.
struct ConjunctiveForm {
  std::vector<ElementaryDisjunction> parts;

  Formula to_formula() const;
};

// Equivalent conjunctive form, valid in every variable-domain structure.
// Modality-free input comes back unchanged as a single plain part.
ConjunctiveForm to_conjunctive_form(const Formula& a);

struct RecognitionFailure {
  Formula offending;
  std::string reason;
};

// Shape check only: succeeds iff `a` already is a conjunction of elementary
// disjunctions (conjuncts and disjuncts in any order and association, at most
// one <> per disjunction).
std::variant<ConjunctiveForm, RecognitionFailure> recognize(const Formula& a);

// Equivalences used by the conversion, as instantiable biconditional
// schemas. `metas` supplies formulas for the schematic letters and `x` the
// schematic variable.
struct RewriteRule {
  std::string name;
  std::size_t arity;  // number of schematic formulas
  std::function<std::pair<Formula, Formula>(std::span<const Formula> metas, const Var& x)> instantiate;
};

const std::vector<RewriteRule>& rewrite_rules();

}  // namespace folbox

#endif  // FOLBOX_NORMAL_FORM_HPP_
