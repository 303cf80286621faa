#ifndef FOLBOX_DECIDER_HPP_
#define FOLBOX_DECIDER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "folbox/kripke.hpp"
#include "folbox/normal_form.hpp"
#include "folbox/oracle.hpp"

namespace folbox {

// Which part of an elementary disjunction settled it.
enum class Branch { PossiblySatisfiable, NecessarilyThesis, PlainThesis, None };

std::string to_string(Branch b);

// One oracle call made while judging a disjunction, in evaluation order.
struct OracleCall {
  enum class Part { Possibly, Necessarily, Plain } part;
  std::size_t index = 0;  // position within necessarily
  Formula formula;
  ClassicalVerdict verdict;
};

struct DisjunctTrace {
  ElementaryDisjunction disjunction;
  Branch branch = Branch::None;
  std::vector<OracleCall> calls;
};

struct ThesisVerdict {
  bool thesis = false;
  ConjunctiveForm form;
  std::vector<DisjunctTrace> trace;  // stops after the first failing disjunction
};

// a | <>b | []c_1 | ... | []c_n is a thesis iff b is satisfiable, some c_i
// is a classical thesis, or a is one. The modal disjuncts are rigid: in a
// universal structure <>b holds everywhere when b is satisfiable somewhere
// and nowhere otherwise, and []c holds everywhere exactly when c is a
// classical thesis. When all of them fail, the disjunction is valid iff a
// is. Throws FragmentError.
bool elem_disj_thesis(const ElementaryDisjunction& d, const Oracle& oracle = default_oracle());
DisjunctTrace trace_disjunction(const ElementaryDisjunction& d,
                                const Oracle& oracle = default_oracle());

// Throws FragmentError when a component of the conjunctive form leaves the
// monadic fragment.
ThesisVerdict is_thesis(const Formula& a, const Oracle& oracle = default_oracle());

enum class BoxStatus { BoxThesis, NegBoxThesis };

std::string to_string(BoxStatus s);

// []A is a thesis iff A is (necessitation and T); otherwise -[]A is.
BoxStatus box_status(const Formula& a, const Oracle& oracle = default_oracle());

// Countermodels collected from a trace: every falsified classical thesis
// candidate with its certificate, and for every satisfiability test that
// succeeded, the negated formula with the satisfying model.
std::vector<UniversalSeed> seeds_from(const DisjunctTrace& t);
std::vector<UniversalSeed> seeds_from(const ThesisVerdict& v);

// For a non-thesis, a pointed model falsifying it, built as the disjoint
// union of the failing disjunction's countermodels. nullopt for theses.
std::optional<PointedModel> countermodel(const Formula& a, const Oracle& oracle = default_oracle());

}  // namespace folbox

#endif  // FOLBOX_DECIDER_HPP_
