#ifndef FOLBOX_SYNTAX_HPP_
#define FOLBOX_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "folbox/formula.hpp"

namespace folbox {

// True iff the formula contains no Box or Diamond.
bool box_free(const Formula& a);

// An occurrence is bound when it lies under a quantifier binding its variable
// or anywhere under a modal operator; otherwise it is free.
enum class OccurrenceClass { ForallBoxBound, ForallBoxFree };

struct Occurrence {
  Var var;
  OccurrenceClass cls;
};

// Every variable occurrence in pre-order (atom arguments left to right).
// Binder positions themselves are not occurrences.
std::vector<Occurrence> occurrences(const Formula& a);

// Variables with at least one free occurrence in the sense above.
std::set<Var> forallbox_free_vars(const Formula& a);

// Classical free variables: occurrences not under a binder for them,
// modal operators notwithstanding.
std::set<Var> free_vars(const Formula& a);

// Every variable occurring in the formula, bound positions included.
std::set<Var> all_vars(const Formula& a);

// Replaces every free occurrence of `from` by `to`, leaving everything under
// a modal operator untouched. Throws CaptureError if `to` would be bound.
Formula substitute(const Formula& a, const Var& from, const Var& to);

// Replaces only the selected free occurrences of `from`. `selected` holds
// indices into the pre-order list of free occurrences of `from`.
Formula substitute_some(const Formula& a, const Var& from, const Var& to,
                        std::span<const std::size_t> selected);

std::size_t count_free_occurrences(const Formula& a, const Var& x);

// Expands every derived connective into Atom/Eq/Not/Impl/Forall/Box.
Formula lower(const Formula& a);

// Expands only Exists and Diamond into their duals.
Formula lower_duals(const Formula& a);

// Predicate symbols of the formula; throws ArityError when one name is used
// with two arities.
std::vector<Predicate> signature(const Formula& a);

// Closure over forallbox_free_vars, in variable order.
Formula universal_closure(const Formula& a);
Formula existential_closure(const Formula& a);

// Propositional skeleton: maximal subformulas whose top symbol is not a
// propositional connective become placeholder atoms X0, X1, ... Identical
// subformulas share a placeholder.
struct Skeleton {
  Formula shape;
  std::vector<Formula> atoms;
};

Skeleton skeleton(const Formula& a);
Formula recompose(const Skeleton& s);

// Truth-table evaluation of a skeleton shape under an assignment to its
// placeholders (bit i is the value of Xi).
bool evaluate_skeleton(const Formula& shape, std::uint64_t assignment);

}  // namespace folbox

#endif  // FOLBOX_SYNTAX_HPP_
