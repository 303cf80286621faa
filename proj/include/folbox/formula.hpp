#ifndef FOLBOX_FORMULA_HPP_
#define FOLBOX_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace folbox {

struct Var {
  std::string name;

  auto operator<=>(const Var&) const = default;
};

struct Predicate {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const Predicate&) const = default;
  std::string key() const { return name + "/" + std::to_string(arity); }
};

// Primitive cases are Atom, Eq, Not, Impl, Forall and Box. The remaining kinds
// are stored as written and denote their usual definitions:
//   A & B = ~(A -> ~B), A | B = ~A -> B, A <-> B = (A -> B) & (B -> A),
//   exists x. A = ~forall x. ~A, <>A = ~[]~A.
enum class Kind { Atom, Eq, Not, Impl, And, Or, Iff, Forall, Exists, Box, Diamond };

bool is_binary(Kind k);
bool is_binder(Kind k);
bool is_modal(Kind k);

// Immutable, structurally shared formula tree.
class Formula {
 public:
  Kind kind() const { return node_->kind; }

  // Atom only.
  const std::string& predicate_name() const { return node_->name; }
  Predicate predicate() const { return {node_->name, node_->args.size()}; }
  // Atom arguments, or the two sides of an Eq.
  std::span<const Var> args() const { return node_->args; }
  // Forall / Exists.
  const Var& bound() const { return node_->args.front(); }
  // Not, Box, Diamond, Forall, Exists.
  const Formula& operand() const { return node_->children.front(); }
  // Binary connectives.
  const Formula& lhs() const { return node_->children.front(); }
  const Formula& rhs() const { return node_->children.back(); }

  std::size_t size() const { return node_->size; }
  // Nesting depth of Box/Diamond.
  std::size_t modal_depth() const { return node_->modal_depth; }
  // Height of the tree; atoms have height 1.
  std::size_t height() const { return node_->height; }

  // Node identity, usable as a cache key for the lifetime of the formula.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

  friend Formula atom(std::string predicate, std::vector<Var> args);
  friend Formula eq(Var x, Var y);
  friend Formula neg(Formula a);
  friend Formula imp(Formula a, Formula b);
  friend Formula conj(Formula a, Formula b);
  friend Formula disj(Formula a, Formula b);
  friend Formula iff(Formula a, Formula b);
  friend Formula forall(Var x, Formula a);
  friend Formula exists(Var x, Formula a);
  friend Formula box(Formula a);
  friend Formula diamond(Formula a);
  friend Formula rebuild(const Formula& shape, std::vector<Formula> children);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Var> args;
    std::vector<Formula> children;
    std::size_t size = 1;
    std::size_t modal_depth = 0;
    std::size_t height = 1;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind kind, std::string name, std::vector<Var> args,
                      std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

Formula atom(std::string predicate, std::vector<Var> args);
Formula eq(Var x, Var y);
Formula neg(Formula a);
Formula imp(Formula a, Formula b);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula forall(Var x, Formula a);
Formula exists(Var x, Formula a);
Formula box(Formula a);
Formula diamond(Formula a);

// Rebuilds a node of the same kind as `shape` with new children.
Formula rebuild(const Formula& shape, std::vector<Formula> children);

// Left-nested conjunction/disjunction of a non-empty list.
Formula conj_all(std::span<const Formula> parts);
Formula disj_all(std::span<const Formula> parts);

// Closed formulas standing for truth and falsity, used for empty parts.
Formula verum();
Formula falsum();

}  // namespace folbox

#endif  // FOLBOX_FORMULA_HPP_
