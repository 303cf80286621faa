#include "folbox/formula.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace folbox {

bool is_binary(Kind k) {
  return k == Kind::Impl || k == Kind::And || k == Kind::Or || k == Kind::Iff;
}

bool is_binder(Kind k) { return k == Kind::Forall || k == Kind::Exists; }

bool is_modal(Kind k) { return k == Kind::Box || k == Kind::Diamond; }

Formula Formula::make(Kind kind, std::string name, std::vector<Var> args,
                      std::vector<Formula> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->args = std::move(args);
  n->children = std::move(children);
  for (const Formula& c : n->children) {
    n->size += c.size();
    n->modal_depth = std::max(n->modal_depth, c.modal_depth());
    n->height = std::max(n->height, c.height() + 1);
  }
  if (is_modal(kind)) ++n->modal_depth;
  return Formula(std::move(n));
}

Formula atom(std::string predicate, std::vector<Var> args) {
  if (predicate.empty()) throw std::invalid_argument("empty predicate name");
  return Formula::make(Kind::Atom, std::move(predicate), std::move(args), {});
}

Formula eq(Var x, Var y) { return Formula::make(Kind::Eq, {}, {std::move(x), std::move(y)}, {}); }
Formula neg(Formula a) { return Formula::make(Kind::Not, {}, {}, {std::move(a)}); }
Formula imp(Formula a, Formula b) {
  return Formula::make(Kind::Impl, {}, {}, {std::move(a), std::move(b)});
}
Formula conj(Formula a, Formula b) {
  return Formula::make(Kind::And, {}, {}, {std::move(a), std::move(b)});
}
Formula disj(Formula a, Formula b) {
  return Formula::make(Kind::Or, {}, {}, {std::move(a), std::move(b)});
}
Formula iff(Formula a, Formula b) {
  return Formula::make(Kind::Iff, {}, {}, {std::move(a), std::move(b)});
}
Formula forall(Var x, Formula a) {
  return Formula::make(Kind::Forall, {}, {std::move(x)}, {std::move(a)});
}
Formula exists(Var x, Formula a) {
  return Formula::make(Kind::Exists, {}, {std::move(x)}, {std::move(a)});
}
Formula box(Formula a) { return Formula::make(Kind::Box, {}, {}, {std::move(a)}); }
Formula diamond(Formula a) { return Formula::make(Kind::Diamond, {}, {}, {std::move(a)}); }

Formula rebuild(const Formula& shape, std::vector<Formula> children) {
  switch (shape.kind()) {
    case Kind::Atom:
    case Kind::Eq:
      return shape;
    case Kind::Forall:
    case Kind::Exists:
      return Formula::make(shape.kind(), {}, {shape.bound()}, std::move(children));
    default:
      return Formula::make(shape.kind(), {}, {}, std::move(children));
  }
}

Formula conj_all(std::span<const Formula> parts) {
  assert(!parts.empty());
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula disj_all(std::span<const Formula> parts) {
  assert(!parts.empty());
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

Formula verum() { return forall(Var{"x"}, eq(Var{"x"}, Var{"x"})); }
Formula falsum() { return neg(verum()); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.args <=> y.args; c != 0) return c;
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace folbox
