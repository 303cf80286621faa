#include "folbox/syntax.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "folbox/errors.hpp"

namespace folbox {
namespace {

void collect_occurrences(const Formula& a, std::vector<Var>& bound, bool under_modal,
                         std::vector<Occurrence>& out) {
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::Eq:
      for (const Var& v : a.args()) {
        const bool is_bound =
            under_modal || std::find(bound.begin(), bound.end(), v) != bound.end();
        out.push_back({v, is_bound ? OccurrenceClass::ForallBoxBound
                                   : OccurrenceClass::ForallBoxFree});
      }
      return;
    case Kind::Forall:
    case Kind::Exists:
      bound.push_back(a.bound());
      collect_occurrences(a.operand(), bound, under_modal, out);
      bound.pop_back();
      return;
    case Kind::Box:
    case Kind::Diamond:
      collect_occurrences(a.operand(), bound, true, out);
      return;
    case Kind::Not:
      collect_occurrences(a.operand(), bound, under_modal, out);
      return;
    default:
      collect_occurrences(a.lhs(), bound, under_modal, out);
      collect_occurrences(a.rhs(), bound, under_modal, out);
      return;
  }
}

void collect_classical_free(const Formula& a, std::vector<Var>& bound, std::set<Var>& out) {
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::Eq:
      for (const Var& v : a.args()) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
      }
      return;
    case Kind::Forall:
    case Kind::Exists:
      bound.push_back(a.bound());
      collect_classical_free(a.operand(), bound, out);
      bound.pop_back();
      return;
    case Kind::Box:
    case Kind::Diamond:
    case Kind::Not:
      collect_classical_free(a.operand(), bound, out);
      return;
    default:
      collect_classical_free(a.lhs(), bound, out);
      collect_classical_free(a.rhs(), bound, out);
      return;
  }
}

// Shared walker for the two substitution entry points. `select` decides, for
// the n-th free occurrence of `from`, whether to replace it.
class Substituter {
 public:
  template <class Select>
  Substituter(const Var& from, const Var& to, Select select)
      : from_(from), to_(to), select_(std::move(select)) {}

  Formula run(const Formula& a) { return walk(a); }

 private:
  Formula walk(const Formula& a) {
    switch (a.kind()) {
      case Kind::Atom:
      case Kind::Eq: {
        std::vector<Var> args(a.args().begin(), a.args().end());
        bool changed = false;
        for (Var& v : args) {
          if (v != from_) continue;
          if (select_(seen_++)) {
            if (std::find(bound_.begin(), bound_.end(), to_) != bound_.end()) {
              throw CaptureError("variable " + to_.name + " is captured when replacing " +
                                 from_.name);
            }
            v = to_;
            changed = true;
          }
        }
        if (!changed) return a;
        return a.kind() == Kind::Eq ? eq(args[0], args[1]) : atom(a.predicate_name(), args);
      }
      case Kind::Box:
      case Kind::Diamond:
        return a;
      case Kind::Forall:
      case Kind::Exists: {
        if (a.bound() == from_) return a;
        bound_.push_back(a.bound());
        Formula body = walk(a.operand());
        bound_.pop_back();
        return rebuild(a, {body});
      }
      case Kind::Not:
        return neg(walk(a.operand()));
      default: {
        Formula l = walk(a.lhs());
        Formula r = walk(a.rhs());
        return rebuild(a, {l, r});
      }
    }
  }

  Var from_;
  Var to_;
  std::function<bool(std::size_t)> select_;
  std::vector<Var> bound_;
  std::size_t seen_ = 0;
};

Formula lower_impl(const Formula& a, bool only_duals) {
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::Eq:
      return a;
    case Kind::Not:
      return neg(lower_impl(a.operand(), only_duals));
    case Kind::Box:
      return box(lower_impl(a.operand(), only_duals));
    case Kind::Diamond:
      return neg(box(neg(lower_impl(a.operand(), only_duals))));
    case Kind::Forall:
      return forall(a.bound(), lower_impl(a.operand(), only_duals));
    case Kind::Exists:
      return neg(forall(a.bound(), neg(lower_impl(a.operand(), only_duals))));
    case Kind::Impl:
      return imp(lower_impl(a.lhs(), only_duals), lower_impl(a.rhs(), only_duals));
    default:
      break;
  }
  Formula l = lower_impl(a.lhs(), only_duals);
  Formula r = lower_impl(a.rhs(), only_duals);
  if (only_duals) return rebuild(a, {l, r});
  switch (a.kind()) {
    case Kind::And:
      return neg(imp(l, neg(r)));
    case Kind::Or:
      return imp(neg(l), r);
    default:  // Iff
      return neg(imp(imp(l, r), neg(imp(r, l))));
  }
}

void collect_signature(const Formula& a, std::map<std::string, std::size_t>& seen) {
  switch (a.kind()) {
    case Kind::Atom: {
      auto [it, fresh] = seen.emplace(a.predicate_name(), a.args().size());
      if (!fresh && it->second != a.args().size()) {
        throw ArityError("predicate " + a.predicate_name() + " used with arities " +
                         std::to_string(it->second) + " and " +
                         std::to_string(a.args().size()));
      }
      return;
    }
    case Kind::Eq:
      return;
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
    case Kind::Forall:
    case Kind::Exists:
      collect_signature(a.operand(), seen);
      return;
    default:
      collect_signature(a.lhs(), seen);
      collect_signature(a.rhs(), seen);
  }
}

bool is_connective(Kind k) { return k == Kind::Not || is_binary(k); }

Formula placeholder(std::size_t i) { return atom("X" + std::to_string(i), {}); }

Formula skeletonize(const Formula& a, std::map<Formula, std::size_t>& index,
                    std::vector<Formula>& atoms) {
  if (!is_connective(a.kind())) {
    auto [it, fresh] = index.emplace(a, atoms.size());
    if (fresh) atoms.push_back(a);
    return placeholder(it->second);
  }
  if (a.kind() == Kind::Not) return neg(skeletonize(a.operand(), index, atoms));
  Formula l = skeletonize(a.lhs(), index, atoms);
  Formula r = skeletonize(a.rhs(), index, atoms);
  return rebuild(a, {l, r});
}

Formula fill(const Formula& shape, const std::vector<Formula>& atoms) {
  if (shape.kind() == Kind::Atom) {
    return atoms.at(std::stoul(shape.predicate_name().substr(1)));
  }
  if (shape.kind() == Kind::Not) return neg(fill(shape.operand(), atoms));
  return rebuild(shape, {fill(shape.lhs(), atoms), fill(shape.rhs(), atoms)});
}

}  // namespace

bool box_free(const Formula& a) { return a.modal_depth() == 0; }

std::vector<Occurrence> occurrences(const Formula& a) {
  std::vector<Occurrence> out;
  std::vector<Var> bound;
  collect_occurrences(a, bound, false, out);
  return out;
}

std::set<Var> forallbox_free_vars(const Formula& a) {
  std::set<Var> out;
  for (const Occurrence& o : occurrences(a)) {
    if (o.cls == OccurrenceClass::ForallBoxFree) out.insert(o.var);
  }
  return out;
}

std::set<Var> free_vars(const Formula& a) {
  std::set<Var> out;
  std::vector<Var> bound;
  collect_classical_free(a, bound, out);
  return out;
}

std::set<Var> all_vars(const Formula& a) {
  std::set<Var> out;
  for (const Occurrence& o : occurrences(a)) out.insert(o.var);
  // Binder variables count too, even when vacuous.
  std::vector<Formula> stack{a};
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (is_binder(f.kind())) out.insert(f.bound());
    if (f.kind() == Kind::Atom || f.kind() == Kind::Eq) continue;
    if (is_binary(f.kind())) {
      stack.push_back(f.lhs());
      stack.push_back(f.rhs());
    } else {
      stack.push_back(f.operand());
    }
  }
  return out;
}

Formula substitute(const Formula& a, const Var& from, const Var& to) {
  if (from == to) return a;
  return Substituter(from, to, [](std::size_t) { return true; }).run(a);
}

Formula substitute_some(const Formula& a, const Var& from, const Var& to,
                        std::span<const std::size_t> selected) {
  const std::size_t available = count_free_occurrences(a, from);
  for (std::size_t i : selected) {
    if (i >= available) {
      throw Error("occurrence index " + std::to_string(i) + " out of range: " + from.name +
                  " has " + std::to_string(available) + " free occurrences");
    }
  }
  std::set<std::size_t> chosen(selected.begin(), selected.end());
  return Substituter(from, to, [&chosen](std::size_t n) { return chosen.count(n) > 0; }).run(a);
}

std::size_t count_free_occurrences(const Formula& a, const Var& x) {
  std::size_t n = 0;
  for (const Occurrence& o : occurrences(a)) {
    if (o.var == x && o.cls == OccurrenceClass::ForallBoxFree) ++n;
  }
  return n;
}

Formula lower(const Formula& a) { return lower_impl(a, false); }

Formula lower_duals(const Formula& a) { return lower_impl(a, true); }

std::vector<Predicate> signature(const Formula& a) {
  std::map<std::string, std::size_t> seen;
  collect_signature(a, seen);
  std::vector<Predicate> out;
  for (const auto& [name, arity] : seen) out.push_back({name, arity});
  return out;
}

Formula universal_closure(const Formula& a) {
  std::set<Var> fv = forallbox_free_vars(a);
  Formula out = a;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = forall(*it, out);
  return out;
}

Formula existential_closure(const Formula& a) {
  std::set<Var> fv = forallbox_free_vars(a);
  Formula out = a;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = exists(*it, out);
  return out;
}

Skeleton skeleton(const Formula& a) {
  std::map<Formula, std::size_t> index;
  Skeleton s{a, {}};
  s.shape = skeletonize(a, index, s.atoms);
  return s;
}

Formula recompose(const Skeleton& s) { return fill(s.shape, s.atoms); }

bool evaluate_skeleton(const Formula& shape, std::uint64_t assignment) {
  switch (shape.kind()) {
    case Kind::Atom:
      return (assignment >> std::stoul(shape.predicate_name().substr(1))) & 1u;
    case Kind::Not:
      return !evaluate_skeleton(shape.operand(), assignment);
    case Kind::Impl:
      return !evaluate_skeleton(shape.lhs(), assignment) ||
             evaluate_skeleton(shape.rhs(), assignment);
    case Kind::And:
      return evaluate_skeleton(shape.lhs(), assignment) &&
             evaluate_skeleton(shape.rhs(), assignment);
    case Kind::Or:
      return evaluate_skeleton(shape.lhs(), assignment) ||
             evaluate_skeleton(shape.rhs(), assignment);
    case Kind::Iff:
      return evaluate_skeleton(shape.lhs(), assignment) ==
             evaluate_skeleton(shape.rhs(), assignment);
    default:
      throw Error("not a skeleton shape");
  }
}

}  // namespace folbox
