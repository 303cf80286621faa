#include "support/mutation.hpp"

#include <algorithm>
#include <array>

#include "folbox/documents.hpp"
#include "folbox/syntax.hpp"

namespace folbox::testing {
namespace {

const std::array<const char*, 5> kVars{"x", "y", "z", "u", "w"};

Var other_var(Gen& gen, const Var& v) {
  for (;;) {
    Var w{kVars[gen.below(kVars.size())]};
    if (w != v) return w;
  }
}

std::vector<Formula> children(const Formula& a) {
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::Eq:
      return {};
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
    case Kind::Forall:
    case Kind::Exists:
      return {a.operand()};
    default:
      return {a.lhs(), a.rhs()};
  }
}

Formula binary(Kind k, Formula l, Formula r) {
  switch (k) {
    case Kind::Impl: return imp(std::move(l), std::move(r));
    case Kind::And: return conj(std::move(l), std::move(r));
    case Kind::Or: return disj(std::move(l), std::move(r));
    default: return iff(std::move(l), std::move(r));
  }
}

Formula mutate_node(Gen& gen, const Formula& a) {
  switch (a.kind()) {
    case Kind::Atom: {
      std::vector<Var> args(a.args().begin(), a.args().end());
      if (args.empty() || gen.chance(0.5)) return atom(a.predicate_name() + "Mut", args);
      const std::size_t i = gen.below(args.size());
      args[i] = other_var(gen, args[i]);
      return atom(a.predicate_name(), args);
    }
    case Kind::Eq:
      if (gen.chance(0.5)) return eq(other_var(gen, a.args()[0]), a.args()[1]);
      return eq(a.args()[0], other_var(gen, a.args()[1]));
    case Kind::Not:
      return gen.chance(0.5) ? a.operand() : box(a.operand());
    case Kind::Box:
      return gen.chance(0.5) ? a.operand() : diamond(a.operand());
    case Kind::Diamond:
      return gen.chance(0.5) ? a.operand() : box(a.operand());
    case Kind::Forall:
      if (gen.chance(0.5)) return exists(a.bound(), a.operand());
      return forall(other_var(gen, a.bound()), a.operand());
    case Kind::Exists:
      if (gen.chance(0.5)) return forall(a.bound(), a.operand());
      return exists(other_var(gen, a.bound()), a.operand());
    default: {
      if (gen.chance(0.25)) return rebuild(a, {a.rhs(), a.lhs()});
      static const std::array<Kind, 4> kinds{Kind::Impl, Kind::And, Kind::Or, Kind::Iff};
      Kind k = a.kind();
      while (k == a.kind()) k = kinds[gen.below(kinds.size())];
      return binary(k, a.lhs(), a.rhs());
    }
  }
}

// Replaces the node at pre-order position `target`.
Formula mutate_at(Gen& gen, const Formula& a, std::size_t& target) {
  if (target == 0) return mutate_node(gen, a);
  --target;
  std::vector<Formula> kids = children(a);
  for (Formula& k : kids) {
    if (target < k.size()) {
      k = mutate_at(gen, k, target);
      return rebuild(a, std::move(kids));
    }
    target -= k.size();
  }
  return a;
}

}  // namespace

Formula mutate(Gen& gen, const Formula& a) {
  const Formula lowered = lower_duals(a);
  for (;;) {
    std::size_t target = gen.below(a.size());
    Formula b = mutate_at(gen, a, target);
    if (lower_duals(b) != lowered) return b;
  }
}

Mutant mutate_derivation(Gen& gen, const Derivation& d) {
  Mutant m{d, gen.below(d.lines.size()), d.lines.front().formula, d.lines.front().formula};
  m.before = d.lines[m.line].formula;
  m.after = mutate(gen, m.before);
  m.derivation.lines[m.line].formula = m.after;
  return m;
}

std::vector<NamedDerivation> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedDerivation> out;
  for (const auto& p : files) {
    out.push_back({p.stem().string(), parse_derivation(read_json_file(p))});
  }
  return out;
}

}  // namespace folbox::testing
