#include "brute_force.hpp"

#include <stdexcept>

#include "folbox/syntax.hpp"

namespace folbox::testing {

bool classical_holds(const Formula& a, const ClassicalModel& m, std::map<Var, std::size_t>& env) {
  switch (a.kind()) {
    case Kind::Atom: {
      std::vector<std::size_t> t;
      for (const Var& x : a.args()) t.push_back(env.at(x));
      auto it = m.ext.find(a.predicate_name());
      return it != m.ext.end() && it->second.count(t);
    }
    case Kind::Eq:
      return env.at(a.args()[0]) == env.at(a.args()[1]);
    case Kind::Not:
      return !classical_holds(a.operand(), m, env);
    case Kind::Impl:
      return !classical_holds(a.lhs(), m, env) || classical_holds(a.rhs(), m, env);
    case Kind::And:
      return classical_holds(a.lhs(), m, env) && classical_holds(a.rhs(), m, env);
    case Kind::Or:
      return classical_holds(a.lhs(), m, env) || classical_holds(a.rhs(), m, env);
    case Kind::Iff:
      return classical_holds(a.lhs(), m, env) == classical_holds(a.rhs(), m, env);
    case Kind::Forall:
    case Kind::Exists: {
      const Var& x = a.bound();
      const auto saved = env.find(x) == env.end() ? std::nullopt : std::optional(env[x]);
      const bool universal = a.kind() == Kind::Forall;
      bool result = universal;
      for (std::size_t e = 0; e < m.size; ++e) {
        env[x] = e;
        if (classical_holds(a.operand(), m, env) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved) env[x] = *saved; else env.erase(x);
      return result;
    }
    default:
      throw std::logic_error("classical_holds: modal formula");
  }
}

namespace {

// All subsets of the n^arity tuples, as extensions.
std::vector<std::set<std::vector<std::size_t>>> all_extensions(std::size_t n, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  if (total > 20) throw std::logic_error("for_each_model: too many tuples");
  std::vector<std::set<std::vector<std::size_t>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    std::set<std::vector<std::size_t>> ext;
    for (std::size_t code = 0; code < total; ++code) {
      if (!((mask >> code) & 1u)) continue;
      std::vector<std::size_t> t;
      for (std::size_t i = 0, c = code; i < arity; ++i, c /= n) t.push_back(c % n);
      ext.insert(t);
    }
    out.push_back(ext);
  }
  return out;
}

}  // namespace

void for_each_model(const std::vector<Predicate>& sig, std::size_t max_size,
                    const std::function<bool(const ClassicalModel&)>& visit) {
  std::vector<std::string> unary;
  std::vector<Predicate> other;
  for (const Predicate& p : sig) {
    if (p.arity == 1) unary.push_back(p.name);
    else other.push_back(p);
  }
  const std::size_t cells = std::size_t{1} << unary.size();
  for (std::size_t n = 1; n <= max_size; ++n) {
    // Non-decreasing cell sequences c_0 <= ... <= c_{n-1}.
    std::vector<std::size_t> cell(n, 0);
    while (true) {
      ClassicalModel base{n, {}};
      for (std::size_t i = 0; i < unary.size(); ++i) {
        auto& ext = base.ext[unary[i]];
        for (std::size_t e = 0; e < n; ++e) {
          if ((cell[e] >> i) & 1u) ext.insert({e});
        }
      }
      std::vector<std::vector<std::set<std::vector<std::size_t>>>> choices;
      for (const Predicate& p : other) choices.push_back(all_extensions(n, p.arity));
      std::vector<std::size_t> pick(other.size(), 0);
      while (true) {
        ClassicalModel m = base;
        for (std::size_t i = 0; i < other.size(); ++i) m.ext[other[i].name] = choices[i][pick[i]];
        if (!visit(m)) return;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < choices[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
      // Next non-decreasing sequence.
      std::size_t j = n;
      while (j > 0 && cell[j - 1] == cells - 1) --j;
      if (j == 0) break;
      ++cell[j - 1];
      for (std::size_t k = j; k < n; ++k) cell[k] = cell[j - 1];
    }
  }
}

namespace {

std::optional<std::size_t> smallest_size_with(const Formula& a, std::size_t max_size, bool value) {
  std::vector<Predicate> sig = signature(a);
  const std::set<Var> fv = free_vars(a);
  const std::vector<Var> vars(fv.begin(), fv.end());
  std::optional<std::size_t> found;
  for_each_model(sig, max_size, [&](const ClassicalModel& m) {
    std::vector<std::size_t> digits(vars.size(), 0);
    while (true) {
      std::map<Var, std::size_t> env;
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = digits[i];
      if (classical_holds(a, m, env) == value) {
        found = m.size;
        return false;
      }
      std::size_t i = 0;
      for (; i < digits.size(); ++i) {
        if (++digits[i] < m.size) break;
        digits[i] = 0;
      }
      if (i == digits.size()) return true;
    }
  });
  return found;
}

}  // namespace

std::optional<std::size_t> smallest_falsifying_size(const Formula& a, std::size_t max_size) {
  return smallest_size_with(a, max_size, false);
}

std::optional<std::size_t> smallest_satisfying_size(const Formula& a, std::size_t max_size) {
  return smallest_size_with(a, max_size, true);
}

}  // namespace folbox::testing
