#include "folbox/oracle.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

#include "folbox/documents.hpp"
#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"
#include "folbox/text.hpp"

namespace folbox {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Thesis:
      return "thesis";
    case Verdict::NonThesis:
      return "non-thesis";
    case Verdict::Satisfiable:
      return "satisfiable";
    case Verdict::Unsatisfiable:
      return "unsatisfiable";
  }
  return "?";
}

bool fragment_check(const Formula& a) {
  if (!box_free(a)) return false;
  try {
    for (const Predicate& p : signature(a)) {
      if (p.arity > 1) return false;
    }
  } catch (const ArityError&) {
    return false;
  }
  return true;
}

namespace {

struct Signature {
  std::vector<std::string> unary;    // sorted; bit i of a cell is unary[i]
  std::vector<std::string> nullary;  // sorted
};

Signature split_signature(const Formula& a) {
  Signature sig;
  for (const Predicate& p : signature(a)) {
    (p.arity == 0 ? sig.nullary : sig.unary).push_back(p.name);
  }
  return sig;
}

}  // namespace

std::size_t fmp_bound(const Formula& a) {
  const std::size_t k = split_signature(a).unary.size();
  const std::size_t q = all_vars(a).size();
  return (std::size_t{1} << k) * std::max<std::size_t>(q, 1);
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Cell counts known to lie within [lo, hi].
struct Box {
  std::vector<std::size_t> lo, hi;
};

enum class Tri { False, True, Split };

struct Outcome {
  Tri tri;
  std::size_t cell = 0;
  std::size_t at = 0;  // split into count <= at and count > at
};

Outcome negate(Outcome o) {
  if (o.tri != Tri::Split) o.tri = o.tri == Tri::True ? Tri::False : Tri::True;
  return o;
}

class BoxEvaluator {
 public:
  BoxEvaluator(const Signature& sig, const Box& box, std::uint64_t nullary_bits)
      : box_(box) {
    for (std::size_t i = 0; i < sig.unary.size(); ++i) bit_[sig.unary[i]] = i;
    for (std::size_t i = 0; i < sig.nullary.size(); ++i) {
      nullary_[sig.nullary[i]] = (nullary_bits >> i) & 1u;
    }
  }

  Outcome eval(const Formula& a) {
    switch (a.kind()) {
      case Kind::Atom:
        if (a.args().empty()) return truth(nullary_.at(a.predicate_name()));
        return truth((lookup(a.args()[0]).cell >> bit_.at(a.predicate_name())) & 1u);
      case Kind::Eq:
        return truth(lookup(a.args()[0]).id == lookup(a.args()[1]).id);
      case Kind::Not:
        return negate(eval(a.operand()));
      case Kind::Impl:
      case Kind::And:
      case Kind::Or: {
        // Short-circuit on the left value that decides the connective.
        const Outcome l = eval(a.lhs());
        if (l.tri == Tri::Split) return l;
        const bool lv = l.tri == Tri::True;
        if (a.kind() == Kind::Impl && !lv) return truth(true);
        if (a.kind() == Kind::And && !lv) return truth(false);
        if (a.kind() == Kind::Or && lv) return truth(true);
        return eval(a.rhs());
      }
      case Kind::Iff: {
        const Outcome l = eval(a.lhs());
        if (l.tri == Tri::Split) return l;
        const Outcome r = eval(a.rhs());
        if (r.tri == Tri::Split) return r;
        return truth(l.tri == r.tri);
      }
      case Kind::Forall:
      case Kind::Exists:
        return quantify(a);
      case Kind::Box:
      case Kind::Diamond:
        break;
    }
    throw std::logic_error("modal formula reached the oracle");
  }

 private:
  struct Element {
    std::size_t id;
    std::size_t cell;
  };
  struct Binding {
    const Var* var;
    Element elem;
  };

  static Outcome truth(bool b) { return {b ? Tri::True : Tri::False}; }

  Element lookup(const Var& x) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (*it->var == x) return it->elem;
    }
    throw std::logic_error("unbound variable " + x.name + " in closed formula");
  }

  // x ranges over the elements named by other visible variables plus one
  // representative of each cell that still has an unnamed element.
  Outcome quantify(const Formula& a) {
    const bool universal = a.kind() == Kind::Forall;
    const Var& x = a.bound();

    std::vector<Element> named;
    std::vector<const Var*> seen;
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      bool shadowed = *it->var == x;
      for (const Var* v : seen) shadowed = shadowed || *v == *it->var;
      seen.push_back(it->var);
      if (shadowed) continue;
      bool dup = false;
      for (const Element& e : named) dup = dup || e.id == it->elem.id;
      if (!dup) named.push_back(it->elem);
    }

    std::optional<Outcome> pending;
    auto consider = [&](Element e) -> std::optional<Outcome> {
      env_.push_back({&x, e});
      const Outcome o = eval(a.operand());
      env_.pop_back();
      if (o.tri == Tri::Split) {
        if (!pending) pending = o;
        return std::nullopt;
      }
      if ((o.tri == Tri::True) != universal) return truth(!universal);
      return std::nullopt;
    };

    for (const Element& e : named) {
      if (auto r = consider(e)) return *r;
    }
    const std::size_t cells = box_.lo.size();
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t r = 0;
      for (const Element& e : named) r += e.cell == c;
      if (box_.lo[c] > r) {
        if (auto res = consider({next_id_++, c})) return *res;
      } else if (box_.hi[c] > r && !pending) {
        pending = Outcome{Tri::Split, c, r};
      }
    }
    if (pending) return *pending;
    return truth(universal);
  }

  const Box& box_;
  std::map<std::string, std::size_t> bit_;
  std::map<std::string, bool> nullary_;
  std::vector<Binding> env_;
  std::size_t next_id_ = 0;
};

struct CellModel {
  std::vector<std::size_t> counts;
  std::uint64_t nullary_bits = 0;
  std::size_t size() const {
    std::size_t n = 0;
    for (std::size_t c : counts) n += c;
    return n;
  }
};

// Smallest model of a closed fragment formula, if any.
std::optional<CellModel> smallest_model(const Formula& closed, const Signature& sig) {
  const std::size_t cells = std::size_t{1} << sig.unary.size();
  std::optional<CellModel> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << sig.nullary.size()); ++bits) {
    std::vector<Box> work{Box{std::vector<std::size_t>(cells, 0),
                              std::vector<std::size_t>(cells, kUnbounded)}};
    while (!work.empty()) {
      Box box = std::move(work.back());
      work.pop_back();
      std::size_t low = 0;
      bool nonempty = false;
      for (std::size_t c = 0; c < cells; ++c) {
        low += box.lo[c];
        nonempty = nonempty || box.hi[c] >= 1;
      }
      if (!nonempty) continue;
      if (best && std::max<std::size_t>(low, 1) >= best->size()) continue;

      const Outcome o = BoxEvaluator(sig, box, bits).eval(closed);
      if (o.tri == Tri::Split) {
        Box above = box;
        above.lo[o.cell] = o.at + 1;
        box.hi[o.cell] = o.at;
        work.push_back(std::move(above));
        work.push_back(std::move(box));  // smaller counts first
        continue;
      }
      if (o.tri == Tri::False) continue;
      CellModel m{box.lo, bits};
      if (low == 0) {
        for (std::size_t c = 0; c < cells; ++c) {
          if (box.hi[c] >= 1) {
            m.counts[c] = 1;
            break;
          }
        }
      }
      best = std::move(m);
    }
  }
  return best;
}

Structure materialize(const CellModel& m, const Formula& a, const Signature& sig) {
  std::vector<std::string> domain;
  std::vector<std::size_t> cell_of;
  for (std::size_t c = 0; c < m.counts.size(); ++c) {
    for (std::size_t i = 0; i < m.counts[c]; ++i) {
      domain.push_back(element_name(domain.size()));
      cell_of.push_back(c);
    }
  }
  std::map<Predicate, Structure::Extension> interp;
  for (const Predicate& p : signature(a)) {
    std::set<Tuple> ext;
    if (p.arity == 0) {
      const auto i = std::find(sig.nullary.begin(), sig.nullary.end(), p.name) - sig.nullary.begin();
      if ((m.nullary_bits >> i) & 1u) ext.insert(Tuple{});
    } else {
      const auto bit = std::find(sig.unary.begin(), sig.unary.end(), p.name) - sig.unary.begin();
      for (ElemId e = 0; e < domain.size(); ++e) {
        if ((cell_of[e] >> bit) & 1u) ext.insert(Tuple{e});
      }
    }
    interp[p] = Structure::Extension{ext};
  }
  return Structure({"w0"}, {domain}, std::move(interp));
}

// A point of `s` satisfying `target`, found by trying every valuation of
// its free variables.
PointedModel certify(Structure s, const Formula& target) {
  const std::set<Var> fv = forallbox_free_vars(target);
  const std::vector<Var> vars(fv.begin(), fv.end());
  const std::size_t n = s.domain_size(0);
  std::vector<ElemId> digits(vars.size(), 0);
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) v.assign(0, vars[i], digits[i]);
    if (satisfies(s, v, 0, target)) return PointedModel{std::move(s), 0, std::move(v)};
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < n) break;
      digits[i] = 0;
    }
    if (i == digits.size()) break;
  }
  throw std::logic_error("oracle model does not satisfy " + print_formula(target));
}

ClassicalVerdict decide_satisfiable(const Formula& a) {
  const Signature sig = split_signature(a);
  const std::optional<CellModel> m = smallest_model(existential_closure(a), sig);
  if (!m) return {Verdict::Unsatisfiable, std::nullopt};
  return {Verdict::Satisfiable, certify(materialize(*m, a, sig), a)};
}

void require_fragment(const Formula& a) {
  if (!fragment_check(a)) {
    throw FragmentError("outside the monadic modality-free fragment: " + print_formula(a));
  }
}

}  // namespace

ClassicalVerdict Oracle::is_satisfiable(const Formula& a) const {
  require_fragment(a);
  auto key = std::make_pair(print_formula(a), false);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  ClassicalVerdict v = decide_satisfiable(a);
  std::unique_lock lock(mutex_);
  return cache_.emplace(std::move(key), std::move(v)).first->second;
}

ClassicalVerdict Oracle::is_fol_thesis(const Formula& a) const {
  require_fragment(a);
  auto key = std::make_pair(print_formula(a), true);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  ClassicalVerdict counter = decide_satisfiable(neg(a));
  ClassicalVerdict v = counter.status == Verdict::Unsatisfiable
                           ? ClassicalVerdict{Verdict::Thesis, std::nullopt}
                           : ClassicalVerdict{Verdict::NonThesis, std::move(counter.certificate)};
  std::unique_lock lock(mutex_);
  return cache_.emplace(std::move(key), std::move(v)).first->second;
}

std::size_t Oracle::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

const Oracle& default_oracle() {
  static const Oracle oracle;
  return oracle;
}

}  // namespace folbox
