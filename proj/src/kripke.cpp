#include "folbox/kripke.hpp"

#include <algorithm>
#include <unordered_map>

#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"

namespace folbox {

Structure::Structure(std::vector<std::string> worlds,
                     std::vector<std::vector<std::string>> domains,
                     std::map<Predicate, Extension> interpretation)
    : worlds_(std::move(worlds)),
      domains_(std::move(domains)),
      interpretation_(std::move(interpretation)) {
  if (worlds_.empty()) throw DomainError("a structure needs at least one world");
  if (domains_.size() != worlds_.size()) {
    throw DomainError("expected one domain per world");
  }
  std::set<std::string> names(worlds_.begin(), worlds_.end());
  if (names.size() != worlds_.size()) throw DomainError("duplicate world name");
  for (WorldId w = 0; w < worlds_.size(); ++w) {
    const auto& d = domains_[w];
    if (d.empty()) throw DomainError("empty domain at world " + worlds_[w]);
    std::set<std::string> elems(d.begin(), d.end());
    if (elems.size() != d.size()) throw DomainError("duplicate element at world " + worlds_[w]);
    defaults_.push_back(static_cast<ElemId>(std::min_element(d.begin(), d.end()) - d.begin()));
  }
  for (auto& [p, ext] : interpretation_) {
    ext.resize(worlds_.size());
    for (WorldId w = 0; w < worlds_.size(); ++w) {
      for (const Tuple& t : ext[w]) {
        if (t.size() != p.arity) {
          throw ArityError("tuple of length " + std::to_string(t.size()) + " for " + p.key());
        }
        for (ElemId e : t) {
          if (e >= domains_[w].size()) {
            throw DomainError("tuple for " + p.key() + " leaves the domain of " + worlds_[w]);
          }
        }
      }
    }
  }
}

WorldId Structure::world(const std::string& name) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end()) throw UnknownWorld("unknown world " + name);
  return static_cast<WorldId>(it - worlds_.begin());
}

ElemId Structure::element(WorldId w, const std::string& name) const {
  const auto& d = domain(w);
  auto it = std::find(d.begin(), d.end(), name);
  if (it == d.end()) {
    throw DomainError("element " + name + " is not in the domain of " + worlds_[w]);
  }
  return static_cast<ElemId>(it - d.begin());
}

bool Structure::holds(const Predicate& p, WorldId w, const Tuple& args) const {
  auto it = interpretation_.find(p);
  if (it == interpretation_.end()) return false;
  return it->second[w].count(args) > 0;
}

std::optional<ElemId> Valuation::lookup(WorldId w, const Var& x) const {
  auto it = entries_.find({w, x});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ElemId Valuation::value(const Structure& s, WorldId w, const Var& x) const {
  if (auto e = lookup(w, x)) return *e;
  return s.default_element(w);
}

void Valuation::check(const Structure& s) const {
  for (const auto& [key, e] : entries_) {
    if (key.first >= s.world_count()) throw UnknownWorld("valuation refers to an unknown world");
    if (e >= s.domain_size(key.first)) {
      throw DomainError("valuation of " + key.second.name + " leaves the domain of " +
                        s.world_name(key.first));
    }
  }
}

namespace {

// Iterates over all assignments of `vars` into D_w.
class Assignments {
 public:
  Assignments(std::size_t n_vars, std::size_t domain_size)
      : digits_(n_vars, 0), base_(domain_size) {}
  const std::vector<ElemId>& current() const { return digits_; }
  bool advance() {
    for (auto& d : digits_) {
      if (++d < base_) return true;
      d = 0;
    }
    return false;
  }

 private:
  std::vector<ElemId> digits_;
  std::size_t base_;
};

class Evaluator {
 public:
  explicit Evaluator(const Structure& s) : s_(s) {}

  bool eval(const Formula& a, WorldId w, const Valuation& base) {
    frame_.clear();
    return walk(a, w, base);
  }

 private:
  ElemId lookup(const Var& x, WorldId w, const Valuation& base) const {
    for (auto it = frame_.rbegin(); it != frame_.rend(); ++it) {
      if (*it->first == x) return it->second;
    }
    return base.value(s_, w, x);
  }

  bool walk(const Formula& a, WorldId w, const Valuation& base) {
    switch (a.kind()) {
      case Kind::Atom: {
        Tuple t;
        t.reserve(a.args().size());
        for (const Var& x : a.args()) t.push_back(lookup(x, w, base));
        return s_.holds(a.predicate(), w, t);
      }
      case Kind::Eq:
        return lookup(a.args()[0], w, base) == lookup(a.args()[1], w, base);
      case Kind::Not:
        return !walk(a.operand(), w, base);
      case Kind::Impl:
        return !walk(a.lhs(), w, base) || walk(a.rhs(), w, base);
      case Kind::And:
        return walk(a.lhs(), w, base) && walk(a.rhs(), w, base);
      case Kind::Or:
        return walk(a.lhs(), w, base) || walk(a.rhs(), w, base);
      case Kind::Iff:
        return walk(a.lhs(), w, base) == walk(a.rhs(), w, base);
      case Kind::Forall:
      case Kind::Exists: {
        const bool universal = a.kind() == Kind::Forall;
        frame_.emplace_back(&a.bound(), 0);
        const std::size_t slot = frame_.size() - 1;
        bool result = universal;
        for (ElemId e = 0; e < s_.domain_size(w); ++e) {
          frame_[slot].second = e;
          if (walk(a.operand(), w, base) != universal) {
            result = !universal;
            break;
          }
        }
        frame_.resize(slot);
        return result;
      }
      case Kind::Box:
      case Kind::Diamond:
        return modal(a);
    }
    return false;
  }

  // Box quantifies over every world and every valuation, so its value does
  // not depend on the evaluation point. Only the body's free variables need
  // enumerating.
  bool modal(const Formula& a) {
    if (auto it = cache_.find(a.id()); it != cache_.end()) return it->second;
    const bool universal = a.kind() == Kind::Box;
    const Formula& body = a.operand();
    const std::set<Var> fv = forallbox_free_vars(body);
    const std::vector<Var> vars(fv.begin(), fv.end());

    auto saved = std::move(frame_);
    frame_.clear();
    const Valuation empty;
    bool result = universal;
    for (WorldId w = 0; w < s_.world_count() && result == universal; ++w) {
      Assignments it(vars.size(), s_.domain_size(w));
      do {
        frame_.clear();
        for (std::size_t i = 0; i < vars.size(); ++i) frame_.emplace_back(&vars[i], it.current()[i]);
        if (walk(body, w, empty) != universal) {
          result = !universal;
          break;
        }
      } while (it.advance());
    }
    frame_ = std::move(saved);
    cache_.emplace(a.id(), result);
    return result;
  }

  const Structure& s_;
  std::vector<std::pair<const Var*, ElemId>> frame_;
  std::unordered_map<const void*, bool> cache_;
};

}  // namespace

bool satisfies(const Structure& s, const Valuation& v, WorldId w, const Formula& a) {
  if (w >= s.world_count()) throw UnknownWorld("world index out of range");
  v.check(s);
  return Evaluator(s).eval(a, w, v);
}

bool satisfies(const Structure& s, const Valuation& v, const std::string& world,
               const Formula& a) {
  return satisfies(s, v, s.world(world), a);
}

bool satisfies(const PointedModel& m, const Formula& a) {
  return satisfies(m.structure, m.valuation, m.world, a);
}

std::optional<PointedModel> find_falsifier(const Structure& s, const Formula& a) {
  const std::set<Var> fv = forallbox_free_vars(a);
  const std::vector<Var> vars(fv.begin(), fv.end());
  Evaluator ev(s);
  for (WorldId w = 0; w < s.world_count(); ++w) {
    Assignments it(vars.size(), s.domain_size(w));
    do {
      Valuation v;
      for (std::size_t i = 0; i < vars.size(); ++i) v.assign(w, vars[i], it.current()[i]);
      if (!ev.eval(a, w, v)) return PointedModel{s, w, v};
    } while (it.advance());
  }
  return std::nullopt;
}

bool valid_in(const Structure& s, const Formula& a) { return !find_falsifier(s, a).has_value(); }

Structure build_relative_universal(std::span<const UniversalSeed> seeds) {
  if (seeds.empty()) return Structure({"w0"}, {{"a"}}, {});
  std::vector<std::string> worlds;
  std::vector<std::vector<std::string>> domains;
  std::map<Predicate, Structure::Extension> interp;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const UniversalSeed& seed = seeds[i];
    if (!box_free(seed.formula)) {
      throw CertificateError("seed formula " + std::to_string(i) + " contains a modality");
    }
    const PointedModel& cert = seed.certificate;
    if (satisfies(cert, seed.formula)) {
      throw CertificateError("certificate " + std::to_string(i) +
                             " does not falsify its seed formula");
    }
    worlds.push_back("w" + std::to_string(i));
    domains.push_back(cert.structure.domain(cert.world));
    for (const auto& [p, ext] : cert.structure.interpretation()) {
      auto& target = interp[p];
      target.resize(seeds.size());
      target[i] = ext[cert.world];
    }
  }
  return Structure(std::move(worlds), std::move(domains), std::move(interp));
}

}  // namespace folbox
