#ifndef FOLBOX_KRIPKE_HPP_
#define FOLBOX_KRIPKE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folbox/formula.hpp"

namespace folbox {

using WorldId = std::size_t;
using ElemId = std::size_t;
using Tuple = std::vector<ElemId>;

// Finite variable-domain Kripke structure <W, {D_w}, I>. Immutable once
// constructed; the constructor enforces W != {}, D_w != {} and
// I(P, w) within D_w^n.
class Structure {
 public:
  using Extension = std::vector<std::set<Tuple>>;  // indexed by world

  Structure(std::vector<std::string> worlds, std::vector<std::vector<std::string>> domains,
            std::map<Predicate, Extension> interpretation);

  std::size_t world_count() const { return worlds_.size(); }
  const std::string& world_name(WorldId w) const { return worlds_.at(w); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  // Throws UnknownWorld.
  WorldId world(const std::string& name) const;

  const std::vector<std::string>& domain(WorldId w) const { return domains_.at(w); }
  std::size_t domain_size(WorldId w) const { return domains_.at(w).size(); }
  // Throws DomainError.
  ElemId element(WorldId w, const std::string& name) const;
  // Lexicographically least element name of D_w; the value of any
  // valuation entry left unspecified.
  ElemId default_element(WorldId w) const { return defaults_.at(w); }

  // Unlisted predicates have empty extensions everywhere.
  bool holds(const Predicate& p, WorldId w, const Tuple& args) const;
  const std::map<Predicate, Extension>& interpretation() const { return interpretation_; }

 private:
  std::vector<std::string> worlds_;
  std::vector<std::vector<std::string>> domains_;
  std::map<Predicate, Extension> interpretation_;
  std::vector<ElemId> defaults_;
};

// World-dependent assignment of elements to variables. Only finitely many
// entries are stored; the rest take Structure::default_element.
class Valuation {
 public:
  void assign(WorldId w, const Var& x, ElemId e) { entries_[{w, x}] = e; }
  std::optional<ElemId> lookup(WorldId w, const Var& x) const;
  ElemId value(const Structure& s, WorldId w, const Var& x) const;
  const std::map<std::pair<WorldId, Var>, ElemId>& entries() const { return entries_; }

  // Throws UnknownWorld / DomainError when an entry is out of range for `s`.
  void check(const Structure& s) const;

  bool operator==(const Valuation&) const = default;

 private:
  std::map<std::pair<WorldId, Var>, ElemId> entries_;
};

// A structure with a distinguished world and valuation: certificates,
// countermodels and satisfying models.
struct PointedModel {
  Structure structure;
  WorldId world = 0;
  Valuation valuation;
};

// A, v, w |= formula.
bool satisfies(const Structure& s, const Valuation& v, WorldId w, const Formula& a);
bool satisfies(const Structure& s, const Valuation& v, const std::string& world,
               const Formula& a);
bool satisfies(const PointedModel& m, const Formula& a);

// A |= formula: true at every world under every valuation.
bool valid_in(const Structure& s, const Formula& a);

// A falsifying point for the formula in `s`, if any. Valuation entries are
// restricted to the formula's free variables at the returned world.
std::optional<PointedModel> find_falsifier(const Structure& s, const Formula& a);

// A modality-free formula together with a single-world countermodel.
struct UniversalSeed {
  Formula formula;
  PointedModel certificate;
};

// Disjoint union of the seed countermodels: seed i contributes world "w<i>"
// with the certificate world's domain and interpretation, so every seed
// formula fails somewhere in the result. An empty seed list yields a single
// world with domain {a}. Throws CertificateError when a seed formula has a
// modality or its certificate does not falsify it.
Structure build_relative_universal(std::span<const UniversalSeed> seeds);

}  // namespace folbox

#endif  // FOLBOX_KRIPKE_HPP_
