#ifndef FOLBOX_ORACLE_HPP_
#define FOLBOX_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include "folbox/formula.hpp"
#include "folbox/kripke.hpp"

namespace folbox {

enum class Verdict { Thesis, NonThesis, Satisfiable, Unsatisfiable };

std::string to_string(Verdict v);

// NonThesis and Satisfiable carry a single-world certificate: the world is
// "w0", elements are a, b, ... and the valuation interprets the free
// variables of the formula so that it is falsified (NonThesis) or
// satisfied (Satisfiable).
struct ClassicalVerdict {
  Verdict status;
  std::optional<PointedModel> certificate;
};

// Modality-free, every predicate of arity at most 1.
bool fragment_check(const Formula& a);

// 2^k * max(q, 1) for k unary predicates and q distinct variables. Every
// satisfiable fragment formula has a model of at most this size.
std::size_t fmp_bound(const Formula& a);

// Decides the monadic fragment with identity. A model is determined up to
// elementary equivalence by the nullary predicates and, for each of the 2^k
// cells of unary predicates, the number of elements in the cell; counts
// above q are indistinguishable. Cell counts are searched as intervals that
// are split only where the formula asks whether a cell holds more elements
// than those already named.
//
// Results are cached; the cache may be shared between threads.
class Oracle {
 public:
  // Free variables read existentially. Throws FragmentError. Certificates
  // are of minimal size.
  ClassicalVerdict is_satisfiable(const Formula& a) const;

  // Free variables read universally. Throws FragmentError.
  ClassicalVerdict is_fol_thesis(const Formula& a) const;

  std::size_t cache_size() const;

 private:
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<std::string, bool>, ClassicalVerdict> cache_;
};

// Process-wide instance used by the decider and the proof checker.
const Oracle& default_oracle();

}  // namespace folbox

#endif  // FOLBOX_ORACLE_HPP_
