#include "folbox/normal_form.hpp"

#include <algorithm>
#include <map>

#include "folbox/syntax.hpp"

namespace folbox {

Formula ElementaryDisjunction::to_formula() const {
  std::vector<Formula> parts;
  if (plain) parts.push_back(*plain);
  if (possibly) parts.push_back(diamond(*possibly));
  for (const Formula& c : necessarily) parts.push_back(box(c));
  if (parts.empty()) return falsum();
  return disj_all(parts);
}

Formula ConjunctiveForm::to_formula() const {
  std::vector<Formula> conjuncts;
  for (const auto& d : parts) conjuncts.push_back(d.to_formula());
  return conj_all(conjuncts);
}

namespace {

// Working representation: each part kept as a sorted set of disjuncts so
// that identical modal parts are recognised and merged.
struct Clause {
  std::vector<Formula> plain;
  std::vector<Formula> possibly;
  std::vector<Formula> necessarily;

  bool modal() const { return !possibly.empty() || !necessarily.empty(); }
  bool empty() const { return plain.empty() && !modal(); }
};

using Cnf = std::vector<Clause>;

void add_unique(std::vector<Formula>& set, const Formula& f) {
  auto it = std::lower_bound(set.begin(), set.end(), f);
  if (it == set.end() || *it != f) set.insert(it, f);
}

std::vector<Formula> unite(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Formula quantify(Kind kind, const Var& x, const Formula& body) {
  if (!free_vars(body).count(x)) return body;  // domains are non-empty
  return kind == Kind::Forall ? forall(x, body) : exists(x, body);
}

Cnf bottom() { return {Clause{}}; }

// Clauses sharing a modal part are merged by distributivity:
// (A | M) & (B | M) <-> (A & B) | M. A clause with no plain part absorbs the
// others in its group.
Cnf factor(const Cnf& in) {
  std::map<std::pair<std::vector<Formula>, std::vector<Formula>>, std::size_t> index;
  std::vector<std::vector<const Clause*>> groups;
  for (const Clause& c : in) {
    if (c.empty()) return bottom();
    auto [it, fresh] = index.emplace(std::make_pair(c.possibly, c.necessarily), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(&c);
  }
  Cnf out;
  for (const auto& group : groups) {
    Clause merged = *group.front();
    if (group.size() > 1) {
      std::vector<Formula> conjuncts;
      bool absorbed = false;
      for (const Clause* c : group) {
        if (c->plain.empty()) {
          absorbed = true;
          break;
        }
        add_unique(conjuncts, disj_all(c->plain));
      }
      merged.plain.clear();
      if (!absorbed) merged.plain.push_back(conj_all(conjuncts));
    }
    if (merged.empty()) return bottom();
    out.push_back(std::move(merged));
  }
  return out;
}

Cnf conjoin(Cnf a, const Cnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return factor(a);
}

Cnf disjoin(const Cnf& a, const Cnf& b) {
  Cnf out;
  out.reserve(a.size() * b.size());
  for (const Clause& x : a) {
    for (const Clause& y : b) {
      out.push_back({unite(x.plain, y.plain), unite(x.possibly, y.possibly),
                     unite(x.necessarily, y.necessarily)});
    }
  }
  return factor(out);
}

// [](A | <>B | []C..) <-> []A | <>B | []C..
Cnf necessitate(const Cnf& f) {
  Cnf out;
  for (const Clause& c : f) {
    Clause d{{}, c.possibly, c.necessarily};
    if (!c.plain.empty()) add_unique(d.necessarily, disj_all(c.plain));
    out.push_back(std::move(d));
  }
  return factor(out);
}

// forall x (A | M) <-> forall x A | M for rigid M.
Cnf generalize(const Var& x, const Cnf& f) {
  Cnf out;
  for (const Clause& c : f) {
    Clause d = c;
    if (!c.plain.empty()) d.plain = {quantify(Kind::Forall, x, disj_all(c.plain))};
    out.push_back(std::move(d));
  }
  return factor(out);
}

// Existential quantification or <> over a conjunction whose modal parts M_i
// are rigid. For every set U of modal parts assumed false,
//   Q(P & (A_1 | M_1) & ... & (A_n | M_n))
// requires Q(P & A_i for i in U) unless some M_i with i in U holds:
//   Q(..) <-> AND_U ( OR_{i in U} M_i | Q(P & AND_{i in U} A_i) ).
// `kind` is Kind::Exists or Kind::Diamond.
Cnf project(Kind kind, const Var* x, const Cnf& f) {
  std::optional<Formula> pure;
  bool pure_bottom = false;
  std::vector<const Clause*> modal;
  for (const Clause& c : f) {
    if (c.empty()) return bottom();
    if (c.modal()) {
      modal.push_back(&c);
    } else {
      pure = disj_all(c.plain);  // at most one after factoring
    }
  }
  (void)pure_bottom;
  const std::size_t n = modal.size();
  Cnf out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Clause clause;
    std::vector<Formula> conjuncts;
    if (pure) conjuncts.push_back(*pure);
    bool inner_false = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const Clause& m = *modal[i];
      clause.possibly = unite(clause.possibly, m.possibly);
      clause.necessarily = unite(clause.necessarily, m.necessarily);
      if (m.plain.empty()) {
        inner_false = true;
      } else {
        conjuncts.push_back(disj_all(m.plain));
      }
    }
    if (!inner_false) {
      if (conjuncts.empty()) continue;  // Q(true) holds outright
      const Formula inner = conj_all(conjuncts);
      if (kind == Kind::Diamond) {
        add_unique(clause.possibly, inner);
      } else {
        clause.plain.push_back(quantify(Kind::Exists, *x, inner));
      }
    }
    out.push_back(std::move(clause));
  }
  if (out.empty()) return {Clause{{verum()}, {}, {}}};
  return factor(out);
}

Cnf convert(const Formula& a, bool positive) {
  if (box_free(a)) {
    if (positive) return {Clause{{a}, {}, {}}};
    return {Clause{{a.kind() == Kind::Not ? a.operand() : neg(a)}, {}, {}}};
  }
  switch (a.kind()) {
    case Kind::Not:
      return convert(a.operand(), !positive);
    case Kind::And:
      return positive ? conjoin(convert(a.lhs(), true), convert(a.rhs(), true))
                      : disjoin(convert(a.lhs(), false), convert(a.rhs(), false));
    case Kind::Or:
      return positive ? disjoin(convert(a.lhs(), true), convert(a.rhs(), true))
                      : conjoin(convert(a.lhs(), false), convert(a.rhs(), false));
    case Kind::Impl:
      return positive ? disjoin(convert(a.lhs(), false), convert(a.rhs(), true))
                      : conjoin(convert(a.lhs(), true), convert(a.rhs(), false));
    case Kind::Iff: {
      const Cnf lp = convert(a.lhs(), true), ln = convert(a.lhs(), false);
      const Cnf rp = convert(a.rhs(), true), rn = convert(a.rhs(), false);
      return positive ? conjoin(disjoin(ln, rp), disjoin(lp, rn))
                      : disjoin(conjoin(lp, rn), conjoin(ln, rp));
    }
    case Kind::Forall:
      return positive ? generalize(a.bound(), convert(a.operand(), true))
                      : project(Kind::Exists, &a.bound(), convert(a.operand(), false));
    case Kind::Exists:
      return positive ? project(Kind::Exists, &a.bound(), convert(a.operand(), true))
                      : generalize(a.bound(), convert(a.operand(), false));
    case Kind::Box:
      return positive ? necessitate(convert(a.operand(), true))
                      : project(Kind::Diamond, nullptr, convert(a.operand(), false));
    case Kind::Diamond:
      return positive ? project(Kind::Diamond, nullptr, convert(a.operand(), true))
                      : necessitate(convert(a.operand(), false));
    default:
      break;
  }
  return {Clause{{a}, {}, {}}};  // unreachable: atoms are box-free
}

void flatten(const Formula& a, Kind k, std::vector<Formula>& out) {
  if (a.kind() == k) {
    flatten(a.lhs(), k, out);
    flatten(a.rhs(), k, out);
  } else {
    out.push_back(a);
  }
}

}  // namespace

ConjunctiveForm to_conjunctive_form(const Formula& a) {
  ConjunctiveForm out;
  for (const Clause& c : convert(a, true)) {
    ElementaryDisjunction d;
    if (!c.plain.empty()) d.plain = disj_all(c.plain);
    if (!c.possibly.empty()) d.possibly = disj_all(c.possibly);
    d.necessarily = c.necessarily;
    out.parts.push_back(std::move(d));
  }
  return out;
}

std::variant<ConjunctiveForm, RecognitionFailure> recognize(const Formula& a) {
  std::vector<Formula> conjuncts;
  flatten(a, Kind::And, conjuncts);
  ConjunctiveForm out;
  for (const Formula& conjunct : conjuncts) {
    std::vector<Formula> disjuncts;
    flatten(conjunct, Kind::Or, disjuncts);
    std::vector<Formula> plain;
    ElementaryDisjunction d;
    for (const Formula& part : disjuncts) {
      if (box_free(part)) {
        plain.push_back(part);
      } else if (part.kind() == Kind::Diamond && box_free(part.operand())) {
        if (d.possibly) return RecognitionFailure{part, "second <> in one disjunction"};
        d.possibly = part.operand();
      } else if (part.kind() == Kind::Box && box_free(part.operand())) {
        d.necessarily.push_back(part.operand());
      } else {
        return RecognitionFailure{part, "not of the form A, <>B or []C with A, B, C modality-free"};
      }
    }
    if (!plain.empty()) d.plain = disj_all(plain);
    out.parts.push_back(std::move(d));
  }
  return out;
}

const std::vector<RewriteRule>& rewrite_rules() {
  using M = std::span<const Formula>;
  using P = std::pair<Formula, Formula>;
  static const std::vector<RewriteRule> rules = {
      {"1a", 2, [](M m, const Var&) -> P {
         return {box(disj(m[0], box(m[1]))), disj(box(m[0]), box(m[1]))};
       }},
      {"1a-dual", 2, [](M m, const Var&) -> P {
         return {diamond(conj(m[0], diamond(m[1]))), conj(diamond(m[0]), diamond(m[1]))};
       }},
      {"1b-exists", 1, [](M m, const Var& x) -> P { return {exists(x, box(m[0])), box(m[0])}; }},
      {"1b-forall", 1, [](M m, const Var& x) -> P { return {forall(x, box(m[0])), box(m[0])}; }},
      {"1c-exists", 1,
       [](M m, const Var& x) -> P { return {exists(x, diamond(m[0])), diamond(m[0])}; }},
      {"1c-forall", 1,
       [](M m, const Var& x) -> P { return {forall(x, diamond(m[0])), diamond(m[0])}; }},
      {"1d", 2, [](M m, const Var& x) -> P {
         return {forall(x, disj(m[0], box(m[1]))), disj(forall(x, m[0]), box(m[1]))};
       }},
      {"1d-diamond", 2, [](M m, const Var& x) -> P {
         return {forall(x, disj(m[0], diamond(m[1]))), disj(forall(x, m[0]), diamond(m[1]))};
       }},
      {"exists-and-box", 2, [](M m, const Var& x) -> P {
         return {exists(x, conj(m[0], box(m[1]))), conj(exists(x, m[0]), box(m[1]))};
       }},
      {"exists-and-diamond", 2, [](M m, const Var& x) -> P {
         return {exists(x, conj(m[0], diamond(m[1]))), conj(exists(x, m[0]), diamond(m[1]))};
       }},
      {"box-or-diamond", 2, [](M m, const Var&) -> P {
         return {box(disj(m[0], diamond(m[1]))), disj(box(m[0]), diamond(m[1]))};
       }},
      {"diamond-and-box", 2, [](M m, const Var&) -> P {
         return {diamond(conj(m[0], box(m[1]))), conj(diamond(m[0]), box(m[1]))};
       }},
      {"box-and", 2, [](M m, const Var&) -> P {
         return {box(conj(m[0], m[1])), conj(box(m[0]), box(m[1]))};
       }},
      {"diamond-merge", 2, [](M m, const Var&) -> P {
         return {disj(diamond(m[0]), diamond(m[1])), diamond(disj(m[0], m[1]))};
       }},
      {"forall-and", 2, [](M m, const Var& x) -> P {
         return {forall(x, conj(m[0], m[1])), conj(forall(x, m[0]), forall(x, m[1]))};
       }},
      {"exists-or", 2, [](M m, const Var& x) -> P {
         return {exists(x, disj(m[0], m[1])), disj(exists(x, m[0]), exists(x, m[1]))};
       }},
      {"s5-box-box", 1, [](M m, const Var&) -> P { return {box(box(m[0])), box(m[0])}; }},
      {"s5-diamond-diamond", 1,
       [](M m, const Var&) -> P { return {diamond(diamond(m[0])), diamond(m[0])}; }},
      {"s5-box-diamond", 1,
       [](M m, const Var&) -> P { return {box(diamond(m[0])), diamond(m[0])}; }},
      {"s5-diamond-box", 1, [](M m, const Var&) -> P { return {diamond(box(m[0])), box(m[0])}; }},
      {"dual-box", 1, [](M m, const Var&) -> P { return {neg(box(m[0])), diamond(neg(m[0]))}; }},
      {"dual-diamond", 1,
       [](M m, const Var&) -> P { return {neg(diamond(m[0])), box(neg(m[0]))}; }},
      {"dual-forall", 1,
       [](M m, const Var& x) -> P { return {neg(forall(x, m[0])), exists(x, neg(m[0]))}; }},
      {"dual-exists", 1,
       [](M m, const Var& x) -> P { return {neg(exists(x, m[0])), forall(x, neg(m[0]))}; }},
      {"factor-modal", 3, [](M m, const Var&) -> P {
         return {conj(disj(m[0], box(m[2])), disj(m[1], box(m[2]))),
                 disj(conj(m[0], m[1]), box(m[2]))};
       }},
      {"exists-case-split-box", 3, [](M m, const Var& x) -> P {
         return {exists(x, conj(m[0], disj(m[1], box(m[2])))),
                 conj(exists(x, m[0]), disj(box(m[2]), exists(x, conj(m[0], m[1]))))};
       }},
      {"exists-case-split-diamond", 3, [](M m, const Var& x) -> P {
         return {exists(x, conj(m[0], disj(m[1], diamond(m[2])))),
                 conj(exists(x, m[0]), disj(diamond(m[2]), exists(x, conj(m[0], m[1]))))};
       }},
      {"diamond-case-split-box", 3, [](M m, const Var&) -> P {
         return {diamond(conj(m[0], disj(m[1], box(m[2])))),
                 conj(diamond(m[0]), disj(box(m[2]), diamond(conj(m[0], m[1]))))};
       }},
      {"diamond-case-split-diamond", 3, [](M m, const Var&) -> P {
         return {diamond(conj(m[0], disj(m[1], diamond(m[2])))),
                 conj(diamond(m[0]), disj(diamond(m[2]), diamond(conj(m[0], m[1]))))};
       }},
      {"vacuous-quantifier", 1, [](M m, const Var&) -> P {
         // Pick a variable that does not occur in the instance.
         const std::set<Var> used = all_vars(m[0]);
         Var fresh{"v"};
         for (int i = 0; used.count(fresh); ++i) fresh = Var{"v" + std::to_string(i)};
         return {forall(fresh, m[0]), m[0]};
       }},
  };
  return rules;
}

}  // namespace folbox
