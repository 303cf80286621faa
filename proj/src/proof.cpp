#include "folbox/proof.hpp"

#include <array>
#include <map>
#include <set>

#include "folbox/documents.hpp"
#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"
#include "folbox/text.hpp"

namespace folbox {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 12> kRuleNames{{
    {Rule::Taut, "TAUT"},
    {Rule::K, "K"},
    {Rule::T, "T"},
    {Rule::Five, "5"},
    {Rule::All1, "ALL1"},
    {Rule::All2, "ALL2"},
    {Rule::Id, "ID"},
    {Rule::Eq, "EQ"},
    {Rule::Mix, "MIX"},
    {Rule::Bang, "BANG"},
    {Rule::RG, "RG"},
    {Rule::MP, "MP"},
}};

Match yes() { return {true, "ok"}; }
Match no(std::string reason) { return {false, std::move(reason)}; }

bool is(const Formula& a, Kind k) { return a.kind() == k; }

Match match_taut(const Formula& a) {
  const Skeleton s = skeleton(a);
  if (s.atoms.size() > kTautologyAtomLimit) {
    return no("skeleton has " + std::to_string(s.atoms.size()) + " atoms, above the limit of " +
              std::to_string(kTautologyAtomLimit));
  }
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << s.atoms.size()); ++row) {
    if (!evaluate_skeleton(s.shape, row)) return no("skeleton is not a tautology");
  }
  return yes();
}

// [](A -> B) -> ([]A -> []B)
Match match_k(const Formula& a) {
  if (!is(a, Kind::Impl) || !is(a.lhs(), Kind::Box) || !is(a.lhs().operand(), Kind::Impl) ||
      !is(a.rhs(), Kind::Impl) || !is(a.rhs().lhs(), Kind::Box) || !is(a.rhs().rhs(), Kind::Box)) {
    return no("not of the form [](A -> B) -> ([]A -> []B)");
  }
  const Formula& inner = a.lhs().operand();
  if (inner.lhs() != a.rhs().lhs().operand()) return no("antecedents differ");
  if (inner.rhs() != a.rhs().rhs().operand()) return no("consequents differ");
  return yes();
}

// []A -> A
Match match_t(const Formula& a) {
  if (!is(a, Kind::Impl) || !is(a.lhs(), Kind::Box)) return no("not of the form []A -> A");
  if (a.lhs().operand() != a.rhs()) return no("boxed formula differs from the consequent");
  return yes();
}

// ~[]A -> []~[]A
Match match_five(const Formula& a) {
  if (!is(a, Kind::Impl) || !is(a.lhs(), Kind::Not) || !is(a.lhs().operand(), Kind::Box)) {
    return no("not of the form ~[]A -> []~[]A");
  }
  if (!is(a.rhs(), Kind::Box) || a.rhs().operand() != a.lhs()) {
    return no("consequent is not [] applied to the antecedent");
  }
  return yes();
}

// forall x A -> A(y/x)
Match match_all1(const Formula& a, const Aux& aux) {
  if (!is(a, Kind::Impl) || !is(a.lhs(), Kind::Forall)) return no("not of the form forall x A -> B");
  const Var& x = a.lhs().bound();
  const Formula& body = a.lhs().operand();
  auto instance = [&](const Var& y) -> std::optional<Formula> {
    try {
      return substitute(body, x, y);
    } catch (const CaptureError&) {
      return std::nullopt;
    }
  };
  if (aux.from || aux.to) {
    if (!aux.from || !aux.to) return no("substitution needs both from and to");
    if (*aux.from != x) return no("substituted variable " + aux.from->name + " is not the bound one");
    const auto inst = instance(*aux.to);
    if (!inst) return no(aux.to->name + " is not substitutable for " + x.name);
    if (*inst != a.rhs()) return no("consequent is not the stated substitution instance");
    return yes();
  }
  std::set<Var> candidates = all_vars(a.rhs());
  candidates.insert(x);
  for (const Var& y : candidates) {
    if (auto inst = instance(y); inst && *inst == a.rhs()) return yes();
  }
  return no("consequent is no substitution instance of the quantified formula");
}

// forall x (A -> B) -> (A -> forall x B), x not free in A
Match match_all2(const Formula& a) {
  if (!is(a, Kind::Impl) || !is(a.lhs(), Kind::Forall) || !is(a.lhs().operand(), Kind::Impl) ||
      !is(a.rhs(), Kind::Impl) || !is(a.rhs().rhs(), Kind::Forall)) {
    return no("not of the form forall x (A -> B) -> (A -> forall x B)");
  }
  const Var& x = a.lhs().bound();
  const Formula& inner = a.lhs().operand();
  if (a.rhs().rhs().bound() != x) return no("quantified variables differ");
  if (inner.lhs() != a.rhs().lhs()) return no("antecedents differ");
  if (inner.rhs() != a.rhs().rhs().operand()) return no("consequents differ");
  if (forallbox_free_vars(inner.lhs()).count(x)) return no(x.name + " is free in the antecedent");
  return yes();
}

Match match_id(const Formula& a) {
  if (is(a, Kind::Eq) && a.args()[0] == a.args()[1]) return yes();
  return no("not of the form x = x");
}

// Indices of the free occurrences of x in `a` that appear as y in `b`, when
// `b` differs from `a` only there.
bool infer_replacement(const Formula& a, const Formula& b, const Var& x, const Var& y,
                       std::vector<Var>& bound, std::size_t& counter,
                       std::vector<std::size_t>& out) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::Eq: {
      if (a.kind() == Kind::Atom && a.predicate() != b.predicate()) return false;
      const bool x_free = std::find(bound.begin(), bound.end(), x) == bound.end();
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        const Var& u = a.args()[i];
        const Var& v = b.args()[i];
        const bool candidate = x_free && u == x;
        if (candidate && v == y && x != y) out.push_back(counter);
        else if (u != v) return false;
        if (candidate) ++counter;
      }
      return true;
    }
    case Kind::Forall:
    case Kind::Exists: {
      if (a.bound() != b.bound()) return false;
      bound.push_back(a.bound());
      const bool ok = infer_replacement(a.operand(), b.operand(), x, y, bound, counter, out);
      bound.pop_back();
      return ok;
    }
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
      return infer_replacement(a.operand(), b.operand(), x, y, bound, counter, out);
    default:
      return infer_replacement(a.lhs(), b.lhs(), x, y, bound, counter, out) &&
             infer_replacement(a.rhs(), b.rhs(), x, y, bound, counter, out);
  }
}

// x = y & A -> A(y//x) with A modality-free; the conjunction may also be
// written ~(x = y -> ~A).
Match match_eq(const Formula& a, const Aux& aux) {
  if (!is(a, Kind::Impl)) return no("not of the form x = y & A -> B");
  std::optional<std::pair<Formula, Formula>> parts;
  const Formula& ante = a.lhs();
  if (is(ante, Kind::And)) {
    parts.emplace(ante.lhs(), ante.rhs());
  } else if (is(ante, Kind::Not) && is(ante.operand(), Kind::Impl) &&
             is(ante.operand().rhs(), Kind::Not)) {
    parts.emplace(ante.operand().lhs(), ante.operand().rhs().operand());
  }
  if (!parts || !is(parts->first, Kind::Eq)) return no("antecedent is not x = y & A");
  const Var& x = parts->first.args()[0];
  const Var& y = parts->first.args()[1];
  const Formula& body = parts->second;
  if (!box_free(body)) return no("A contains a modality");
  if ((aux.from && *aux.from != x) || (aux.to && *aux.to != y)) {
    return no("aux variables do not match the identity x = y");
  }
  std::vector<std::size_t> selected;
  if (aux.occurrences) {
    selected = *aux.occurrences;
  } else {
    std::vector<Var> bound;
    std::size_t counter = 0;
    if (!infer_replacement(body, a.rhs(), x, y, bound, counter, selected)) {
      return no("consequent is not A with some free occurrences of " + x.name + " replaced by " +
                y.name);
    }
  }
  try {
    if (substitute_some(body, x, y, selected) != a.rhs()) {
      return no("consequent is not the stated replacement instance");
    }
  } catch (const CaptureError&) {
    return no(y.name + " would be captured");
  } catch (const Error& e) {
    return no(e.what());
  }
  return yes();
}

// []A -> forall x A
Match match_mix(const Formula& a) {
  if (!is(a, Kind::Impl) || !is(a.lhs(), Kind::Box) || !is(a.rhs(), Kind::Forall)) {
    return no("not of the form []A -> forall x A");
  }
  if (a.lhs().operand() != a.rhs().operand()) return no("boxed and quantified formulas differ");
  return yes();
}

// ~[]A with A modality-free and no classical thesis.
Match match_bang(const Formula& a, const Aux& aux, const Oracle& oracle) {
  if (!is(a, Kind::Not) || !is(a.operand(), Kind::Box)) return no("not of the form ~[]A");
  const Formula& body = a.operand().operand();
  if (!box_free(body)) return no("operand contains a modality");
  if (aux.certificate) {
    try {
      if (satisfies(*aux.certificate, body)) return no("certificate satisfies the operand");
    } catch (const Error& e) {
      return no(std::string("certificate unusable: ") + e.what());
    }
    return yes();
  }
  if (!fragment_check(body)) return no("operand outside the monadic fragment and no certificate");
  if (oracle.is_fol_thesis(body).status == Verdict::Thesis) return no("operand is a classical thesis");
  return yes();
}

}  // namespace

std::string to_string(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> parse_rule(const std::string& name) {
  for (const auto& [rule, n] : kRuleNames) {
    if (name == n) return rule;
  }
  return std::nullopt;
}

bool is_axiom(Rule r) { return r != Rule::RG && r != Rule::MP; }

Match match_axiom(const Formula& formula, Rule rule, const Aux& aux, const Oracle& oracle) {
  const Formula a = lower_duals(formula);
  switch (rule) {
    case Rule::Taut:
      return match_taut(a);
    case Rule::K:
      return match_k(a);
    case Rule::T:
      return match_t(a);
    case Rule::Five:
      return match_five(a);
    case Rule::All1:
      return match_all1(a, aux);
    case Rule::All2:
      return match_all2(a);
    case Rule::Id:
      return match_id(a);
    case Rule::Eq:
      return match_eq(a, aux);
    case Rule::Mix:
      return match_mix(a);
    case Rule::Bang:
      return match_bang(a, aux, oracle);
    case Rule::RG:
    case Rule::MP:
      break;
  }
  return no(to_string(rule) + " is a rule, not an axiom schema");
}

std::vector<LineVerdict> check_proof(const Derivation& d, const Oracle& oracle) {
  std::vector<LineVerdict> out;
  std::map<std::size_t, Formula> earlier;  // lowered formulas by id
  std::size_t last_id = 0;
  for (const ProofLine& line : d.lines) {
    LineVerdict v{line.id, false, ""};
    const Formula lowered = lower_duals(line.formula);
    std::vector<Formula> cited;
    if (line.id == 0) {
      v.reason = "line ids must be positive";
    } else if (line.id <= last_id) {
      v.reason = "line id " + std::to_string(line.id) + " is not above the previous id";
    } else {
      for (std::size_t ref : line.refs) {
        auto it = earlier.find(ref);
        if (it == earlier.end()) {
          v.reason = "reference " + std::to_string(ref) + " is not an earlier line";
          break;
        }
        cited.push_back(it->second);
      }
    }
    if (v.reason.empty()) {
      if (is_axiom(line.rule)) {
        if (!line.refs.empty()) {
          v.reason = "axiom lines cite no lines";
        } else {
          const Match m = match_axiom(line.formula, line.rule, line.aux, oracle);
          v.ok = m.ok;
          v.reason = m.reason;
        }
      } else if (line.rule == Rule::RG) {
        if (cited.size() != 1) {
          v.reason = "RG cites exactly one line";
        } else if (lowered != box(cited[0])) {
          v.reason = "formula is not [] applied to the cited line";
        } else {
          v.ok = true;
          v.reason = "ok";
        }
      } else {
        if (cited.size() != 2) {
          v.reason = "MP cites exactly two lines";
        } else if (cited[0] == imp(cited[1], lowered) || cited[1] == imp(cited[0], lowered)) {
          v.ok = true;
          v.reason = "ok";
        } else {
          v.reason = "cited lines are not A -> B and A for this B";
        }
      }
    }
    if (line.id > last_id) {
      earlier.emplace(line.id, lowered);
      last_id = line.id;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool accepted(const std::vector<LineVerdict>& verdicts) {
  for (const LineVerdict& v : verdicts) {
    if (!v.ok) return false;
  }
  return !verdicts.empty();
}

namespace {

using nlohmann::json;

Var parse_var(const json& j, const char* what) {
  if (!j.is_string() || !is_variable_name(j.get<std::string>())) {
    throw DocumentError(std::string(what) + " must be a variable name");
  }
  return Var{j.get<std::string>()};
}

}  // namespace

Derivation parse_derivation(const json& doc) {
  if (!doc.is_object() || !doc.contains("lines") || !doc.at("lines").is_array()) {
    throw DocumentError("proof document needs a \"lines\" list");
  }
  Derivation d;
  for (const json& l : doc.at("lines")) {
    if (!l.is_object()) throw DocumentError("each line must be an object");
    if (!l.contains("id") || !l.at("id").is_number_unsigned()) {
      throw DocumentError("line id must be a non-negative integer");
    }
    const auto id = l.at("id").get<std::size_t>();
    if (!l.contains("formula") || !l.at("formula").is_string()) {
      throw DocumentError("line " + std::to_string(id) + " lacks a formula");
    }
    if (!l.contains("rule") || !l.at("rule").is_string()) {
      throw DocumentError("line " + std::to_string(id) + " lacks a rule");
    }
    const auto rule = parse_rule(l.at("rule").get<std::string>());
    if (!rule) throw DocumentError("unknown rule \"" + l.at("rule").get<std::string>() + "\"");
    ProofLine line{id, parse_formula(l.at("formula").get<std::string>()), *rule, {}, {}};
    if (l.contains("refs")) {
      if (!l.at("refs").is_array()) throw DocumentError("refs must be a list");
      for (const json& r : l.at("refs")) {
        if (!r.is_number_unsigned()) throw DocumentError("refs must be line ids");
        line.refs.push_back(r.get<std::size_t>());
      }
    }
    if (l.contains("aux")) {
      const json& aux = l.at("aux");
      if (!aux.is_object()) throw DocumentError("aux must be an object");
      if (aux.contains("from")) line.aux.from = parse_var(aux.at("from"), "aux.from");
      if (aux.contains("to")) line.aux.to = parse_var(aux.at("to"), "aux.to");
      if (aux.contains("occurrences")) {
        std::vector<std::size_t> occ;
        if (!aux.at("occurrences").is_array()) throw DocumentError("occurrences must be a list");
        for (const json& o : aux.at("occurrences")) {
          if (!o.is_number_unsigned()) throw DocumentError("occurrences must be indices");
          occ.push_back(o.get<std::size_t>());
        }
        line.aux.occurrences = std::move(occ);
      }
      if (aux.contains("certificate")) line.aux.certificate = parse_pointed(aux.at("certificate"));
    }
    d.lines.push_back(std::move(line));
  }
  return d;
}

json derivation_to_json(const Derivation& d) {
  json lines = json::array();
  for (const ProofLine& line : d.lines) {
    json l;
    l["id"] = line.id;
    l["formula"] = print_formula(line.formula);
    l["rule"] = to_string(line.rule);
    if (!line.refs.empty()) l["refs"] = line.refs;
    json aux = json::object();
    if (line.aux.from) aux["from"] = line.aux.from->name;
    if (line.aux.to) aux["to"] = line.aux.to->name;
    if (line.aux.occurrences) aux["occurrences"] = *line.aux.occurrences;
    if (line.aux.certificate) aux["certificate"] = pointed_to_json(*line.aux.certificate);
    if (!aux.empty()) l["aux"] = aux;
    lines.push_back(l);
  }
  return json{{"lines", lines}};
}

}  // namespace folbox
