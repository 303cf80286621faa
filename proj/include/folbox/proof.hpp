#ifndef FOLBOX_PROOF_HPP_
#define FOLBOX_PROOF_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "folbox/formula.hpp"
#include "folbox/kripke.hpp"
#include "folbox/oracle.hpp"

namespace folbox {

enum class Rule { Taut, K, T, Five, All1, All2, Id, Eq, Mix, Bang, RG, MP };

// TAUT, K, T, 5, ALL1, ALL2, ID, EQ, MIX, BANG, RG, MP
std::string to_string(Rule r);
std::optional<Rule> parse_rule(const std::string& name);
bool is_axiom(Rule r);

struct Aux {
  // ALL1: the quantified variable and its replacement. EQ: x and y of x = y.
  std::optional<Var> from, to;
  // EQ: indices into the pre-order list of free occurrences of x in A that
  // are replaced by y. Inferred when absent.
  std::optional<std::vector<std::size_t>> occurrences;
  // BANG: a point falsifying the operand.
  std::optional<PointedModel> certificate;
};

struct ProofLine {
  std::size_t id = 0;
  Formula formula;
  Rule rule;
  std::vector<std::size_t> refs;
  Aux aux;
};

struct Derivation {
  std::vector<ProofLine> lines;
};

struct LineVerdict {
  std::size_t id = 0;
  bool ok = false;
  std::string reason;
};

struct Match {
  bool ok = false;
  std::string reason;
};

// Skeletons with more placeholders than this are rejected by TAUT.
inline constexpr std::size_t kTautologyAtomLimit = 12;

// Whether the formula is an instance of the axiom schema. Formulas are
// compared after expanding <> and exists into their duals.
Match match_axiom(const Formula& a, Rule rule, const Aux& aux = {},
                  const Oracle& oracle = default_oracle());

// Every line is judged on its own: axioms by match_axiom, RG and MP against
// the formulas of the cited lines, whether or not those were accepted.
std::vector<LineVerdict> check_proof(const Derivation& d, const Oracle& oracle = default_oracle());

bool accepted(const std::vector<LineVerdict>& verdicts);

// Proof file layout:
//
//   {"lines": [
//     {"id": 1, "formula": "x = x", "rule": "ID"},
//     {"id": 2, "formula": "[](x = x)", "rule": "RG", "refs": [1]},
//     {"id": 3, "formula": "forall x. P(x) -> P(y)", "rule": "ALL1",
//      "aux": {"from": "x", "to": "y"}},
//     {"id": 4, "formula": "~[]P(x)", "rule": "BANG",
//      "aux": {"certificate": <structure document with world and valuation>}}
//   ]}
//
// EQ lines may carry "aux": {"from": "x", "to": "y", "occurrences": [0, 2]}.
// Throws DocumentError, SyntaxError and the structure document errors.
Derivation parse_derivation(const nlohmann::json& doc);
nlohmann::json derivation_to_json(const Derivation& d);

}  // namespace folbox

#endif  // FOLBOX_PROOF_HPP_
