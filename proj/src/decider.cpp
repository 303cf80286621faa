#include "folbox/decider.hpp"

#include <stdexcept>

#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"
#include "folbox/text.hpp"

namespace folbox {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::PossiblySatisfiable:
      return "possibly-satisfiable";
    case Branch::NecessarilyThesis:
      return "necessarily-thesis";
    case Branch::PlainThesis:
      return "plain-thesis";
    case Branch::None:
      return "none";
  }
  return "?";
}

std::string to_string(BoxStatus s) {
  return s == BoxStatus::BoxThesis ? "box-thesis" : "neg-box-thesis";
}

namespace {

void require_fragment(const ElementaryDisjunction& d) {
  auto check = [](const Formula& f) {
    if (!fragment_check(f)) {
      throw FragmentError("outside the monadic fragment: " + print_formula(f));
    }
  };
  if (d.plain) check(*d.plain);
  if (d.possibly) check(*d.possibly);
  for (const Formula& c : d.necessarily) check(c);
}

}  // namespace

DisjunctTrace trace_disjunction(const ElementaryDisjunction& d, const Oracle& oracle) {
  require_fragment(d);
  DisjunctTrace t{d, Branch::None, {}};
  if (d.possibly) {
    ClassicalVerdict v = oracle.is_satisfiable(*d.possibly);
    const bool hit = v.status == Verdict::Satisfiable;
    t.calls.push_back({OracleCall::Part::Possibly, 0, *d.possibly, std::move(v)});
    if (hit) {
      t.branch = Branch::PossiblySatisfiable;
      return t;
    }
  }
  for (std::size_t i = 0; i < d.necessarily.size(); ++i) {
    ClassicalVerdict v = oracle.is_fol_thesis(d.necessarily[i]);
    const bool hit = v.status == Verdict::Thesis;
    t.calls.push_back({OracleCall::Part::Necessarily, i, d.necessarily[i], std::move(v)});
    if (hit) {
      t.branch = Branch::NecessarilyThesis;
      return t;
    }
  }
  if (d.plain) {
    ClassicalVerdict v = oracle.is_fol_thesis(*d.plain);
    const bool hit = v.status == Verdict::Thesis;
    t.calls.push_back({OracleCall::Part::Plain, 0, *d.plain, std::move(v)});
    if (hit) t.branch = Branch::PlainThesis;
  }
  return t;
}

bool elem_disj_thesis(const ElementaryDisjunction& d, const Oracle& oracle) {
  return trace_disjunction(d, oracle).branch != Branch::None;
}

ThesisVerdict is_thesis(const Formula& a, const Oracle& oracle) {
  for (const Predicate& p : signature(a)) {
    if (p.arity > 1) throw FragmentError("predicate " + p.key() + " is not monadic");
  }
  ThesisVerdict out{true, to_conjunctive_form(a), {}};
  for (const ElementaryDisjunction& d : out.form.parts) {
    out.trace.push_back(trace_disjunction(d, oracle));
    if (out.trace.back().branch == Branch::None) {
      out.thesis = false;
      break;
    }
  }
  return out;
}

BoxStatus box_status(const Formula& a, const Oracle& oracle) {
  return is_thesis(a, oracle).thesis ? BoxStatus::BoxThesis : BoxStatus::NegBoxThesis;
}

std::vector<UniversalSeed> seeds_from(const DisjunctTrace& t) {
  std::vector<UniversalSeed> seeds;
  for (const OracleCall& call : t.calls) {
    if (!call.verdict.certificate) continue;
    if (call.verdict.status == Verdict::NonThesis) {
      seeds.push_back({call.formula, *call.verdict.certificate});
    } else if (call.verdict.status == Verdict::Satisfiable) {
      seeds.push_back({neg(call.formula), *call.verdict.certificate});
    }
  }
  return seeds;
}

std::vector<UniversalSeed> seeds_from(const ThesisVerdict& v) {
  std::vector<UniversalSeed> seeds;
  for (const DisjunctTrace& t : v.trace) {
    for (UniversalSeed& s : seeds_from(t)) seeds.push_back(std::move(s));
  }
  return seeds;
}

// In the union of the failing disjunction's countermodels, b is false at
// every world (it is unsatisfiable), each c_i fails at its own world and a
// fails at its own world. Rigidity then falsifies the whole disjunction at
// the world of a, and with it the conjunctive form and the input.
std::optional<PointedModel> countermodel(const Formula& a, const Oracle& oracle) {
  const ThesisVerdict v = is_thesis(a, oracle);
  if (v.thesis) return std::nullopt;
  const DisjunctTrace& failing = v.trace.back();
  const std::vector<UniversalSeed> seeds = seeds_from(failing);
  const Structure s = build_relative_universal(seeds);
  if (auto m = find_falsifier(s, a)) return m;
  throw std::logic_error("no falsifying point for non-thesis " + print_formula(a));
}

}  // namespace folbox
