#include "folbox/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "folbox/decider.hpp"
#include "folbox/documents.hpp"
#include "folbox/errors.hpp"
#include "folbox/kripke.hpp"
#include "folbox/normal_form.hpp"
#include "folbox/oracle.hpp"
#include "folbox/proof.hpp"
#include "folbox/syntax.hpp"
#include "folbox/text.hpp"

namespace folbox::cli {
namespace {

// A formula given inline or through --file.
struct FormulaArg {
  std::string text;
  std::string file;

  void attach(CLI::App* cmd, const char* name = "formula") {
    auto* group = cmd->add_option_group("input", "exactly one of");
    group->add_option(name, text, "formula text");
    group->add_option("--file", file, "read the formula from a file");
    group->require_option(1);
  }

  Formula get() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw DocumentError("cannot open " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_formula(buf.str());
    }
    return parse_formula(text);
  }
};

std::string part_label(const OracleCall& c) {
  switch (c.part) {
    case OracleCall::Part::Possibly:
      return "<>";
    case OracleCall::Part::Necessarily:
      return "[]";
    case OracleCall::Part::Plain:
      return "plain";
  }
  return "?";
}

void print_trace(const ThesisVerdict& v, std::ostream& out) {
  for (std::size_t i = 0; i < v.trace.size(); ++i) {
    const DisjunctTrace& t = v.trace[i];
    out << "disjunction " << i + 1 << ": " << print_formula(t.disjunction.to_formula()) << "\n";
    for (const OracleCall& c : t.calls) {
      out << "  " << part_label(c) << " " << print_formula(c.formula) << ": "
          << to_string(c.verdict.status) << "\n";
    }
    out << "  decided by: " << to_string(t.branch) << "\n";
  }
  if (v.trace.size() < v.form.parts.size()) {
    out << "remaining " << v.form.parts.size() - v.trace.size() << " disjunction(s) not examined\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision and checking tools for first-order logic with a thesis operator",
               "folbox"};
  app.require_subcommand(1);
  std::function<int()> action;

  FormulaArg parse_f;
  auto* parse_cmd = app.add_subcommand("parse", "parse and print a formula");
  parse_f.attach(parse_cmd);
  parse_cmd->callback([&] {
    action = [&] {
      out << print_formula(parse_f.get()) << "\n";
      return kOk;
    };
  });

  FormulaArg nf_f;
  auto* nf_cmd = app.add_subcommand("nf", "print an equivalent conjunctive form");
  nf_f.attach(nf_cmd);
  nf_cmd->callback([&] {
    action = [&] {
      out << print_formula(to_conjunctive_form(nf_f.get()).to_formula()) << "\n";
      return kOk;
    };
  });

  FormulaArg decide_f;
  bool trace = false;
  auto* decide_cmd = app.add_subcommand("decide", "decide thesis-hood");
  decide_f.attach(decide_cmd);
  decide_cmd->add_flag("--trace", trace, "print the per-disjunction trace");
  decide_cmd->callback([&] {
    action = [&] {
      const ThesisVerdict v = is_thesis(decide_f.get());
      out << (v.thesis ? "thesis" : "non-thesis") << "\n";
      if (trace) print_trace(v, out);
      return v.thesis ? kOk : kNegative;
    };
  });

  FormulaArg box_f;
  auto* box_cmd = app.add_subcommand("box-status", "decide whether []A or ~[]A is a thesis");
  box_f.attach(box_cmd);
  box_cmd->callback([&] {
    action = [&] {
      const BoxStatus s = box_status(box_f.get());
      out << to_string(s) << "\n";
      return s == BoxStatus::BoxThesis ? kOk : kNegative;
    };
  });

  std::string structure_file, world_name, model_formula;
  auto* model_cmd = app.add_subcommand("check-model", "evaluate a formula in a structure");
  model_cmd->add_option("--structure", structure_file, "structure file")->required();
  model_cmd->add_option("--world", world_name, "world; without it, validity in the structure");
  model_cmd->add_option("--formula", model_formula, "formula text")->required();
  model_cmd->callback([&] {
    action = [&] {
      const StructureDoc doc = parse_structure(read_json_file(structure_file));
      const Formula a = parse_formula(model_formula);
      bool result;
      if (world_name.empty()) {
        result = valid_in(doc.structure, a);
      } else {
        result = satisfies(doc.structure, doc.valuation.value_or(Valuation{}), world_name, a);
      }
      out << (result ? "true" : "false") << "\n";
      return result ? kOk : kNegative;
    };
  });

  std::string proof_file;
  auto* proof_cmd = app.add_subcommand("check-proof", "verify a derivation line by line");
  proof_cmd->add_option("proof", proof_file, "proof file")->required();
  proof_cmd->callback([&] {
    action = [&] {
      const Derivation d = parse_derivation(read_json_file(proof_file));
      const std::vector<LineVerdict> verdicts = check_proof(d);
      for (const LineVerdict& v : verdicts) {
        out << v.id << " " << (v.ok ? "ok" : "rejected") << ": " << v.reason << "\n";
      }
      const bool ok = accepted(verdicts);
      out << (ok ? "accepted" : "rejected") << "\n";
      return ok ? kOk : kNegative;
    };
  });

  FormulaArg counter_f;
  auto* counter_cmd = app.add_subcommand("countermodel", "print a structure falsifying a non-thesis");
  counter_f.attach(counter_cmd);
  counter_cmd->callback([&] {
    action = [&] {
      const std::optional<PointedModel> m = countermodel(counter_f.get());
      if (!m) {
        err << "formula is a thesis; no countermodel exists\n";
        return kNegative;
      }
      out << pointed_to_json(*m).dump(2) << "\n";
      return kOk;
    };
  });

  std::vector<std::string> seed_texts;
  std::string output_file;
  auto* universal_cmd = app.add_subcommand(
      "universalish", "structure falsifying each given modality-free non-thesis");
  universal_cmd->add_option("formulas", seed_texts, "modality-free formulas")->required();
  universal_cmd->add_option("-o,--output", output_file, "write the structure here");
  universal_cmd->callback([&] {
    action = [&] {
      std::vector<UniversalSeed> seeds;
      for (const std::string& text : seed_texts) {
        const Formula a = parse_formula(text);
        ClassicalVerdict v = default_oracle().is_fol_thesis(a);
        if (v.status == Verdict::Thesis) {
          err << print_formula(a) << " is a classical thesis; it has no countermodel\n";
          return kInput;
        }
        seeds.push_back({a, std::move(*v.certificate)});
      }
      const std::string doc = structure_to_json(build_relative_universal(seeds)).dump(2) + "\n";
      if (output_file.empty()) {
        out << doc;
      } else {
        std::ofstream f(output_file);
        if (!f) throw DocumentError("cannot write " + output_file);
        f << doc;
      }
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!action) return kUsage;
  try {
    return action();
  } catch (const FragmentError& e) {
    err << "fragment error: " << e.what() << "\n";
    return kFragment;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  }
}

}  // namespace folbox::cli
