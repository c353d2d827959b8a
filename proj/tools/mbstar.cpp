// Command-line surface for the mb* toolkit: parsing, tautology decisions,
// truth tables, proof checking, the deduction transformer, exact
// probabilities, the paracomplete total-probability and Bayes rules,
// probability audits, coherence checking and finite space validation.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 usage or parse error, 3 enumeration cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbstar/errors.hpp"
#include "mbstar/io.hpp"
#include "mbstar/probability.hpp"
#include "mbstar/proof.hpp"
#include "mbstar/semantics.hpp"
#include "mbstar/spaces.hpp"

namespace {

using namespace mbstar;

struct Options {
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string format = "text";

  bool machine() const { return format == "machine"; }
};

void emit(const Options& opt, const std::string& key, const std::string& text_line,
          const std::string& machine_value) {
  if (opt.machine()) std::cout << key << '=' << machine_value << '\n';
  else std::cout << text_line << '\n';
}

int run_decide(const Options& opt, const std::string& text) {
  Decision result = is_tautology(parse_formula(text), opt.cap);
  if (result.holds) {
    emit(opt, "verdict", "TAUTOLOGY", "TAUTOLOGY");
    return 0;
  }
  std::string w = format_world(*result.countermodel);
  if (opt.machine()) {
    std::cout << "verdict=COUNTERMODEL\n" << "countermodel=" << w << '\n';
  } else {
    std::cout << "COUNTERMODEL " << w << '\n';
  }
  return 1;
}

int run_table(const Options& opt, const std::vector<std::string>& texts) {
  std::vector<Formula> formulas;
  for (const std::string& t : texts) formulas.push_back(parse_formula(t));
  TruthTable table = truth_table(formulas, opt.cap);
  if (!opt.machine()) {
    std::cout << format_truth_table(table);
    return 0;
  }
  std::string atoms, columns;
  for (const DecisionAtom& a : table.closure.atoms())
    atoms += (atoms.empty() ? "" : "\t") + a.display();
  for (const Formula& f : table.columns)
    columns += (columns.empty() ? "" : "\t") + render(f);
  std::cout << "atoms=" << atoms << '\n' << "columns=" << columns << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::string cells;
    for (int v : table.atom_cells[r]) cells += (cells.empty() ? "" : " ") + std::to_string(v);
    cells += '\t';
    bool first = true;
    for (int v : table.formula_cells[r]) {
      cells += (first ? "" : " ") + std::to_string(v);
      first = false;
    }
    std::cout << "row=" << cells << '\n';
  }
  return 0;
}

int run_prove_check(const Options& opt, const std::string& path) {
  Derivation d = read_derivation(read_text_file(path));
  Verdict v = check_derivation(d);
  if (v.valid) {
    emit(opt, "verdict", "VALID", "VALID");
    return 0;
  }
  if (opt.machine()) {
    std::cout << "verdict=INVALID\n"
              << "line=" << v.line << '\n'
              << "reason=" << v.reason << '\n';
  } else {
    std::cout << "INVALID line " << v.line << ": " << v.reason << '\n';
  }
  return 1;
}

int run_deduce(const Options&, const std::string& path, const std::string& hypothesis) {
  Derivation d = read_derivation(read_text_file(path));
  std::cout << write_derivation(deduction_transform(d, parse_formula(hypothesis)));
  return 0;
}

int run_total(const Options& opt, const std::string& path, const std::string& alpha_text,
              const std::string& beta_text) {
  WorldDistribution d = read_distribution(read_text_file(path));
  Formula alpha = parse_formula(alpha_text);
  Formula beta = parse_formula(beta_text);
  TotalProbability t = total_probability(d, alpha, beta);

  Formula neg_a = Formula::neg(alpha);
  Formula undet_a = Formula::undet(alpha);
  auto line = [&](const Formula& label, const std::string& key, const Rat& v) {
    if (opt.machine()) std::cout << key << '=' << to_string(v) << '\n';
    else std::cout << "P(" << render(label) << ") = " << to_string(v) << '\n';
  };
  line(beta, "p_beta", t.p_beta);
  line(Formula::conj(beta, alpha), "p_beta_and_alpha", t.p_beta_and_alpha);
  line(Formula::conj(beta, neg_a), "p_beta_and_neg_alpha", t.p_beta_and_neg_alpha);
  line(Formula::conj(beta, undet_a), "p_beta_and_undet_alpha", t.p_beta_and_undet_alpha);
  line(Formula::conj(Formula::conj(beta, Formula::disj(alpha, neg_a)), undet_a),
       "p_beta_and_lem_and_undet_alpha", t.p_beta_and_lem_and_undet_alpha);
  if (opt.machine()) std::cout << "identity=" << (t.identity_holds ? "true" : "false") << '\n';
  else std::cout << (t.identity_holds ? "identity holds" : "identity VIOLATED") << '\n';
  return t.identity_holds ? 0 : 1;
}

int run_bayes(const Options& opt, const std::string& path, const std::string& alpha_text,
              const std::string& beta_text) {
  WorldDistribution d = read_distribution(read_text_file(path));
  BayesReport r = bayes(d, parse_formula(alpha_text), parse_formula(beta_text));
  auto line = [&](const std::string& key, const Rat& v) {
    if (opt.machine()) std::cout << key << '=' << to_string(v) << '\n';
    else std::cout << key << " = " << to_string(v) << '\n';
  };
  line("posterior", r.posterior);
  line("numerator", r.numerator);
  line("denominator", r.denominator);
  line("K", r.correction_k);
  line("term_alpha", r.terms[0]);
  line("term_neg_alpha", r.terms[1]);
  line("term_undet_alpha", r.terms[2]);
  return 0;
}

int run_audit(const Options& opt, const std::string& path) {
  ConstraintsFile file = read_constraints(read_text_file(path));
  AuditReport report = audit_axioms(file.assignment, opt.cap);
  if (report.ok()) {
    emit(opt, "verdict", "CLEAN", "CLEAN");
    return 0;
  }
  emit(opt, "verdict", "VIOLATIONS", "VIOLATIONS");
  for (const AuditViolation& v : report.violations) {
    if (opt.machine()) std::cout << "violation=" << v.kind << ": " << v.detail << '\n';
    else std::cout << v.kind << ": " << v.detail << '\n';
  }
  return 1;
}

int run_coherence(const Options& opt, const std::string& path) {
  ConstraintsFile file = read_constraints(read_text_file(path));
  CoherenceResult result = coherence(file.assignment, file.universe, opt.cap);
  if (!result.feasible()) {
    emit(opt, "verdict", "INFEASIBLE", "INFEASIBLE");
    return 1;
  }
  emit(opt, "verdict", "FEASIBLE", "FEASIBLE");
  std::cout << write_distribution(*result.witness);
  return 0;
}

int run_p_entails(const Options& opt, const std::vector<std::string>& texts) {
  if (texts.empty()) throw InvalidInputError("p-entails needs at least a conclusion");
  FormulaSet premises;
  for (std::size_t i = 0; i + 1 < texts.size(); ++i) premises.insert(parse_formula(texts[i]));
  Formula conclusion = parse_formula(texts.back());
  if (p_entails(premises, conclusion, opt.cap)) {
    emit(opt, "verdict", "P-ENTAILED", "P-ENTAILED");
    return 0;
  }
  emit(opt, "verdict", "NOT P-ENTAILED", "NOT-P-ENTAILED");
  Decision d = entails(premises, conclusion, opt.cap);
  if (d.countermodel) {
    std::string w = format_world(*d.countermodel);
    if (opt.machine()) std::cout << "countermodel=" << w << '\n';
    else std::cout << "point-mass countermodel: " << w << '\n';
  }
  return 1;
}

int run_space_check(const Options& opt, const std::string& path) {
  SpaceFile file = read_space(read_text_file(path));
  SpaceReport algebra_report = validate_sigma_p(file.algebra);
  bool plain_sigma = is_sigma_algebra(file.algebra);

  bool ok = algebra_report.ok();
  emit(opt, "sigma_p", std::string("sigma-p: ") + (algebra_report.ok() ? "VALID" : "INVALID"),
       algebra_report.ok() ? "VALID" : "INVALID");
  emit(opt, "sigma_algebra", std::string("sigma-algebra: ") + (plain_sigma ? "yes" : "no"),
       plain_sigma ? "yes" : "no");

  std::vector<SpaceViolation> violations = algebra_report.violations;
  if (file.pi || file.has_measure()) {
    if (!file.pi) {
      violations.push_back({"pi", "measure given but pi line missing"});
      emit(opt, "space", "space: INVALID", "INVALID");
      ok = false;
    } else {
      ParacompleteProbSpace space{file.algebra, *file.pi, file.measure};
      SpaceReport space_report = validate_space(space);
      emit(opt, "space", std::string("space: ") + (space_report.ok() ? "VALID" : "INVALID"),
           space_report.ok() ? "VALID" : "INVALID");
      ok = ok && space_report.ok();
      violations = space_report.violations;  // includes the algebra clauses
    }
  } else {
    emit(opt, "space", "space: NOT CHECKED (no pi/mu lines)", "UNCHECKED");
  }

  for (const SpaceViolation& v : violations) {
    if (opt.machine()) std::cout << "violation=" << v.clause << ": " << v.detail << '\n';
    else std::cout << v.clause << ": " << v.detail << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mb* paracomplete logic toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--cap", opt.cap, "enumeration cap on 2^|atoms| assignments")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  std::string formula_text, file_path, second_text, third_text;
  std::vector<std::string> formula_list;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print it back");
  parse_cmd->add_option("formula", formula_text)->required();

  auto* decide = app.add_subcommand("decide", "decide tautology / find a countermodel");
  decide->add_option("formula", formula_text)->required();

  auto* table = app.add_subcommand("table", "print the truth table of the given formulas");
  table->add_option("formulas", formula_list)->required()->expected(-1);

  auto* prove = app.add_subcommand("prove-check", "check a proof file");
  prove->add_option("file", file_path)->required();

  auto* deduce = app.add_subcommand("deduce", "apply the deduction theorem to a proof file");
  deduce->add_option("file", file_path)->required();
  deduce->add_option("hypothesis", second_text)->required();

  auto* prob_cmd = app.add_subcommand("prob", "probability of a formula under a distribution");
  prob_cmd->add_option("file", file_path)->required();
  prob_cmd->add_option("formula", formula_text)->required();

  auto* cond = app.add_subcommand("cond", "conditional probability P(target | given)");
  cond->add_option("file", file_path)->required();
  cond->add_option("target", second_text)->required();
  cond->add_option("given", third_text)->required();

  auto* total = app.add_subcommand("total", "paracomplete total-probability decomposition");
  total->add_option("file", file_path)->required();
  total->add_option("alpha", second_text)->required();
  total->add_option("beta", third_text)->required();

  auto* bayes_cmd = app.add_subcommand("bayes", "paracomplete Bayes conditionalization");
  bayes_cmd->add_option("file", file_path)->required();
  bayes_cmd->add_option("alpha", second_text)->required();
  bayes_cmd->add_option("beta", third_text)->required();

  auto* audit = app.add_subcommand("audit", "audit a probability table");
  audit->add_option("file", file_path)->required();

  auto* coher = app.add_subcommand("coherence", "coherence of probability constraints");
  coher->add_option("file", file_path)->required();

  auto* pent = app.add_subcommand("p-entails", "probabilistic entailment (premises..., conclusion)");
  pent->add_option("formulas", formula_list)->required()->expected(-1);

  auto* space = app.add_subcommand("space-check", "validate a paracomplete space file");
  space->add_option("file", file_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or the requested help text
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) {
      std::cout << (opt.machine() ? "formula=" : "") << render(parse_formula(formula_text))
                << '\n';
      return 0;
    }
    if (decide->parsed()) return run_decide(opt, formula_text);
    if (table->parsed()) return run_table(opt, formula_list);
    if (prove->parsed()) return run_prove_check(opt, file_path);
    if (deduce->parsed()) return run_deduce(opt, file_path, second_text);
    if (prob_cmd->parsed()) {
      WorldDistribution d = read_distribution(read_text_file(file_path));
      std::string value = to_string(prob(d, parse_formula(formula_text)));
      emit(opt, "prob", value, value);
      return 0;
    }
    if (cond->parsed()) {
      WorldDistribution d = read_distribution(read_text_file(file_path));
      Rat value = conditional(d, parse_formula(second_text), parse_formula(third_text));
      emit(opt, "conditional", to_string(value), to_string(value));
      return 0;
    }
    if (total->parsed()) return run_total(opt, file_path, second_text, third_text);
    if (bayes_cmd->parsed()) return run_bayes(opt, file_path, second_text, third_text);
    if (audit->parsed()) return run_audit(opt, file_path);
    if (coher->parsed()) return run_coherence(opt, file_path);
    if (pent->parsed()) return run_p_entails(opt, formula_list);
    if (space->parsed()) return run_space_check(opt, file_path);
  } catch (const CapExceededError& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
