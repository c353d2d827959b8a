#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mbstar/formula.hpp"

namespace mbstar {

// One of the 11 axiom schemas of the Hilbert calculus, as a pattern over the
// metavariables a, b, c. Schema 11 (included middle) carries two patterns
// because the three-way disjunction occurs under both bracketings.
struct AxiomSchema {
  int index;
  std::vector<Formula> patterns;
};

const std::vector<AxiomSchema>& axiom_schemas();

// First-order pattern match: metavariables bind to formulas, repeated
// metavariables must bind to identical formulas.
std::optional<Binding> match_pattern(const Formula& pattern, const Formula& f);

// Some instance of schema k (either pattern for schema 11)?
std::optional<Binding> matches_schema(const Formula& f, int k);

// Lowest-index schema that f instantiates, with its binding.
struct AxiomMatch {
  int schema;
  Binding binding;
};
std::optional<AxiomMatch> match_axiom(const Formula& f);

// Line justifications: axiom instance, premise, or modus ponens from lines
// i (antecedent) and j (the implication).
struct AxiomJust {
  int schema;
  friend bool operator==(const AxiomJust&, const AxiomJust&) = default;
};
struct PremiseJust {
  friend bool operator==(const PremiseJust&, const PremiseJust&) = default;
};
struct MpJust {
  int from;         // line holding the antecedent
  int implication;  // line holding antecedent -> this formula
  friend bool operator==(const MpJust&, const MpJust&) = default;
};
using Justification = std::variant<AxiomJust, PremiseJust, MpJust>;

struct ProofLine {
  int index;
  Formula formula;
  Justification just;
};

struct Derivation {
  FormulaSet premises;
  std::vector<ProofLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct Verdict {
  bool valid;
  int line;            // first failing line index (0 when valid)
  std::string reason;  // not-an-axiom | not-a-premise | mp-shape-mismatch |
                       // bad-reference | bad-index | empty
};

// A derivation is valid when every line is an instance of its cited axiom
// schema, a premise, or follows by modus ponens from two earlier lines.
Verdict check_derivation(const Derivation& d);

// Given a valid derivation of b from premises including hypothesis, produce
// a derivation of hypothesis -> b from the remaining premises. The standard
// line-by-line transformation: axiom/premise lines pick up the antecedent
// through Axiom 1, the hypothesis line becomes a derived proof of a -> a
// from Axioms 1 and 2, and modus ponens steps route through Axiom 2. Output
// length is at most five times the input length and always validates.
// Throws InvalidInputError on invalid input or a hypothesis not among the
// premises.
Derivation deduction_transform(const Derivation& d, const Formula& hypothesis);

}  // namespace mbstar
