#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbstar/rational.hpp"
#include "mbstar/semantics.hpp"

namespace mbstar {

// Exact-weight distribution over worlds of one decision closure. Induces a
// paracomplete probability function by P(f) = total weight of the worlds
// where f evaluates to 1; point masses are exactly the two-valued probability
// functions, which coincide with the valuations.
class WorldDistribution {
 public:
  WorldDistribution(DecisionClosure closure, std::vector<std::pair<World, Rat>> weights);

  static WorldDistribution point_mass(World w);
  static WorldDistribution uniform(std::vector<World> worlds);

  const DecisionClosure& closure() const { return closure_; }
  const std::vector<std::pair<World, Rat>>& weights() const { return weights_; }

 private:
  DecisionClosure closure_;
  std::vector<std::pair<World, Rat>> weights_;
};

// Total weight of the worlds satisfying f. Throws ClosureMismatchError when f
// mentions atoms outside the distribution's closure.
Rat prob(const WorldDistribution& d, const Formula& f);

// P(target & given) / P(given); throws ZeroConditionError when P(given) = 0.
Rat conditional(const WorldDistribution& d, const Formula& target, const Formula& given);

// The paracomplete law of total probability:
//   P(b) = P(b&a) + P(b&~a) + P(b&#a) - P(b&(a|~a)&#a).
struct TotalProbability {
  Rat p_beta;
  Rat p_beta_and_alpha;
  Rat p_beta_and_neg_alpha;
  Rat p_beta_and_undet_alpha;
  Rat p_beta_and_lem_and_undet_alpha;
  bool identity_holds;
};
TotalProbability total_probability(const WorldDistribution& d, const Formula& alpha,
                                   const Formula& beta);

// Paracomplete Bayes conditionalization: the posterior P(a|b) computed from
// the three conditional-times-prior terms and the correction
//   K = P(b | (a|~a)&#a) * P((a|~a)&#a).
// Requires P(a), P(~a), P((a|~a)&#a) and P(b) nonzero; throws
// HypothesisViolatedError naming the zero term otherwise.
struct BayesReport {
  Rat posterior;
  Rat numerator;
  Rat denominator;
  Rat correction_k;
  // conditional * prior for a, ~a and #a, in that order
  std::array<Rat, 3> terms;
};
BayesReport bayes(const WorldDistribution& d, const Formula& alpha, const Formula& beta);

// A finite window onto a candidate probability function: finitely many
// formulas with values in [0,1].
class ProbAssignment {
 public:
  ProbAssignment() = default;

  void set(const Formula& f, Rat value);  // overwrites; value must be in [0,1]
  std::optional<Rat> value(const Formula& f) const;
  const std::vector<std::pair<Formula, Rat>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<Formula, Rat>> entries_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

struct AuditViolation {
  std::string kind;  // tautologicity | antitautologicity | comparison | additivity
  std::string detail;
};
struct AuditReport {
  std::vector<AuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the probability-function axioms over the window: tautologies get 1,
// unsatisfiable formulas get 0, entailment is monotone, and
// P(f|g) = P(f)+P(g)-P(f&g) whenever all four formulas are present.
AuditReport audit_axioms(const ProbAssignment& t,
                         std::uint64_t cap = kDefaultEnumerationCap);

// Exact linear feasibility: is there a distribution over the joint closure of
// universe plus the constraint formulas giving each constraint formula
// exactly its stated probability? Returns a witness when feasible.
struct CoherenceResult {
  std::optional<WorldDistribution> witness;
  bool feasible() const { return witness.has_value(); }
};
CoherenceResult coherence(const ProbAssignment& constraints, const FormulaSet& universe,
                          std::uint64_t cap = kDefaultEnumerationCap);

// The probabilistic semantic relation: premises force f to probability 1.
// A distribution gives a formula probability 1 exactly when its support
// satisfies it, so this coincides with world entailment; countermodels are
// point masses.
bool p_entails(const FormulaSet& premises, const Formula& f,
               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace mbstar
