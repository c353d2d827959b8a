#include "mbstar/probability.hpp"

#include <stdexcept>

#include "mbstar/errors.hpp"
#include "mbstar/linear.hpp"

namespace mbstar {

WorldDistribution::WorldDistribution(DecisionClosure closure,
                                     std::vector<std::pair<World, Rat>> weights)
    : closure_(std::move(closure)), weights_(std::move(weights)) {
  Rat total(0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const auto& [world, weight] = weights_[i];
    if (!(world.closure() == closure_))
      throw ClosureMismatchError("distribution world built over a different closure");
    if (weight < 0)
      throw InvalidInputError("negative world weight " + to_string(weight));
    for (std::size_t j = 0; j < i; ++j)
      if (weights_[j].first == world)
        throw InvalidInputError("duplicate world in distribution: " + format_world(world));
    total += weight;
  }
  if (total != 1)
    throw InvalidInputError("world weights sum to " + to_string(total) + ", expected 1");
}

WorldDistribution WorldDistribution::point_mass(World w) {
  DecisionClosure closure = w.closure();
  std::vector<std::pair<World, Rat>> weights;
  weights.emplace_back(std::move(w), Rat(1));
  return WorldDistribution(std::move(closure), std::move(weights));
}

WorldDistribution WorldDistribution::uniform(std::vector<World> worlds) {
  if (worlds.empty()) throw InvalidInputError("uniform distribution over no worlds");
  Rat weight = rat(1, static_cast<long>(worlds.size()));
  DecisionClosure closure = worlds.front().closure();
  std::vector<std::pair<World, Rat>> weights;
  weights.reserve(worlds.size());
  for (World& w : worlds) weights.emplace_back(std::move(w), weight);
  return WorldDistribution(std::move(closure), std::move(weights));
}

Rat prob(const WorldDistribution& d, const Formula& f) {
  if (!d.closure().can_eval(f))
    throw ClosureMismatchError("formula " + render(f) +
                               " mentions atoms outside the distribution closure");
  Rat total(0);
  for (const auto& [world, weight] : d.weights())
    if (eval(world, f) == 1) total += weight;
  return total;
}

Rat conditional(const WorldDistribution& d, const Formula& target, const Formula& given) {
  Rat denom = prob(d, given);
  if (denom == 0) throw ZeroConditionError(render(given));
  return prob(d, Formula::conj(target, given)) / denom;
}

TotalProbability total_probability(const WorldDistribution& d, const Formula& alpha,
                                   const Formula& beta) {
  Formula neg_a = Formula::neg(alpha);
  Formula undet_a = Formula::undet(alpha);
  Formula lem = Formula::disj(alpha, neg_a);

  TotalProbability out{
      prob(d, beta),
      prob(d, Formula::conj(beta, alpha)),
      prob(d, Formula::conj(beta, neg_a)),
      prob(d, Formula::conj(beta, undet_a)),
      prob(d, Formula::conj(Formula::conj(beta, lem), undet_a)),
      false,
  };
  out.identity_holds = out.p_beta == out.p_beta_and_alpha + out.p_beta_and_neg_alpha +
                                         out.p_beta_and_undet_alpha -
                                         out.p_beta_and_lem_and_undet_alpha;
  return out;
}

BayesReport bayes(const WorldDistribution& d, const Formula& alpha, const Formula& beta) {
  Formula neg_a = Formula::neg(alpha);
  Formula undet_a = Formula::undet(alpha);
  Formula lem_and_undet = Formula::conj(Formula::disj(alpha, neg_a), undet_a);

  for (const Formula& hyp : {alpha, neg_a, lem_and_undet, beta})
    if (prob(d, hyp) == 0) throw HypothesisViolatedError(render(hyp));

  BayesReport report;
  report.terms = {conditional(d, beta, alpha) * prob(d, alpha),
                  conditional(d, beta, neg_a) * prob(d, neg_a),
                  conditional(d, beta, undet_a) * prob(d, undet_a)};
  report.correction_k = conditional(d, beta, lem_and_undet) * prob(d, lem_and_undet);
  report.numerator = report.terms[0];
  report.denominator =
      report.terms[0] + report.terms[1] + report.terms[2] - report.correction_k;
  report.posterior = report.numerator / report.denominator;

  // The rule is provably equal to P(a&b)/P(b); a mismatch means the engine is
  // broken, not the input.
  if (report.posterior != conditional(d, alpha, beta))
    throw std::logic_error("bayes posterior diverged from the conditional");
  return report;
}

void ProbAssignment::set(const Formula& f, Rat value) {
  if (!in_unit_interval(value))
    throw InvalidInputError("probability value " + to_string(value) + " for " + render(f) +
                            " is outside [0,1]");
  auto [it, fresh] = index_.emplace(f, entries_.size());
  if (fresh) entries_.emplace_back(f, std::move(value));
  else entries_[it->second].second = std::move(value);
}

std::optional<Rat> ProbAssignment::value(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].second;
}

namespace {

bool unsatisfiable_over_own_closure(const Formula& f, std::uint64_t cap) {
  DecisionClosure closure = decision_closure(FormulaSet{f});
  for (const World& w : enumerate_worlds(closure, cap))
    if (eval(w, f) == 1) return false;
  return true;
}

}  // namespace

AuditReport audit_axioms(const ProbAssignment& t, std::uint64_t cap) {
  AuditReport report;
  const auto& entries = t.entries();

  for (const auto& [f, value] : entries) {
    if (is_tautology(f, cap).holds && value != 1)
      report.violations.push_back(
          {"tautologicity", render(f) + " is a tautology but has value " + to_string(value)});
    if (unsatisfiable_over_own_closure(f, cap) && value != 0)
      report.violations.push_back({"antitautologicity", render(f) +
                                       " is unsatisfiable but has value " + to_string(value)});
  }

  for (const auto& [psi, pv] : entries) {
    for (const auto& [phi, fv] : entries) {
      if (psi == phi) continue;
      if (entails(FormulaSet{psi}, phi, cap).holds && pv > fv)
        report.violations.push_back(
            {"comparison", render(psi) + " entails " + render(phi) + " but " + to_string(pv) +
                               " > " + to_string(fv)});
    }
  }

  for (const auto& [phi, fv] : entries) {
    for (const auto& [psi, pv] : entries) {
      auto both = t.value(Formula::disj(phi, psi));
      auto meet = t.value(Formula::conj(phi, psi));
      if (!both || !meet) continue;
      if (*both != fv + pv - *meet)
        report.violations.push_back(
            {"additivity", "P(" + render(Formula::disj(phi, psi)) + ") = " + to_string(*both) +
                               " but P(" + render(phi) + ") + P(" + render(psi) + ") - P(" +
                               render(Formula::conj(phi, psi)) + ") = " +
                               to_string(fv + pv - *meet)});
    }
  }

  return report;
}

CoherenceResult coherence(const ProbAssignment& constraints, const FormulaSet& universe,
                          std::uint64_t cap) {
  FormulaSet base = universe;
  for (const auto& [f, value] : constraints.entries()) base.insert(f);
  DecisionClosure closure = decision_closure(base);
  std::vector<World> worlds = enumerate_worlds(closure, cap);

  // One row per constraint plus normalization; one column per world.
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (const auto& [f, value] : constraints.entries()) {
    std::vector<Rat> row(worlds.size(), Rat(0));
    for (std::size_t j = 0; j < worlds.size(); ++j)
      if (eval(worlds[j], f) == 1) row[j] = 1;
    a.push_back(std::move(row));
    b.push_back(value);
  }
  a.emplace_back(worlds.size(), Rat(1));
  b.emplace_back(1);

  auto solution = solve_nonneg_exact(std::move(a), std::move(b));
  if (!solution) return {std::nullopt};

  std::vector<std::pair<World, Rat>> weights;
  for (std::size_t j = 0; j < worlds.size(); ++j)
    if ((*solution)[j] != 0) weights.emplace_back(worlds[j], (*solution)[j]);
  return {WorldDistribution(closure, std::move(weights))};
}

bool p_entails(const FormulaSet& premises, const Formula& f, std::uint64_t cap) {
  // A distribution assigns probability 1 to every premise exactly when every
  // world in its support satisfies them all, so the relation reduces to world
  // entailment; the countermodel side is witnessed by a point mass.
  return entails(premises, f, cap).holds;
}

}  // namespace mbstar
