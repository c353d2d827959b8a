#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbstar/errors.hpp"
#include "mbstar/probability.hpp"
#include "testutil.hpp"

using namespace mbstar;
using mbstar::testing::F;

namespace {

WorldDistribution uniform_over(const Formula& f) {
  return WorldDistribution::uniform(enumerate_worlds(decision_closure(FormulaSet{f})));
}

WorldDistribution uniform_over(const FormulaSet& base) {
  return WorldDistribution::uniform(enumerate_worlds(decision_closure(base)));
}

// Probability windows drawn from a distribution's own closure nodes plus a
// few composite formulas; used to re-audit induced probability functions.
ProbAssignment induced_window(const WorldDistribution& d, mbstar::testing::Rng& rng) {
  ProbAssignment t;
  const FormulaSet& nodes = d.closure().nodes();
  for (const Formula& f : nodes) t.set(f, prob(d, f));
  for (int i = 0; i < 4; ++i) {
    Formula a = nodes[mbstar::testing::pick(rng, static_cast<int>(nodes.size()))];
    Formula b = nodes[mbstar::testing::pick(rng, static_cast<int>(nodes.size()))];
    t.set(Formula::disj(a, b), prob(d, Formula::disj(a, b)));
    t.set(Formula::conj(a, b), prob(d, Formula::conj(a, b)));
  }
  return t;
}

}  // namespace

TEST_CASE("uniform five-world distribution: hand-counted probabilities") {
  // Independent oracle: enumerate (p, ~p, #p) by hand and apply the two
  // constraints directly.
  int total = 0, count_p = 0, count_n = 0, count_u = 0, count_lem = 0, count_p_and_u = 0;
  for (int p = 0; p <= 1; ++p)
    for (int n = 0; n <= 1; ++n)
      for (int u = 0; u <= 1; ++u) {
        if (p == 1 && n == 1) continue;
        if (p == 0 && n == 0 && u == 0) continue;
        ++total;
        count_p += p;
        count_n += n;
        count_u += u;
        count_lem += (p || n) ? 1 : 0;
        count_p_and_u += (p && u) ? 1 : 0;
      }
  REQUIRE(total == 5);
  REQUIRE(count_p == 2);
  REQUIRE(count_n == 2);
  REQUIRE(count_u == 3);
  REQUIRE(count_lem == 4);
  REQUIRE(count_p_and_u == 1);

  WorldDistribution d = uniform_over(F("#p"));
  CHECK(prob(d, F("p")) == rat(2, 5));
  CHECK(prob(d, F("~p")) == rat(2, 5));
  CHECK(prob(d, F("#p")) == rat(3, 5));
  CHECK(prob(d, F("p | ~p")) == rat(4, 5));
  CHECK(prob(d, F("p & #p")) == rat(1, 5));
  CHECK(prob(d, F("p & ~p")) == 0);
  CHECK(prob(d, F("p | ~p | #p")) == 1);
}

TEST_CASE("point masses recover eval") {
  mbstar::testing::Rng rng(5150);
  for (int round = 0; round < 30; ++round) {
    FormulaSet base = mbstar::testing::random_formula_set(rng, 2, 2);
    DecisionClosure c = decision_closure(base);
    for (const World& w : enumerate_worlds(c)) {
      WorldDistribution d = WorldDistribution::point_mass(w);
      for (const Formula& f : c.nodes())
        CHECK(prob(d, f) == eval(w, f));
    }
  }
}

TEST_CASE("prob rejects formulas outside the closure span") {
  WorldDistribution d = uniform_over(F("#p"));
  CHECK_THROWS_AS(prob(d, F("q")), ClosureMismatchError);
  CHECK_THROWS_AS(prob(d, F("~~p")), ClosureMismatchError);
}

TEST_CASE("distribution invariants are enforced") {
  DecisionClosure c = decision_closure(FormulaSet{F("#p")});
  std::vector<World> worlds = enumerate_worlds(c);

  // Sum must be exactly one.
  CHECK_THROWS_AS(WorldDistribution(c, {{worlds[0], rat(1, 2)}}), InvalidInputError);
  // No negative weights.
  CHECK_THROWS_AS(WorldDistribution(c, {{worlds[0], rat(3, 2)}, {worlds[1], rat(-1, 2)}}),
                  InvalidInputError);
  // No duplicate worlds.
  CHECK_THROWS_AS(WorldDistribution(c, {{worlds[0], rat(1, 2)}, {worlds[0], rat(1, 2)}}),
                  InvalidInputError);
  // Worlds must live over the same closure.
  DecisionClosure other = decision_closure(FormulaSet{F("q")});
  CHECK_THROWS_AS(WorldDistribution(other, {{worlds[0], Rat(1)}}), ClosureMismatchError);
}

TEST_CASE("conditional probability") {
  WorldDistribution d = uniform_over(F("#p"));
  CHECK(conditional(d, F("p"), F("p | ~p")) == rat(1, 2));
  CHECK(conditional(d, F("p"), F("p")) == 1);
  CHECK_THROWS_AS(conditional(d, F("q"), F("p")), ClosureMismatchError);
  CHECK_THROWS_AS(conditional(d, F("p"), F("p & ~p")), ZeroConditionError);
}

TEST_CASE("total paracomplete probability on the worked example") {
  WorldDistribution d = uniform_over(F("#p"));
  TotalProbability t = total_probability(d, F("p"), F("p"));
  CHECK(t.p_beta == rat(2, 5));
  CHECK(t.p_beta_and_alpha == rat(2, 5));
  CHECK(t.p_beta_and_neg_alpha == 0);
  CHECK(t.p_beta_and_undet_alpha == rat(1, 5));
  CHECK(t.p_beta_and_lem_and_undet_alpha == rat(1, 5));
  CHECK(t.identity_holds);
}

TEST_CASE("total probability reduces classically when # carries no mass") {
  // Keep only the worlds with #p = 0: (1,0,0) and (0,1,0).
  DecisionClosure c = decision_closure(FormulaSet{F("#p"), F("q")});
  std::vector<std::pair<World, Rat>> weights;
  for (const World& w : enumerate_worlds(c))
    if (w.value(F("#p")) == 0) weights.emplace_back(w, Rat(0));
  REQUIRE(weights.size() == 4);
  weights[0].second = rat(1, 6);
  weights[1].second = rat(1, 3);
  weights[2].second = rat(1, 2);
  WorldDistribution d(c, weights);

  REQUIRE(prob(d, F("#p")) == 0);
  TotalProbability t = total_probability(d, F("p"), F("q"));
  CHECK(t.p_beta_and_undet_alpha == 0);
  CHECK(t.p_beta_and_lem_and_undet_alpha == 0);
  CHECK(t.p_beta == t.p_beta_and_alpha + t.p_beta_and_neg_alpha);
  CHECK(t.identity_holds);
}

TEST_CASE("total probability identity on point masses") {
  DecisionClosure c = decision_closure(FormulaSet{F("#p"), F("q")});
  for (const World& w : enumerate_worlds(c)) {
    TotalProbability t = total_probability(WorldDistribution::point_mass(w), F("p"), F("q"));
    CHECK(t.identity_holds);
    for (const Rat& v : {t.p_beta, t.p_beta_and_alpha, t.p_beta_and_neg_alpha,
                         t.p_beta_and_undet_alpha, t.p_beta_and_lem_and_undet_alpha})
      CHECK((v == 0 || v == 1));
  }
}

TEST_CASE("paracomplete Bayes on the uniform ten-world example") {
  WorldDistribution d = uniform_over(FormulaSet{F("#a"), F("b")});
  REQUIRE(d.weights().size() == 10);

  REQUIRE(prob(d, F("a")) == rat(2, 5));
  REQUIRE(prob(d, F("~a")) == rat(2, 5));
  REQUIRE(prob(d, F("#a")) == rat(3, 5));
  REQUIRE(prob(d, F("(a | ~a) & #a")) == rat(2, 5));
  REQUIRE(conditional(d, F("b"), F("a")) == rat(1, 2));
  REQUIRE(conditional(d, F("b"), F("~a")) == rat(1, 2));
  REQUIRE(conditional(d, F("b"), F("#a")) == rat(1, 2));
  REQUIRE(conditional(d, F("b"), F("(a | ~a) & #a")) == rat(1, 2));

  BayesReport r = bayes(d, F("a"), F("b"));
  CHECK(r.correction_k == rat(1, 5));
  CHECK(r.denominator == rat(1, 2));
  CHECK(r.numerator == rat(1, 5));
  CHECK(r.posterior == rat(2, 5));
  CHECK(r.posterior == conditional(d, F("a"), F("b")));
  CHECK(r.terms[0] == rat(1, 5));
  CHECK(r.terms[1] == rat(1, 5));
  CHECK(r.terms[2] == rat(3, 10));
}

TEST_CASE("Bayes hypotheses are checked and named") {
  // All mass on a = 1 worlds: P(~a) = 0.
  DecisionClosure c = decision_closure(FormulaSet{F("#a"), F("b")});
  std::vector<std::pair<World, Rat>> weights;
  for (const World& w : enumerate_worlds(c))
    if (w.value(F("a")) == 1) weights.emplace_back(w, rat(1, 4));
  WorldDistribution d(c, weights);

  try {
    bayes(d, F("a"), F("b"));
    FAIL("expected hypothesis violation");
  } catch (const HypothesisViolatedError& e) {
    CHECK(e.term() == "~a");
  }
}

TEST_CASE("classical distributions degenerate to classical Bayes") {
  // No # mass: the correction K and the third term vanish symbolically, so
  // the rule collapses to the two-term classical denominator. The theorem's
  // own hypotheses exclude this case, so the check runs on the terms rather
  // than through bayes().
  DecisionClosure c = decision_closure(FormulaSet{F("#a"), F("b")});
  std::vector<std::pair<World, Rat>> weights;
  for (const World& w : enumerate_worlds(c))
    if (w.value(F("#a")) == 0) weights.emplace_back(w, Rat(0));
  REQUIRE(weights.size() == 4);
  weights[0].second = rat(1, 4);
  weights[1].second = rat(1, 4);
  weights[2].second = rat(1, 4);
  weights[3].second = rat(1, 4);
  WorldDistribution d(c, weights);

  REQUIRE(prob(d, F("#a")) == 0);
  CHECK_THROWS_AS(bayes(d, F("a"), F("b")), HypothesisViolatedError);

  // Zero-prior terms drop out; what remains is classical Bayes.
  Rat term_a = conditional(d, F("b"), F("a")) * prob(d, F("a"));
  Rat term_na = conditional(d, F("b"), F("~a")) * prob(d, F("~a"));
  CHECK(term_a / (term_a + term_na) == conditional(d, F("a"), F("b")));
}

TEST_CASE("audit examples from the probability axioms") {
  ProbAssignment clean;
  clean.set(F("p | ~p | #p"), Rat(1));
  CHECK(audit_axioms(clean).ok());

  ProbAssignment antitaut;
  antitaut.set(F("p & ~p"), rat(1, 2));
  AuditReport r = audit_axioms(antitaut);
  REQUIRE(!r.ok());
  CHECK(r.violations[0].kind == "antitautologicity");

  ProbAssignment comparison;
  comparison.set(F("p"), rat(3, 4));
  comparison.set(F("p | q"), rat(1, 2));
  r = audit_axioms(comparison);
  REQUIRE(!r.ok());
  CHECK(r.violations[0].kind == "comparison");

  ProbAssignment taut;
  taut.set(F("p | ~p | #p"), rat(9, 10));
  r = audit_axioms(taut);
  REQUIRE(!r.ok());
  CHECK(r.violations[0].kind == "tautologicity");

  ProbAssignment additivity;
  additivity.set(F("p"), rat(1, 2));
  additivity.set(F("q"), rat(1, 2));
  additivity.set(F("p | q"), rat(3, 4));
  additivity.set(F("p & q"), rat(1, 4));
  CHECK(audit_axioms(additivity).ok());
  additivity.set(F("p | q"), rat(1, 2));
  r = audit_axioms(additivity);
  REQUIRE(!r.ok());
  CHECK(r.violations[0].kind == "additivity");

  CHECK_THROWS_AS(clean.set(F("p"), rat(5, 4)), InvalidInputError);
}

TEST_CASE("induced probability functions audit clean and satisfy the laws") {
  mbstar::testing::Rng rng(987654);
  for (int round = 0; round < 40; ++round) {
    FormulaSet base = mbstar::testing::random_formula_set(rng, 2, 2);
    base.insert(Formula::undet(mbstar::testing::random_formula(rng, 1)));
    DecisionClosure c = decision_closure(base);
    if (c.atoms().size() > 10) continue;
    WorldDistribution d = mbstar::testing::random_distribution(rng, c);

    CHECK(audit_axioms(induced_window(d, rng)).ok());

    const FormulaSet& nodes = c.nodes();
    auto node = [&] { return nodes[mbstar::testing::pick(rng, static_cast<int>(nodes.size()))]; };

    for (int i = 0; i < 5; ++i) {
      Formula alpha = node();
      // P(a & ~a) = 0 and, when ~a is in the closure, P(a | ~a) = P(a) + P(~a).
      Formula neg_a = Formula::neg(alpha);
      if (c.can_eval(neg_a)) {
        CHECK(prob(d, Formula::conj(alpha, neg_a)) == 0);
        CHECK(prob(d, Formula::disj(alpha, neg_a)) == prob(d, alpha) + prob(d, neg_a));
        if (c.can_eval(Formula::undet(alpha)))
          CHECK(prob(d, Formula::disj(Formula::disj(alpha, neg_a), Formula::undet(alpha))) == 1);
      }

      // The three distribution identities used by the total-probability proof.
      Formula phi = node(), psi = node(), theta = node();
      CHECK(prob(d, Formula::conj(Formula::disj(psi, theta), phi)) ==
            prob(d, Formula::disj(Formula::conj(phi, psi), Formula::conj(phi, theta))));
      CHECK(prob(d, Formula::conj(phi, psi)) == prob(d, Formula::conj(psi, phi)));
      CHECK(prob(d, Formula::conj(Formula::conj(phi, psi), Formula::conj(phi, theta))) ==
            prob(d, Formula::conj(Formula::conj(phi, psi), theta)));

      // Logically equivalent formulas carry equal probability.
      Formula x = node(), y = node();
      if (entails(FormulaSet{x}, y).holds && entails(FormulaSet{y}, x).holds)
        CHECK(prob(d, x) == prob(d, y));
    }

    // Certain premises entail only certain conclusions (the comparison lemma).
    FormulaSet certain;
    for (const Formula& f : nodes)
      if (prob(d, f) == 1 && certain.size() < 3) certain.insert(f);
    if (!certain.empty()) {
      for (int i = 0; i < 3; ++i) {
        Formula beta = node();
        if (entails(certain, beta).holds) CHECK(prob(d, beta) == 1);
      }
    }

    // Total probability identity for random alpha/beta with # in the closure.
    for (const Formula& f : nodes) {
      if (f.kind() != Conn::Undet) continue;
      TotalProbability t = total_probability(d, f.child(), node());
      CHECK(t.identity_holds);
    }
  }
}

TEST_CASE("coherence: the one-variable triples") {
  ProbAssignment window;
  window.set(F("p"), rat(1, 2));
  window.set(F("~p"), rat(1, 2));
  window.set(F("#p"), rat(1, 2));
  CoherenceResult r = coherence(window, {});
  REQUIRE(r.feasible());
  for (const auto& [f, v] : window.entries())
    CHECK(prob(*r.witness, f) == v);
  mbstar::testing::Rng audit_rng(1);
  CHECK(audit_axioms(induced_window(*r.witness, audit_rng)).ok());

  ProbAssignment contradiction;
  contradiction.set(F("p"), Rat(1));
  contradiction.set(F("~p"), Rat(1));
  CHECK(!coherence(contradiction, {}).feasible());

  // Classically impossible, paracompletely fine.
  ProbAssignment lem_half;
  lem_half.set(F("p | ~p"), rat(1, 2));
  r = coherence(lem_half, {});
  REQUIRE(r.feasible());
  CHECK(prob(*r.witness, F("p | ~p")) == rat(1, 2));
}

TEST_CASE("coherence universe extends the closure") {
  ProbAssignment window;
  window.set(F("p"), rat(1, 3));
  CoherenceResult r = coherence(window, FormulaSet{F("#q")});
  REQUIRE(r.feasible());
  CHECK(r.witness->closure().can_eval(F("#q")));
}

TEST_CASE("feasible witnesses reproduce their constraints exactly") {
  mbstar::testing::Rng rng(1111);
  int feasible_seen = 0;
  for (int round = 0; round < 40; ++round) {
    // Sample a window from a random distribution (guaranteed feasible), then
    // re-solve from the window alone.
    FormulaSet base = mbstar::testing::random_formula_set(rng, 2, 2);
    DecisionClosure c = decision_closure(base);
    if (c.atoms().size() > 8) continue;
    WorldDistribution d = mbstar::testing::random_distribution(rng, c);

    ProbAssignment window;
    const FormulaSet& nodes = c.nodes();
    for (int i = 0; i < 3; ++i) {
      Formula f = nodes[mbstar::testing::pick(rng, static_cast<int>(nodes.size()))];
      window.set(f, prob(d, f));
    }
    CoherenceResult r = coherence(window, base);
    REQUIRE(r.feasible());
    ++feasible_seen;
    for (const auto& [f, v] : window.entries())
      CHECK(prob(*r.witness, f) == v);
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("probabilistic entailment coincides with world entailment") {
  CHECK(p_entails(FormulaSet{F("p")}, F("p | q")));
  CHECK(!p_entails(FormulaSet{F("#p")}, F("p | ~p")));

  // A point mass on any countermodel is itself a probabilistic countermodel.
  Decision d = entails(FormulaSet{F("#p")}, F("p | ~p"));
  REQUIRE(d.countermodel.has_value());
  WorldDistribution point = WorldDistribution::point_mass(*d.countermodel);
  CHECK(prob(point, F("#p")) == 1);
  CHECK(prob(point, F("p | ~p")) == 0);

  mbstar::testing::Rng rng(3210);
  for (int round = 0; round < 60; ++round) {
    FormulaSet premises = mbstar::testing::random_formula_set(rng, 2, 2);
    Formula conclusion = mbstar::testing::random_formula(rng, 2);
    CHECK(p_entails(premises, conclusion) == entails(premises, conclusion).holds);
  }
}
