#include "mbstar/spaces.hpp"

#include <algorithm>
#include <functional>

#include "mbstar/errors.hpp"

namespace mbstar {

bool SigmaPAlgebra::in_sigma(OutcomeSet s) const {
  return std::find(sigma.begin(), sigma.end(), s) != sigma.end();
}

std::string SigmaPAlgebra::set_name(OutcomeSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(s >> i & 1)) continue;
    if (!first) out += ' ';
    out += omega[i];
    first = false;
  }
  return out + "}";
}

namespace {

void check_carrier(const SigmaPAlgebra& a, SpaceReport& report) {
  if (a.omega.empty())
    report.violations.push_back({"(i)", "sample space is empty"});
  if (a.omega.size() > kMaxOutcomes)
    throw CapExceededError("sample space has " + std::to_string(a.omega.size()) +
                               " outcomes, exhaustive checking is capped at " +
                               std::to_string(kMaxOutcomes),
                           kMaxOutcomes);
  for (std::size_t i = 0; i < a.omega.size(); ++i)
    for (std::size_t j = i + 1; j < a.omega.size(); ++j)
      if (a.omega[i] == a.omega[j])
        report.violations.push_back({"(i)", "duplicate outcome label " + a.omega[i]});
  for (OutcomeSet s : a.sigma)
    if ((s & ~a.full()) != 0)
      report.violations.push_back({"(i)", "event outside the sample space"});
}

}  // namespace

SpaceReport validate_sigma_p(const SigmaPAlgebra& a) {
  SpaceReport report;
  check_carrier(a, report);

  if (!a.in_sigma(0)) report.violations.push_back({"(i)", "empty set missing from sigma"});
  if (!a.in_sigma(a.full()))
    report.violations.push_back({"(i)", "sample space missing from sigma"});

  for (OutcomeSet x : a.sigma)
    for (OutcomeSet y : a.sigma) {
      if (!a.in_sigma(x & y))
        report.violations.push_back({"(ii)", "intersection " + a.set_name(x & y) + " of " +
                                                 a.set_name(x) + " and " + a.set_name(y) +
                                                 " missing from sigma"});
      // Closure under arbitrary subfamily unions reduces to pairwise closure
      // for a finite sigma.
      if (!a.in_sigma(x | y))
        report.violations.push_back({"(iii)", "union " + a.set_name(x | y) + " of " +
                                                  a.set_name(x) + " and " + a.set_name(y) +
                                                  " missing from sigma"});
    }

  for (OutcomeSet x : a.sigma) {
    auto circ = a.circ.find(x);
    if (circ == a.circ.end()) {
      report.violations.push_back({"(iv)", "circ undefined on " + a.set_name(x)});
    } else {
      if (!a.in_sigma(circ->second))
        report.violations.push_back(
            {"(iv)", "circ image " + a.set_name(circ->second) + " of " + a.set_name(x) +
                         " missing from sigma"});
      if ((circ->second & x) != 0)
        report.violations.push_back({"(iv)(a)", "circ of A = " + a.set_name(x) +
                                                    " meets A: " + a.set_name(circ->second)});
    }
    auto diamond = a.diamond.find(x);
    if (diamond == a.diamond.end()) {
      report.violations.push_back({"(iv)", "diamond undefined on " + a.set_name(x)});
    } else if (!a.in_sigma(diamond->second)) {
      report.violations.push_back(
          {"(iv)", "diamond image " + a.set_name(diamond->second) + " of " + a.set_name(x) +
                       " missing from sigma"});
    } else if (circ != a.circ.end()) {
      OutcomeSet complement = a.full() & ~x;
      OutcomeSet lhs = diamond->second & complement;
      OutcomeSet rhs = complement & ~circ->second;
      if (lhs != rhs)
        report.violations.push_back(
            {"(iv)(b)", "diamond A ∩ A^c = " + a.set_name(lhs) + " but A^c \\ circ A = " +
                            a.set_name(rhs) + " for A = " + a.set_name(x)});
    }
  }

  return report;
}

bool is_sigma_algebra(const SigmaPAlgebra& a) {
  if (a.omega.empty() || a.omega.size() > kMaxOutcomes) return false;
  if (!a.in_sigma(0) || !a.in_sigma(a.full())) return false;
  for (OutcomeSet x : a.sigma) {
    if (!a.in_sigma(a.full() & ~x)) return false;
    for (OutcomeSet y : a.sigma)
      if (!a.in_sigma(x | y)) return false;
  }
  return true;
}

namespace {

// Enumerate pairwise-disjoint subfamilies of the nonempty members of sigma
// (singletons and up), invoking visit on each family whose union is in
// sigma. Backtracking with a used-outcomes mask keeps this tractable for the
// sizes the cap admits.
void for_each_disjoint_family(const SigmaPAlgebra& a,
                              const std::function<void(const std::vector<OutcomeSet>&)>& visit) {
  std::vector<OutcomeSet> members;
  for (OutcomeSet s : a.sigma)
    if (s != 0) members.push_back(s);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<OutcomeSet> family;
  std::function<void(std::size_t, OutcomeSet)> recurse = [&](std::size_t next,
                                                             OutcomeSet used) {
    if (family.size() >= 2 && a.in_sigma(used)) visit(family);
    for (std::size_t i = next; i < members.size(); ++i) {
      if ((members[i] & used) != 0) continue;
      family.push_back(members[i]);
      recurse(i + 1, used | members[i]);
      family.pop_back();
    }
  };
  recurse(0, 0);
}

}  // namespace

SpaceReport validate_space(const ParacompleteProbSpace& s) {
  SpaceReport report = validate_sigma_p(s.algebra);
  const SigmaPAlgebra& a = s.algebra;

  if (!a.in_sigma(s.pi))
    report.violations.push_back(
        {"pi", "determined-outcome set " + a.set_name(s.pi) + " not in sigma"});

  for (OutcomeSet x : a.sigma) {
    auto it = s.measure.find(x);
    if (it == s.measure.end()) {
      report.violations.push_back({"measure", "measure undefined on " + a.set_name(x)});
      continue;
    }
    if (!in_unit_interval(it->second))
      report.violations.push_back({"measure", "measure of " + a.set_name(x) + " is " +
                                                  to_string(it->second) +
                                                  ", outside [0,1]"});
  }

  auto measure_of = [&](OutcomeSet x) -> const Rat* {
    auto it = s.measure.find(x);
    return it == s.measure.end() ? nullptr : &it->second;
  };

  if (const Rat* m = measure_of(0); m && *m != 0)
    report.violations.push_back(
        {"normalization", "measure of the empty set is " + to_string(*m) + ", expected 0"});
  if (const Rat* m = measure_of(a.full()); m && *m != 1)
    report.violations.push_back(
        {"normalization", "measure of the sample space is " + to_string(*m) + ", expected 1"});

  for_each_disjoint_family(a, [&](const std::vector<OutcomeSet>& family) {
    OutcomeSet whole = 0;
    Rat sum(0);
    for (OutcomeSet x : family) {
      whole |= x;
      const Rat* m = measure_of(x);
      if (!m) return;  // reported above
      sum += *m;
    }
    const Rat* total = measure_of(whole);
    if (!total) return;
    if (*total != sum) {
      std::string names;
      for (OutcomeSet x : family) names += (names.empty() ? "" : ", ") + a.set_name(x);
      report.violations.push_back(
          {"additivity", "measure of " + a.set_name(whole) + " is " + to_string(*total) +
                             " but the disjoint family " + names + " sums to " +
                             to_string(sum)});
    }
  });

  return report;
}

ParacompleteProbSpace classical_space(std::vector<std::string> omega,
                                      std::vector<OutcomeSet> sigma,
                                      std::map<OutcomeSet, Rat> measure) {
  SigmaPAlgebra algebra;
  algebra.omega = std::move(omega);
  algebra.sigma = std::move(sigma);

  if (!is_sigma_algebra(algebra))
    throw InvalidInputError("classical_space requires a σ-algebra");
  for (OutcomeSet x : algebra.sigma) {
    algebra.circ[x] = algebra.full() & ~x;  // A⊙ = A^c
    algebra.diamond[x] = x;                 // ◆A = A
  }

  ParacompleteProbSpace space{std::move(algebra), /*pi=*/0, std::move(measure)};
  space.pi = space.algebra.full();
  SpaceReport report = validate_space(space);
  if (!report.ok())
    throw InvalidInputError("classical_space measure invalid: " +
                            report.violations.front().detail);
  return space;
}

}  // namespace mbstar
