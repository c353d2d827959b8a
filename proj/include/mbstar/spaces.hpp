#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mbstar/rational.hpp"

namespace mbstar {

// Members of a finite set system over at most 16 labelled outcomes, encoded
// as bitmasks over the label order of the carrier.
using OutcomeSet = std::uint32_t;

inline constexpr std::size_t kMaxOutcomes = 16;

// A finite set system with the two paracomplete operations: ⊙ (written
// circ) in the role complement plays classically, constrained only by
// disjointness from its argument, and ◆ (diamond) constrained through
// ◆A ∩ A^c = A^c \ A⊙. Closure under complement is deliberately absent.
struct SigmaPAlgebra {
  std::vector<std::string> omega;            // outcome labels, in declaration order
  std::vector<OutcomeSet> sigma;             // event sets, in declaration order
  std::map<OutcomeSet, OutcomeSet> circ;     // A -> A⊙
  std::map<OutcomeSet, OutcomeSet> diamond;  // A -> ◆A

  OutcomeSet full() const { return static_cast<OutcomeSet>((1u << omega.size()) - 1); }
  bool in_sigma(OutcomeSet s) const;
  std::string set_name(OutcomeSet s) const;  // "{1 2}" style, for reports
};

struct SpaceViolation {
  std::string clause;  // e.g. "(i)", "(iv)(a)", "additivity"
  std::string detail;
};
struct SpaceReport {
  std::vector<SpaceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive check of the set-system clauses: empty set and carrier present,
// closure under pairwise intersection and (finite) subfamily union, the two
// operation constraints, and totality of both operations on sigma.
SpaceReport validate_sigma_p(const SigmaPAlgebra& a);

// Is sigma additionally closed under complement (i.e. a plain σ-algebra)?
bool is_sigma_algebra(const SigmaPAlgebra& a);

struct ParacompleteProbSpace {
  SigmaPAlgebra algebra;
  OutcomeSet pi;                      // the determined outcomes
  std::map<OutcomeSet, Rat> measure;  // defined on all of sigma
};

// Validates the algebra, pi-membership, measure normalization and finite
// additivity over every pairwise-disjoint subfamily whose union lies in
// sigma.
SpaceReport validate_space(const ParacompleteProbSpace& s);

// The classical specialization: pi = omega, ◆A = A, A⊙ = A^c. Requires a
// σ-algebra and a valid measure; the result passes validate_space.
ParacompleteProbSpace classical_space(std::vector<std::string> omega,
                                      std::vector<OutcomeSet> sigma,
                                      std::map<OutcomeSet, Rat> measure);

}  // namespace mbstar
