#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mbstar/probability.hpp"
#include "mbstar/proof.hpp"
#include "mbstar/spaces.hpp"

namespace mbstar {

// Line-oriented proof files:
//   premise <formula>
//   <n>: <formula> ; ax<k>
//   <n>: <formula> ; prem
//   <n>: <formula> ; mp <i> <j>
// `//` comments run to end of line.
Derivation read_derivation(std::string_view text);
std::string write_derivation(const Derivation& d);

// Distribution files:
//   closure: <f1>, <f2>, ...
//   world { <atom>=<bit>, ... } weight <p>/<q>
// Every closure atom must be assigned; unlisted worlds carry weight zero.
WorldDistribution read_distribution(std::string_view text);
std::string write_distribution(const WorldDistribution& d);

// Constraint files for audit/coherence:
//   universe: <f1>, <f2>, ...   (optional, may repeat)
//   <formula> = <p>/<q>
struct ConstraintsFile {
  ProbAssignment assignment;
  FormulaSet universe;
};
ConstraintsFile read_constraints(std::string_view text);

// Space files:
//   omega: 1 2
//   set K = {1}
//   circ K = {}
//   diamond K = {1 2}
//   pi = {1 2}
//   mu K = 1/2
// pi and mu are optional as a group; without them only the set-system
// clauses are checkable.
struct SpaceFile {
  SigmaPAlgebra algebra;
  std::optional<OutcomeSet> pi;
  std::map<OutcomeSet, Rat> measure;
  bool has_measure() const { return !measure.empty(); }
};
SpaceFile read_space(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace mbstar
