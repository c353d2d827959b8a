#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mbstar/formula.hpp"

namespace mbstar {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// A decision atom is a closure node whose 0/1 value is a free choice of the
// valuation: a variable, a negation node, or an undeterminedness node. The
// atom is identified by the syntactic identity of its node formula; this is
// what makes ~ and # non-truth-functional.
struct DecisionAtom {
  Formula node;  // kind Var, Neg or Undet

  Conn kind() const { return node.kind(); }
  std::string display() const { return render(node); }

  friend bool operator==(const DecisionAtom& a, const DecisionAtom& b) {
    return a.node == b.node;
  }
};

// Finite restriction of the valuation semantics to a formula set: the
// subformula closure of the base, augmented with ~f for every #f present so
// that the undeterminedness constraint is checkable. Immutable and cheap to
// copy.
class DecisionClosure {
 public:
  const FormulaSet& base() const { return impl_->base; }
  const FormulaSet& nodes() const { return impl_->nodes; }
  const std::vector<DecisionAtom>& atoms() const { return impl_->atoms; }

  std::optional<std::size_t> atom_index(const Formula& node) const;

  // True when every decision atom occurring in f (variables, ~-nodes and
  // #-nodes, not descending below ~/#) is an atom of this closure; this is
  // exactly the condition under which eval() is defined for f.
  bool can_eval(const Formula& f) const;

  // Closures agree when their atom lists agree; worlds and distributions are
  // interchangeable across equal closures.
  friend bool operator==(const DecisionClosure& a, const DecisionClosure& b);

 private:
  friend DecisionClosure decision_closure(const FormulaSet& base);

  struct Impl {
    FormulaSet base;
    FormulaSet nodes;
    std::vector<DecisionAtom> atoms;
    std::unordered_map<Formula, std::size_t, FormulaHash> atom_index;
  };

  explicit DecisionClosure(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

DecisionClosure decision_closure(const FormulaSet& base);

// An assignment to the closure's decision atoms satisfying the valuation
// constraints:
//   (iv) a ~f node never holds 1 while f evaluates to 1;
//   (v)  a #f node never holds 0 while f and ~f both evaluate to 0.
class World {
 public:
  World(DecisionClosure closure, std::vector<std::uint8_t> bits);

  // Constraint check without constructing; bits are aligned to closure.atoms().
  static bool satisfies_constraints(const DecisionClosure& closure,
                                    const std::vector<std::uint8_t>& bits);

  const DecisionClosure& closure() const { return closure_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  // Value of a single decision atom, keyed by its node formula.
  int value(const Formula& atom_node) const;

  friend bool operator==(const World& a, const World& b) {
    return a.closure_ == b.closure_ && a.bits_ == b.bits_;
  }

 private:
  DecisionClosure closure_;
  std::vector<std::uint8_t> bits_;
};

// Compositional on &, |, ->; reads ~ and # nodes straight from the world.
// Throws UnknownAtomError when f mentions an atom outside the closure.
int eval(const World& w, const Formula& f);

// All constraint-satisfying assignments, ordered with value 1 before value 0
// (most significant atom first), the conventional truth-table row order.
// Throws CapExceededError when 2^|atoms| exceeds the cap.
std::vector<World> enumerate_worlds(const DecisionClosure& closure,
                                    std::uint64_t cap = kDefaultEnumerationCap);

struct Decision {
  bool holds;
  std::optional<World> countermodel;  // present iff !holds
};

Decision is_tautology(const Formula& f, std::uint64_t cap = kDefaultEnumerationCap);

Decision entails(const FormulaSet& premises, const Formula& f,
                 std::uint64_t cap = kDefaultEnumerationCap);

struct TruthTable {
  DecisionClosure closure;
  std::vector<Formula> columns;
  std::vector<World> rows;
  std::vector<std::vector<int>> atom_cells;     // rows x atoms
  std::vector<std::vector<int>> formula_cells;  // rows x columns
};

TruthTable truth_table(const std::vector<Formula>& formulas,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Aligned text rendering, one row per world.
std::string format_truth_table(const TruthTable& table);

// "p=0 ~p=0 #p=1" in closure atom order.
std::string format_world(const World& w);
std::string format_world_bits(const DecisionClosure& closure,
                              const std::vector<std::uint8_t>& bits);

}  // namespace mbstar
