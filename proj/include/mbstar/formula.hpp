#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mbstar {

// Connectives of the signature, in structural rank order. Unary ~ is the
// paracomplete negation, unary # the undeterminedness operator.
enum class Conn : std::uint8_t { Var, Neg, Undet, And, Or, Imp };

// Immutable formula tree. Formula is a cheap value (shared immutable nodes);
// equality is syntactic identity, no normalization of any kind: the proof and
// probability layers depend on exact shapes.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula undet(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);

  Conn kind() const { return node_->kind; }
  bool is_unary() const { return kind() == Conn::Neg || kind() == Conn::Undet; }
  bool is_binary() const {
    return kind() == Conn::And || kind() == Conn::Or || kind() == Conn::Imp;
  }

  const std::string& var_name() const;  // Var nodes only
  Formula child() const;                // unary nodes only
  Formula lhs() const;                  // binary nodes only
  Formula rhs() const;

  std::size_t hash() const { return node_->hash; }

  // Total structural order: connective rank, then name / children. Used to
  // give decision atoms a deterministic order, not for any normalization.
  static int compare(const Formula& a, const Formula& b);

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Conn kind;
    std::string name;                      // Var
    std::shared_ptr<const Node> first;     // unary child or binary lhs
    std::shared_ptr<const Node> second;    // binary rhs
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula wrap(Conn kind, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Finite collection of formulas, deduplicated under syntactic identity,
// iterated in insertion order.
class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> fs) {
    for (const Formula& f : fs) insert(f);
  }

  // Returns true when the formula was new.
  bool insert(const Formula& f) {
    auto [it, fresh] = index_.emplace(f, items_.size());
    if (fresh) items_.push_back(f);
    return fresh;
  }
  void insert_all(const FormulaSet& other) {
    for (const Formula& f : other.items_) insert(f);
  }

  bool contains(const Formula& f) const { return index_.count(f) != 0; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Formula>& items() const { return items_; }

  FormulaSet without(const Formula& f) const {
    FormulaSet out;
    for (const Formula& g : items_)
      if (g != f) out.insert(g);
    return out;
  }

  friend bool operator==(const FormulaSet& a, const FormulaSet& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<Formula> items_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

// Substitutions map variable names to formulas; unbound variables map to
// themselves.
using Binding = std::map<std::string, Formula>;

// Concrete syntax: `~` negation, `#` undeterminedness, `&`, `|`, `->`;
// unary binds tightest, then `&`, then `|`, then `->`; `&`/`|` associate
// left, `->` right. `//` starts a comment running to end of line.
// Throws ParseError with byte offset and expected-token set.
Formula parse_formula(std::string_view text);

// Minimal-parentheses rendering; parse_formula(render(f)) == f.
std::string render(const Formula& f);

// Homomorphic replacement at variable leaves.
Formula substitute(const Formula& f, const Binding& binding);

// All subtrees of f including f itself, children before parents.
FormulaSet subformulas(const Formula& f);

}  // namespace mbstar
