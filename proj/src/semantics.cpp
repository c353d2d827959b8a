#include "mbstar/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "mbstar/errors.hpp"

namespace mbstar {

DecisionClosure decision_closure(const FormulaSet& base) {
  auto impl = std::make_shared<DecisionClosure::Impl>();
  impl->base = base;
  for (const Formula& f : base) impl->nodes.insert_all(subformulas(f));

  // Augmentation: constraint (v) for #f reads the value of ~f, so every
  // undeterminedness node drags the matching negation node into the closure.
  // ~f introduces no new subformulas (f is already present) and no new #
  // nodes, so one pass suffices.
  std::vector<Formula> snapshot = impl->nodes.items();
  for (const Formula& n : snapshot)
    if (n.kind() == Conn::Undet) impl->nodes.insert(Formula::neg(n.child()));

  std::vector<Formula> vars;
  std::vector<Formula> unary;
  for (const Formula& n : impl->nodes) {
    if (n.kind() == Conn::Var) vars.push_back(n);
    else if (n.kind() == Conn::Neg || n.kind() == Conn::Undet) unary.push_back(n);
  }
  std::sort(vars.begin(), vars.end(),
            [](const Formula& a, const Formula& b) { return a.var_name() < b.var_name(); });
  std::sort(unary.begin(), unary.end());  // structural order

  for (const Formula& v : vars) impl->atoms.push_back({v});
  for (const Formula& u : unary) impl->atoms.push_back({u});
  for (std::size_t i = 0; i < impl->atoms.size(); ++i)
    impl->atom_index.emplace(impl->atoms[i].node, i);

  return DecisionClosure(std::move(impl));
}

std::optional<std::size_t> DecisionClosure::atom_index(const Formula& node) const {
  auto it = impl_->atom_index.find(node);
  if (it == impl_->atom_index.end()) return std::nullopt;
  return it->second;
}

bool DecisionClosure::can_eval(const Formula& f) const {
  switch (f.kind()) {
    case Conn::Var:
    case Conn::Neg:
    case Conn::Undet:
      return impl_->atom_index.count(f) != 0;
    default:
      return can_eval(f.lhs()) && can_eval(f.rhs());
  }
}

bool operator==(const DecisionClosure& a, const DecisionClosure& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& xs = a.impl_->atoms;
  const auto& ys = b.impl_->atoms;
  return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
}

World::World(DecisionClosure closure, std::vector<std::uint8_t> bits)
    : closure_(std::move(closure)), bits_(std::move(bits)) {
  if (bits_.size() != closure_.atoms().size())
    throw InvalidInputError("world has " + std::to_string(bits_.size()) +
                            " atom values, closure has " +
                            std::to_string(closure_.atoms().size()) + " atoms");
  for (std::uint8_t b : bits_)
    if (b > 1) throw InvalidInputError("world atom values must be 0 or 1");
  if (!satisfies_constraints(closure_, bits_))
    throw InvalidInputError("assignment violates the valuation constraints: " +
                            format_world_bits(closure_, bits_));
}

std::string format_world_bits(const DecisionClosure& closure,
                              const std::vector<std::uint8_t>& bits) {
  std::string out;
  for (std::size_t i = 0; i < closure.atoms().size(); ++i) {
    if (i > 0) out += ' ';
    out += closure.atoms()[i].display() + "=" + std::to_string(int(bits[i]));
  }
  return out;
}

namespace {

// Evaluate against raw bits; shared by World::satisfies_constraints and the
// enumeration filter, where no World object exists yet.
int eval_bits(const DecisionClosure& closure, const std::vector<std::uint8_t>& bits,
              const Formula& f) {
  switch (f.kind()) {
    case Conn::Var:
    case Conn::Neg:
    case Conn::Undet: {
      auto idx = closure.atom_index(f);
      if (!idx) throw UnknownAtomError(render(f));
      return bits[*idx];
    }
    case Conn::And:
      return eval_bits(closure, bits, f.lhs()) && eval_bits(closure, bits, f.rhs());
    case Conn::Or:
      return eval_bits(closure, bits, f.lhs()) || eval_bits(closure, bits, f.rhs());
    case Conn::Imp:
      return !eval_bits(closure, bits, f.lhs()) || eval_bits(closure, bits, f.rhs());
  }
  throw InvalidInputError("corrupt formula node");
}

}  // namespace

bool World::satisfies_constraints(const DecisionClosure& closure,
                                  const std::vector<std::uint8_t>& bits) {
  for (const Formula& n : closure.nodes()) {
    if (n.kind() == Conn::Neg) {
      // (iv): evidence for f forbids evidence against f.
      if (eval_bits(closure, bits, n.child()) == 1 && bits[*closure.atom_index(n)] == 1)
        return false;
    } else if (n.kind() == Conn::Undet) {
      // (v): no evidence either way forces the undeterminedness flag.
      Formula neg = Formula::neg(n.child());
      if (eval_bits(closure, bits, n.child()) == 0 && eval_bits(closure, bits, neg) == 0 &&
          bits[*closure.atom_index(n)] == 0)
        return false;
    }
  }
  return true;
}

int World::value(const Formula& atom_node) const {
  auto idx = closure_.atom_index(atom_node);
  if (!idx) throw UnknownAtomError(render(atom_node));
  return bits_[*idx];
}

int eval(const World& w, const Formula& f) { return eval_bits(w.closure(), w.bits(), f); }

std::vector<World> enumerate_worlds(const DecisionClosure& closure, std::uint64_t cap) {
  std::size_t n = closure.atoms().size();
  if (n >= 63 || (std::uint64_t{1} << n) > cap) throw CapExceededError(n, cap);

  std::vector<World> out;
  std::vector<std::uint8_t> bits(n, 0);
  std::uint64_t total = std::uint64_t{1} << n;
  // Count down so that value 1 sorts before value 0, first atom most
  // significant; rows then come out in conventional truth-table order.
  for (std::uint64_t m = total; m-- > 0;) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = (m >> (n - 1 - i)) & 1;
    if (World::satisfies_constraints(closure, bits)) out.emplace_back(closure, bits);
  }
  return out;
}

Decision is_tautology(const Formula& f, std::uint64_t cap) {
  DecisionClosure closure = decision_closure(FormulaSet{f});
  for (World& w : enumerate_worlds(closure, cap))
    if (eval(w, f) == 0) return {false, std::move(w)};
  return {true, std::nullopt};
}

Decision entails(const FormulaSet& premises, const Formula& f, std::uint64_t cap) {
  FormulaSet base = premises;
  base.insert(f);
  DecisionClosure closure = decision_closure(base);
  for (World& w : enumerate_worlds(closure, cap)) {
    bool all = true;
    for (const Formula& p : premises)
      if (eval(w, p) == 0) {
        all = false;
        break;
      }
    if (all && eval(w, f) == 0) return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

TruthTable truth_table(const std::vector<Formula>& formulas, std::uint64_t cap) {
  FormulaSet base;
  for (const Formula& f : formulas) base.insert(f);
  TruthTable table{decision_closure(base), formulas, {}, {}, {}};
  table.rows = enumerate_worlds(table.closure, cap);
  for (const World& w : table.rows) {
    std::vector<int> avals;
    avals.reserve(table.closure.atoms().size());
    for (const DecisionAtom& a : table.closure.atoms()) avals.push_back(w.value(a.node));
    table.atom_cells.push_back(std::move(avals));
    std::vector<int> fvals;
    fvals.reserve(formulas.size());
    for (const Formula& f : formulas) fvals.push_back(eval(w, f));
    table.formula_cells.push_back(std::move(fvals));
  }
  return table;
}

std::string format_truth_table(const TruthTable& table) {
  std::vector<std::string> headers;
  for (const DecisionAtom& a : table.closure.atoms()) headers.push_back(a.display());
  std::size_t atom_count = headers.size();
  for (const Formula& f : table.columns) headers.push_back(render(f));

  std::vector<std::size_t> widths;
  for (const std::string& h : headers) widths.push_back(h.size());

  std::ostringstream os;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == atom_count) os << "| ";
      os << cells[i];
      os << std::string(widths[i] - cells[i].size(), ' ');
      if (i + 1 < cells.size()) os << "  ";
    }
    os << '\n';
  };

  emit_row(headers);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<std::string> cells;
    for (int v : table.atom_cells[r]) cells.push_back(std::to_string(v));
    for (int v : table.formula_cells[r]) cells.push_back(std::to_string(v));
    emit_row(cells);
  }
  return os.str();
}

std::string format_world(const World& w) { return format_world_bits(w.closure(), w.bits()); }

}  // namespace mbstar
