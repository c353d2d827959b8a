#include "mbstar/proof.hpp"

#include <unordered_map>

#include "mbstar/errors.hpp"

namespace mbstar {

const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = [] {
    Formula a = Formula::var("a");
    Formula b = Formula::var("b");
    Formula c = Formula::var("c");
    auto I = [](Formula x, Formula y) { return Formula::imp(std::move(x), std::move(y)); };
    auto A = [](Formula x, Formula y) { return Formula::conj(std::move(x), std::move(y)); };
    auto O = [](Formula x, Formula y) { return Formula::disj(std::move(x), std::move(y)); };
    Formula na = Formula::neg(a);
    Formula ua = Formula::undet(a);

    std::vector<AxiomSchema> out;
    out.push_back({1, {I(a, I(b, a))}});
    out.push_back({2, {I(I(a, b), I(I(a, I(b, c)), I(a, c)))}});
    out.push_back({3, {I(a, I(b, A(a, b)))}});
    out.push_back({4, {I(A(a, b), a)}});
    out.push_back({5, {I(A(a, b), b)}});
    out.push_back({6, {I(a, O(a, b))}});
    out.push_back({7, {I(b, O(a, b))}});
    out.push_back({8, {I(I(a, c), I(I(b, c), I(O(a, b), c)))}});
    out.push_back({9, {O(a, I(a, b))}});
    out.push_back({10, {I(a, I(na, b))}});
    // Included middle appears both as (a|~a)|#a and as a|(~a|#a); accept both.
    out.push_back({11, {O(O(a, na), ua), O(a, O(na, ua))}});
    return out;
  }();
  return schemas;
}

namespace {

bool match_rec(const Formula& pattern, const Formula& f, Binding& binding) {
  if (pattern.kind() == Conn::Var) {
    auto [it, fresh] = binding.emplace(pattern.var_name(), f);
    return fresh || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (pattern.is_unary()) return match_rec(pattern.child(), f.child(), binding);
  return match_rec(pattern.lhs(), f.lhs(), binding) &&
         match_rec(pattern.rhs(), f.rhs(), binding);
}

}  // namespace

std::optional<Binding> match_pattern(const Formula& pattern, const Formula& f) {
  Binding binding;
  if (match_rec(pattern, f, binding)) return binding;
  return std::nullopt;
}

std::optional<Binding> matches_schema(const Formula& f, int k) {
  const auto& schemas = axiom_schemas();
  if (k < 1 || k > static_cast<int>(schemas.size())) return std::nullopt;
  for (const Formula& pattern : schemas[k - 1].patterns)
    if (auto binding = match_pattern(pattern, f)) return binding;
  return std::nullopt;
}

std::optional<AxiomMatch> match_axiom(const Formula& f) {
  for (const AxiomSchema& schema : axiom_schemas())
    for (const Formula& pattern : schema.patterns)
      if (auto binding = match_pattern(pattern, f)) return AxiomMatch{schema.index, *binding};
  return std::nullopt;
}

Verdict check_derivation(const Derivation& d) {
  if (d.lines.empty()) return {false, 0, "empty"};

  std::unordered_map<int, const ProofLine*> seen;
  int prev_index = 0;
  for (const ProofLine& line : d.lines) {
    if (line.index <= prev_index || (prev_index == 0 && line.index != 1))
      return {false, line.index, "bad-index"};
    prev_index = line.index;

    struct Checker {
      const Derivation& d;
      const std::unordered_map<int, const ProofLine*>& seen;
      const ProofLine& line;

      std::optional<Verdict> operator()(const AxiomJust& j) const {
        if (!matches_schema(line.formula, j.schema))
          return Verdict{false, line.index, "not-an-axiom"};
        return std::nullopt;
      }
      std::optional<Verdict> operator()(const PremiseJust&) const {
        if (!d.premises.contains(line.formula))
          return Verdict{false, line.index, "not-a-premise"};
        return std::nullopt;
      }
      std::optional<Verdict> operator()(const MpJust& j) const {
        auto from = seen.find(j.from);
        auto impl = seen.find(j.implication);
        if (from == seen.end() || impl == seen.end())
          return Verdict{false, line.index, "bad-reference"};
        const Formula& f = impl->second->formula;
        if (f.kind() != Conn::Imp || f.lhs() != from->second->formula ||
            f.rhs() != line.formula)
          return Verdict{false, line.index, "mp-shape-mismatch"};
        return std::nullopt;
      }
    };

    if (auto bad = std::visit(Checker{d, seen, line}, line.just)) return *bad;
    seen.emplace(line.index, &line);
  }
  return {true, 0, ""};
}

namespace {

class DeductionBuilder {
 public:
  DeductionBuilder(const Derivation& input, Formula hypothesis)
      : input_(input), hyp_(std::move(hypothesis)) {
    out_.premises = input.premises.without(hyp_);
  }

  Derivation run() {
    for (const ProofLine& line : input_.lines) {
      int translated;
      if (line.formula == hyp_) translated = emit_identity();
      else if (std::holds_alternative<MpJust>(line.just))
        translated = emit_mp(std::get<MpJust>(line.just), line.formula);
      else translated = emit_base(line);
      map_[line.index] = translated;
    }
    return std::move(out_);
  }

 private:
  int emit(Formula f, Justification just) {
    int index = static_cast<int>(out_.lines.size()) + 1;
    out_.lines.push_back({index, std::move(f), std::move(just)});
    return index;
  }

  // Derived a -> a, Axioms 1 and 2 only.
  int emit_identity() {
    Formula aa = Formula::imp(hyp_, hyp_);
    Formula step = Formula::imp(hyp_, aa);                    // a -> (a -> a)
    Formula step2 = Formula::imp(hyp_, Formula::imp(aa, hyp_));  // a -> ((a -> a) -> a)
    int l1 = emit(step, AxiomJust{1});
    int l2 = emit(step2, AxiomJust{1});
    int l3 = emit(Formula::imp(step, Formula::imp(step2, aa)), AxiomJust{2});
    int l4 = emit(Formula::imp(step2, aa), MpJust{l1, l3});
    return emit(aa, MpJust{l2, l4});
  }

  // Axiom or unused-premise line f: keep it, then prefix the hypothesis via
  // Axiom 1.
  int emit_base(const ProofLine& line) {
    Formula target = Formula::imp(hyp_, line.formula);
    int l1 = emit(line.formula, line.just);
    int l2 = emit(Formula::imp(line.formula, target), AxiomJust{1});
    return emit(target, MpJust{l1, l2});
  }

  // MP line: from a -> x and a -> (x -> y) derive a -> y through Axiom 2.
  int emit_mp(const MpJust& j, const Formula& conclusion) {
    const Formula& x = formula_of(j.from);
    Formula ax = Formula::imp(hyp_, x);
    Formula axy = Formula::imp(hyp_, Formula::imp(x, conclusion));
    Formula ay = Formula::imp(hyp_, conclusion);
    int l1 = emit(Formula::imp(ax, Formula::imp(axy, ay)), AxiomJust{2});
    int l2 = emit(Formula::imp(axy, ay), MpJust{map_.at(j.from), l1});
    return emit(ay, MpJust{map_.at(j.implication), l2});
  }

  const Formula& formula_of(int original_index) const {
    for (const ProofLine& line : input_.lines)
      if (line.index == original_index) return line.formula;
    throw InvalidInputError("dangling line reference " + std::to_string(original_index));
  }

  const Derivation& input_;
  Formula hyp_;
  Derivation out_;
  std::unordered_map<int, int> map_;  // input line index -> output line index
};

}  // namespace

Derivation deduction_transform(const Derivation& d, const Formula& hypothesis) {
  Verdict v = check_derivation(d);
  if (!v.valid)
    throw InvalidInputError("input derivation invalid at line " + std::to_string(v.line) +
                            ": " + v.reason);
  if (!d.premises.contains(hypothesis))
    throw InvalidInputError("hypothesis " + render(hypothesis) +
                            " is not among the derivation premises");
  return DeductionBuilder(d, hypothesis).run();
}

}  // namespace mbstar
