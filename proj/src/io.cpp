#include "mbstar/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mbstar/errors.hpp"

namespace mbstar {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Logical lines: comments removed, blanks skipped, 1-based numbering kept.
std::vector<std::pair<int, std::string>> logical_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    std::size_t comment = raw.find("//");
    if (comment != std::string_view::npos) raw = raw.substr(0, comment);
    std::string line = strip(raw);
    if (!line.empty()) out.emplace_back(number, std::move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw IoError("line " + std::to_string(line) + ": " + what);
}

Formula parse_formula_at(int line, std::string_view text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    out.push_back(strip(text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

bool consume_keyword(std::string& line, std::string_view keyword) {
  if (line.size() < keyword.size() || line.compare(0, keyword.size(), keyword) != 0)
    return false;
  if (line.size() > keyword.size() &&
      !std::isspace(static_cast<unsigned char>(line[keyword.size()])) &&
      line[keyword.size()] != ':' && line[keyword.size()] != '=' &&
      line[keyword.size()] != '{')
    return false;
  line = strip(line.substr(keyword.size()));
  return true;
}

}  // namespace

Derivation read_derivation(std::string_view text) {
  Derivation d;
  for (auto& [number, line] : logical_lines(text)) {
    std::string body = line;
    if (consume_keyword(body, "premise")) {
      if (body.empty()) fail(number, "premise line without a formula");
      d.premises.insert(parse_formula_at(number, body));
      continue;
    }

    std::size_t colon = body.find(':');
    if (colon == std::string::npos) fail(number, "expected '<n>: <formula> ; <justification>'");
    std::string index_text = strip(body.substr(0, colon));
    std::size_t semi = body.find(';', colon);
    if (semi == std::string::npos) fail(number, "missing ';' before the justification");

    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(index_text, &used);
      if (used != index_text.size() || index <= 0) throw std::invalid_argument("");
    } catch (...) {
      fail(number, "bad line index '" + index_text + "'");
    }

    Formula formula = parse_formula_at(number, body.substr(colon + 1, semi - colon - 1));
    std::string just = strip(body.substr(semi + 1));

    if (just == "prem") {
      d.lines.push_back({index, std::move(formula), PremiseJust{}});
    } else if (just.rfind("ax", 0) == 0) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(just.substr(2), &used);
        if (used != just.size() - 2) throw std::invalid_argument("");
      } catch (...) {
        fail(number, "bad axiom justification '" + just + "'");
      }
      d.lines.push_back({index, std::move(formula), AxiomJust{k}});
    } else if (just.rfind("mp", 0) == 0) {
      std::istringstream refs(just.substr(2));
      int i = 0, j = 0;
      if (!(refs >> i >> j) || !(refs >> std::ws).eof())
        fail(number, "bad mp justification '" + just + "'");
      d.lines.push_back({index, std::move(formula), MpJust{i, j}});
    } else {
      fail(number, "unknown justification '" + just + "'");
    }
  }
  if (d.lines.empty()) throw IoError("proof file contains no derivation lines");
  return d;
}

std::string write_derivation(const Derivation& d) {
  std::ostringstream os;
  for (const Formula& p : d.premises) os << "premise " << render(p) << '\n';
  for (const ProofLine& line : d.lines) {
    os << line.index << ": " << render(line.formula) << " ; ";
    if (const auto* ax = std::get_if<AxiomJust>(&line.just)) os << "ax" << ax->schema;
    else if (std::holds_alternative<PremiseJust>(line.just)) os << "prem";
    else {
      const auto& mp = std::get<MpJust>(line.just);
      os << "mp " << mp.from << ' ' << mp.implication;
    }
    os << '\n';
  }
  return os.str();
}

WorldDistribution read_distribution(std::string_view text) {
  std::optional<DecisionClosure> closure;
  std::vector<std::pair<World, Rat>> weights;

  for (auto& [number, line] : logical_lines(text)) {
    std::string body = line;
    if (consume_keyword(body, "closure")) {
      if (closure) fail(number, "duplicate closure line");
      if (!body.empty() && body[0] == ':') body = strip(body.substr(1));
      FormulaSet base;
      for (const std::string& part : split(body, ','))
        if (!part.empty()) base.insert(parse_formula_at(number, part));
      if (base.empty()) fail(number, "closure line lists no formulas");
      closure = decision_closure(base);
      continue;
    }
    if (consume_keyword(body, "world")) {
      if (!closure) fail(number, "world line before the closure line");
      std::size_t open = body.find('{');
      std::size_t close = body.find('}');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail(number, "expected 'world { <atom>=<bit>, ... } weight <p>/<q>'");

      std::vector<std::uint8_t> bits(closure->atoms().size(), 0);
      std::vector<bool> assigned(closure->atoms().size(), false);
      for (const std::string& part : split(body.substr(open + 1, close - open - 1), ',')) {
        if (part.empty()) continue;
        std::size_t eq = part.rfind('=');
        if (eq == std::string::npos) fail(number, "bad atom assignment '" + part + "'");
        Formula atom = parse_formula_at(number, part.substr(0, eq));
        std::string bit = strip(part.substr(eq + 1));
        if (bit != "0" && bit != "1") fail(number, "atom value must be 0 or 1 in '" + part + "'");
        auto idx = closure->atom_index(atom);
        if (!idx) fail(number, "'" + render(atom) + "' is not an atom of the closure");
        if (assigned[*idx]) fail(number, "atom '" + render(atom) + "' assigned twice");
        assigned[*idx] = true;
        bits[*idx] = bit == "1" ? 1 : 0;
      }
      for (std::size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i])
          fail(number, "atom '" + closure->atoms()[i].display() + "' not assigned");

      std::string tail = strip(body.substr(close + 1));
      if (!consume_keyword(tail, "weight")) fail(number, "missing 'weight' after the world");
      Rat weight;
      try {
        weight = parse_rational(tail);
      } catch (const Error& e) {
        fail(number, e.what());
      }
      try {
        weights.emplace_back(World(*closure, std::move(bits)), std::move(weight));
      } catch (const Error& e) {
        fail(number, e.what());
      }
      continue;
    }
    fail(number, "expected a 'closure:' or 'world' line");
  }

  if (!closure) throw IoError("distribution file has no closure line");
  try {
    return WorldDistribution(*closure, std::move(weights));
  } catch (const Error& e) {
    throw IoError(std::string("distribution invalid: ") + e.what());
  }
}

std::string write_distribution(const WorldDistribution& d) {
  std::ostringstream os;
  os << "closure:";
  bool first = true;
  for (const Formula& f : d.closure().base()) {
    os << (first ? " " : ", ") << render(f);
    first = false;
  }
  os << '\n';
  for (const auto& [world, weight] : d.weights()) {
    os << "world { ";
    const auto& atoms = d.closure().atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i > 0) os << ", ";
      os << atoms[i].display() << '=' << int(world.bits()[i]);
    }
    os << " } weight " << to_string(weight) << '\n';
  }
  return os.str();
}

ConstraintsFile read_constraints(std::string_view text) {
  ConstraintsFile out;
  for (auto& [number, line] : logical_lines(text)) {
    std::string body = line;
    if (consume_keyword(body, "universe")) {
      if (!body.empty() && body[0] == ':') body = strip(body.substr(1));
      for (const std::string& part : split(body, ','))
        if (!part.empty()) out.universe.insert(parse_formula_at(number, part));
      continue;
    }
    std::size_t eq = body.rfind('=');
    if (eq == std::string::npos) fail(number, "expected '<formula> = <p>/<q>'");
    Formula f = parse_formula_at(number, body.substr(0, eq));
    try {
      out.assignment.set(f, parse_rational(body.substr(eq + 1)));
    } catch (const Error& e) {
      fail(number, e.what());
    }
  }
  if (out.assignment.empty()) throw IoError("constraints file lists no probabilities");
  return out;
}

namespace {

OutcomeSet parse_outcome_set(int number, const SigmaPAlgebra& algebra, std::string body) {
  body = strip(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    fail(number, "expected a set literal {<labels>}");
  OutcomeSet mask = 0;
  std::istringstream is(body.substr(1, body.size() - 2));
  std::string label;
  while (is >> label) {
    auto it = std::find(algebra.omega.begin(), algebra.omega.end(), label);
    if (it == algebra.omega.end()) fail(number, "unknown outcome label '" + label + "'");
    mask |= OutcomeSet{1} << (it - algebra.omega.begin());
  }
  return mask;
}

}  // namespace

SpaceFile read_space(std::string_view text) {
  SpaceFile out;
  std::map<std::string, OutcomeSet> names;
  bool have_omega = false;

  auto named = [&](int number, const std::string& name) {
    auto it = names.find(name);
    if (it == names.end()) fail(number, "undeclared set '" + name + "'");
    return it->second;
  };

  for (auto& [number, line] : logical_lines(text)) {
    std::string body = line;
    if (consume_keyword(body, "omega")) {
      if (have_omega) fail(number, "duplicate omega line");
      if (!body.empty() && body[0] == ':') body = strip(body.substr(1));
      std::istringstream is(body);
      std::string label;
      while (is >> label) out.algebra.omega.push_back(label);
      if (out.algebra.omega.empty()) fail(number, "omega line lists no outcomes");
      if (out.algebra.omega.size() > kMaxOutcomes)
        fail(number, "at most " + std::to_string(kMaxOutcomes) + " outcomes supported");
      have_omega = true;
      continue;
    }
    if (!have_omega) fail(number, "omega line must come first");

    auto keyword_with_name = [&](std::string_view keyword,
                                 std::string* name) -> std::optional<std::string> {
      std::string rest = body;
      if (!consume_keyword(rest, keyword)) return std::nullopt;
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) fail(number, "expected '=' in " + std::string(keyword) + " line");
      *name = strip(rest.substr(0, eq));
      return strip(rest.substr(eq + 1));
    };

    std::string name;
    if (auto rhs = keyword_with_name("set", &name)) {
      if (name.empty()) fail(number, "set line without a name");
      if (names.count(name)) fail(number, "duplicate set name '" + name + "'");
      OutcomeSet mask = parse_outcome_set(number, out.algebra, *rhs);
      names[name] = mask;
      if (!out.algebra.in_sigma(mask)) out.algebra.sigma.push_back(mask);
      continue;
    }
    if (auto rhs = keyword_with_name("circ", &name)) {
      out.algebra.circ[named(number, name)] = parse_outcome_set(number, out.algebra, *rhs);
      continue;
    }
    if (auto rhs = keyword_with_name("diamond", &name)) {
      out.algebra.diamond[named(number, name)] = parse_outcome_set(number, out.algebra, *rhs);
      continue;
    }
    if (auto rhs = keyword_with_name("pi", &name)) {
      if (!name.empty()) fail(number, "pi line takes no name");
      if (out.pi) fail(number, "duplicate pi line");
      out.pi = parse_outcome_set(number, out.algebra, *rhs);
      continue;
    }
    if (auto rhs = keyword_with_name("mu", &name)) {
      OutcomeSet key = named(number, name);
      if (out.measure.count(key)) fail(number, "duplicate measure for '" + name + "'");
      try {
        out.measure[key] = parse_rational(*rhs);
      } catch (const Error& e) {
        fail(number, e.what());
      }
      continue;
    }
    fail(number, "unrecognized line '" + line + "'");
  }

  if (!have_omega) throw IoError("space file has no omega line");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mbstar
