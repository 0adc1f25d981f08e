#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/logic.hpp"

namespace qlogic {

/// In-memory form of a scenario file: named vectors, subspaces and
/// contexts, the collection, the state, and the propositions to
/// evaluate. Line-oriented text, `#` comments, `key = value` entries.
struct Scenario {
  std::size_t ambient_dim = 0;
  std::vector<std::pair<std::string, Vector>> vectors;
  std::vector<std::pair<std::string, Subspace>> subspaces;
  std::vector<Context> contexts;
  std::vector<std::string> collection_names;
  Mode mode = Mode::Unpasted;

  // State: exactly one of the two is set.
  std::optional<Vector> state_vector;
  std::optional<Subspace> state_subspace;
  std::string state_name;
  bool state_is_vector = false;

  std::vector<Proposition> props;

  const Vector* find_vector(const std::string& name) const {
    for (const auto& [n, v] : vectors)
      if (n == name) return &v;
    return nullptr;
  }
  const Subspace* find_subspace(const std::string& name) const {
    for (const auto& [n, s] : subspaces)
      if (n == name) return &s;
    return nullptr;
  }
  const Context* find_context(const std::string& name) const {
    for (const Context& c : contexts)
      if (c.label() == name) return &c;
    return nullptr;
  }

  ContextCollection build_collection() const {
    std::vector<BlockLattice> blocks;
    for (const std::string& name : collection_names) {
      const Context* c = find_context(name);
      if (!c) throw ValidationError("collection references unknown context '" + name + "'");
      blocks.push_back(BlockLattice::build(*c));
    }
    return ContextCollection::build(blocks);
  }

  /// Preferred display name for a subspace: a scenario name when one
  /// matches, else the canonical serialization.
  std::string display_name(const Subspace& s) const {
    for (const auto& [n, sub] : subspaces)
      if (sub == s) return n;
    if (s.is_full()) return "C^" + std::to_string(s.ambient_dim());
    return s.serialize();
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Splits on commas that sit outside parentheses.
inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

inline Vector parse_vector_text(const std::string& text, int line_no) {
  Vector v;
  for (const std::string& part : split_top(text)) {
    try {
      v.push_back(parse_scalar(part));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (v.empty())
    throw ParseError("line " + std::to_string(line_no) + ": empty vector");
  return v;
}

}  // namespace detail

/// Parses the scenario text format:
///
///   ambient = 4
///   vector psi = 1, 0, 0, 0
///   subspace H_z+ = (1, 0)
///   subspace Z1 = tensor(H_z+, H_z-)
///   context Sigma_z = H_z+, H_z-
///   collection = Sigma_z, Sigma_x
///   state = subspace H_z+        | state = vector psi
///   prop P_x+ = H_x+             | prop X1 = tensor(H_x+, H_x-)
///   mode = unpasted
inline Scenario parse_scenario(std::istream& in) {
  Scenario sc;
  std::string pending_state_kind, pending_state_name;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));

    auto resolve_subspace_expr = [&](const std::string& expr) -> Subspace {
      if (expr.rfind("tensor(", 0) == 0 && expr.back() == ')') {
        const auto inner = expr.substr(7, expr.size() - 8);
        const auto parts = detail::split_top(inner);
        if (parts.size() != 2)
          throw ParseError("line " + std::to_string(line_no) + ": tensor() takes two names");
        const Subspace* a = sc.find_subspace(parts[0]);
        const Subspace* b = sc.find_subspace(parts[1]);
        if (!a || !b)
          throw ValidationError("line " + std::to_string(line_no) +
                                ": tensor() references an unknown subspace");
        return tensor(*a, *b);
      }
      if (!expr.empty() && expr[0] == '(') {
        // Inline spanning vectors: (v1), (v2), ...
        std::vector<Vector> rows;
        std::size_t dim = 0;
        for (const std::string& part : detail::split_top(expr)) {
          if (part.size() < 2 || part.front() != '(' || part.back() != ')')
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected parenthesized vectors");
          Vector v = detail::parse_vector_text(part.substr(1, part.size() - 2), line_no);
          if (dim == 0) dim = v.size();
          rows.push_back(std::move(v));
        }
        return Subspace::from_span(dim, rows);
      }
      const Subspace* named = sc.find_subspace(expr);
      if (!named)
        throw ValidationError("line " + std::to_string(line_no) + ": unknown subspace '" +
                              expr + "'");
      return *named;
    };

    if (key == "ambient") {
      sc.ambient_dim = std::stoul(value);
    } else if (key == "mode") {
      if (value == "pasted") sc.mode = Mode::Pasted;
      else if (value == "unpasted") sc.mode = Mode::Unpasted;
      else throw ParseError("line " + std::to_string(line_no) + ": mode must be pasted|unpasted");
    } else if (key == "collection") {
      sc.collection_names = detail::split_top(value);
    } else if (key == "state") {
      std::istringstream ss(value);
      ss >> pending_state_kind >> pending_state_name;
      if (pending_state_kind != "vector" && pending_state_kind != "subspace")
        throw ParseError("line " + std::to_string(line_no) +
                         ": state must be 'vector NAME' or 'subspace NAME'");
    } else if (key.rfind("vector ", 0) == 0) {
      sc.vectors.emplace_back(detail::trim(key.substr(7)),
                              detail::parse_vector_text(value, line_no));
    } else if (key.rfind("subspace ", 0) == 0) {
      sc.subspaces.emplace_back(detail::trim(key.substr(9)), resolve_subspace_expr(value));
    } else if (key.rfind("context ", 0) == 0) {
      const std::string name = detail::trim(key.substr(8));
      std::vector<Proposition> members;
      for (const std::string& member : detail::split_top(value)) {
        const Subspace* s = sc.find_subspace(member);
        if (!s)
          throw ValidationError("line " + std::to_string(line_no) + ": unknown subspace '" +
                                member + "'");
        members.push_back({member, *s});
      }
      sc.contexts.push_back(Context::build(name, std::move(members)));
    } else if (key.rfind("prop ", 0) == 0) {
      sc.props.push_back({detail::trim(key.substr(5)), resolve_subspace_expr(value)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }

  if (!pending_state_kind.empty()) {
    if (pending_state_kind == "vector") {
      const Vector* v = sc.find_vector(pending_state_name);
      if (!v) throw ValidationError("state references unknown vector '" + pending_state_name + "'");
      sc.state_vector = *v;
      sc.state_is_vector = true;
    } else {
      const Subspace* s = sc.find_subspace(pending_state_name);
      if (!s)
        throw ValidationError("state references unknown subspace '" + pending_state_name + "'");
      sc.state_subspace = *s;
    }
    sc.state_name = pending_state_name;
  }
  return sc;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

/// One evaluated proposition in a report.
struct ReportEntry {
  std::string label;
  Verdict verdict;
};

struct TruthReport {
  Mode mode;
  std::string state_text;
  std::vector<ReportEntry> entries;
  // Per-context admissibility of the implied bivaluation; nullopt sum
  // means some member came out indeterminate.
  struct ContextVerdict {
    std::string context;
    std::optional<int> sum;
    bool admissible = false;
  };
  std::vector<ContextVerdict> contexts;
};

/// Evaluates every proposition of the scenario under the given mode and
/// summarizes per-context admissibility of the implied bivaluation.
inline TruthReport evaluate_scenario(const Scenario& sc, Mode mode) {
  TruthReport report;
  report.mode = mode;
  report.state_text = (sc.state_is_vector ? "vector " : "subspace ") + sc.state_name;

  std::optional<ContextCollection> collection;
  if (!sc.collection_names.empty()) collection = sc.build_collection();

  auto evaluate = [&](const Proposition& p) -> Verdict {
    if (sc.state_is_vector) return evaluate_factual(p, *sc.state_vector);
    if (!sc.state_subspace) throw ValidationError("scenario has no state");
    if (mode == Mode::Pasted) return evaluate_counterfactual_pasted(p, *sc.state_subspace);
    if (!collection)
      throw ValidationError("unpasted evaluation requires a collection of contexts");
    return evaluate_counterfactual_unpasted(p, *sc.state_subspace, *collection);
  };

  for (const Proposition& p : sc.props) report.entries.push_back({p.label, evaluate(p)});

  for (const Context& ctx : sc.contexts) {
    TruthReport::ContextVerdict cv{ctx.label(), std::nullopt, false};
    int sum = 0;
    bool defined = true;
    for (const Proposition& m : ctx.members()) {
      const Verdict v = evaluate(m);
      if (v.value == TruthValue::Indeterminate) {
        defined = false;
        break;
      }
      sum += v.value == TruthValue::True ? 1 : 0;
    }
    if (defined) {
      cv.sum = sum;
      cv.admissible = sum == 1;
    }
    report.contexts.push_back(std::move(cv));
  }
  return report;
}

inline std::string format_report(const TruthReport& r) {
  std::ostringstream out;
  out << "mode: " << (r.mode == Mode::Pasted ? "pasted" : "unpasted") << "\n";
  out << "state: " << r.state_text << "\n";
  for (const ReportEntry& e : r.entries) {
    out << "prop " << e.label << ": value=" << truth_text(e.verdict.value)
        << " rule=" << rule_tag(e.verdict.rule);
    if (!e.verdict.diagnostic.empty()) out << " diag=\"" << e.verdict.diagnostic << "\"";
    out << "\n";
  }
  out << "S-tuple: ";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    if (i) out << ", ";
    out << truth_bit(r.entries[i].verdict.value);
  }
  out << "\n";
  if (!r.contexts.empty()) {
    out << "admissibility:\n";
    for (const auto& cv : r.contexts) {
      out << "context " << cv.context << ": ";
      if (!cv.sum)
        out << "Indeterminate";
      else if (cv.admissible)
        out << "Admissible";
      else
        out << "Violation(" << *cv.sum << ")";
      out << "\n";
    }
  }
  return out.str();
}

/// Parses format_report output back into a TruthReport; the two are
/// exact inverses on well-formed reports.
inline TruthReport parse_report(const std::string& text) {
  TruthReport r;
  std::istringstream in(text);
  std::string line;
  bool in_contexts = false;
  while (std::getline(in, line)) {
    if (line.rfind("mode: ", 0) == 0) {
      r.mode = line.substr(6) == "pasted" ? Mode::Pasted : Mode::Unpasted;
    } else if (line.rfind("state: ", 0) == 0) {
      r.state_text = line.substr(7);
    } else if (line == "admissibility:") {
      in_contexts = true;
    } else if (line.rfind("prop ", 0) == 0) {
      const auto colon = line.rfind(": value=");
      if (colon == std::string::npos) throw ParseError("malformed report line: " + line);
      ReportEntry e{line.substr(5, colon - 5), {TruthValue::Indeterminate, Rule::NoCommonBlock, {}}};
      std::string rest = line.substr(colon + 8);
      const auto rule_pos = rest.find(" rule=");
      const std::string value = rest.substr(0, rule_pos);
      e.verdict.value = value == "true"    ? TruthValue::True
                        : value == "false" ? TruthValue::False
                                           : TruthValue::Indeterminate;
      rest = rest.substr(rule_pos + 6);
      const auto diag_pos = rest.find(" diag=\"");
      const std::string tag = rest.substr(0, diag_pos);
      for (Rule rule : {Rule::FactualTrue, Rule::FactualFalse, Rule::OrderLeq,
                        Rule::Incomparable, Rule::ReverseOrder, Rule::NoCommonBlock})
        if (tag == rule_tag(rule)) e.verdict.rule = rule;
      if (diag_pos != std::string::npos)
        e.verdict.diagnostic = rest.substr(diag_pos + 7, rest.size() - diag_pos - 8);
      r.entries.push_back(std::move(e));
    } else if (in_contexts && line.rfind("context ", 0) == 0) {
      const auto colon = line.rfind(": ");
      TruthReport::ContextVerdict cv{line.substr(8, colon - 8), std::nullopt, false};
      const std::string verdict = line.substr(colon + 2);
      if (verdict == "Admissible") {
        cv.sum = 1;
        cv.admissible = true;
      } else if (verdict.rfind("Violation(", 0) == 0) {
        cv.sum = std::stoi(verdict.substr(10));
      }
      r.contexts.push_back(std::move(cv));
    }
  }
  return r;
}

/// DOT digraph of the covering relation of a set of lattice elements.
/// Nodes are sorted by canonical serialization so output is
/// deterministic; edges point upward (smaller -> larger).
inline std::string lattice_dot(const std::vector<Subspace>& elements, const Scenario& sc,
                               const std::string& graph_name) {
  std::vector<std::size_t> order(elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return elements[a].serialize() < elements[b].serialize();
  });

  auto covers = [&](std::size_t lo, std::size_t hi) {
    if (!(leq(elements[lo], elements[hi]) && elements[lo] != elements[hi])) return false;
    for (std::size_t mid = 0; mid < elements.size(); ++mid) {
      if (mid == lo || mid == hi) continue;
      if (leq(elements[lo], elements[mid]) && elements[mid] != elements[lo] &&
          leq(elements[mid], elements[hi]) && elements[mid] != elements[hi])
        return false;
    }
    return true;
  };

  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i : order)
    out << "  \"" << sc.display_name(elements[i]) << "\";\n";
  for (std::size_t lo : order)
    for (std::size_t hi : order)
      if (covers(lo, hi))
        out << "  \"" << sc.display_name(elements[lo]) << "\" -> \""
            << sc.display_name(elements[hi]) << "\";\n";
  out << "}\n";
  return out.str();
}

/// Assignment files: `name = 0|1` lines, `#` comments.
inline std::map<std::string, int> load_assignment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open assignment file '" + path + "'");
  std::map<std::string, int> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("assignment line " + std::to_string(line_no) + ": expected 'name = 0|1'");
    const std::string name = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (value != "0" && value != "1")
      throw ParseError("assignment line " + std::to_string(line_no) + ": value must be 0 or 1");
    out[name] = value == "1" ? 1 : 0;
  }
  return out;
}

}  // namespace qlogic
