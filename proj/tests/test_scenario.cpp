#include <doctest.h>

#include <sstream>
#include <string>

#include "qlogic/scenario.hpp"

using namespace qlogic;

namespace {

const std::string kFixtures = QLOGIC_FIXTURES_DIR;

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string cur;
  while (std::getline(in, cur))
    if (cur == line) return true;
  return false;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("epr_unpasted fixture reproduces the indeterminate tuple") {
  const Scenario sc = load_scenario(kFixtures + "/epr_unpasted.qsc");
  CHECK(sc.mode == Mode::Unpasted);
  const std::string report = format_report(evaluate_scenario(sc, sc.mode));
  CHECK(has_line(report, "S-tuple: 1, 0, 0/0, 0/0"));
  CHECK(has_line(report, "prop S3: value=0/0 rule=Eq-28"));
  CHECK(has_line(report, "prop S2: value=false rule=Eq-4"));
  CHECK(has_line(report, "context CtxZ: Admissible"));
  CHECK(has_line(report, "context CtxX: Indeterminate"));
}

TEST_CASE("epr_pasted fixture reproduces the definite tuple") {
  const Scenario sc = load_scenario(kFixtures + "/epr_pasted.qsc");
  const std::string report = format_report(evaluate_scenario(sc, sc.mode));
  CHECK(has_line(report, "S-tuple: 1, 0, 0, 0"));
  // The pasted bivaluation over the x-context sums to 0: the
  // admissibility contradiction.
  CHECK(has_line(report, "context CtxX: Violation(0)"));
  CHECK(has_line(report, "context CtxZ: Admissible"));
}

TEST_CASE("mode flag overrides the file") {
  const Scenario sc = load_scenario(kFixtures + "/epr_unpasted.qsc");
  const std::string report = format_report(evaluate_scenario(sc, Mode::Pasted));
  CHECK(has_line(report, "S-tuple: 1, 0, 0, 0"));
}

TEST_CASE("unpasted reports never fire an ordering rule across blocks") {
  const Scenario sc = load_scenario(kFixtures + "/spin_single_particle.qsc");
  const TruthReport report = evaluate_scenario(sc, Mode::Unpasted);
  const ContextCollection coll = sc.build_collection();
  for (std::size_t i = 0; i < sc.props.size(); ++i) {
    const bool cohabiting =
        locate_pair(coll, *sc.state_subspace, sc.props[i].subspace).cohabiting();
    const Rule rule = report.entries[i].verdict.rule;
    if (!cohabiting) {
      CHECK(rule == Rule::NoCommonBlock);
    } else {
      CHECK(rule != Rule::NoCommonBlock);
    }
  }
}

TEST_CASE("zero state vector is rejected as physically meaningless") {
  const Scenario sc = load_scenario(kFixtures + "/zero_state.qsc");
  CHECK_THROWS_WITH_AS(evaluate_scenario(sc, sc.mode),
                       "physically meaningless state (zero vector)", DomainError);
}

TEST_CASE("parse errors carry line information") {
  std::istringstream bad_scalar("subspace S = (1, 2x)\n");
  CHECK_THROWS_AS(parse_scenario(bad_scalar), ParseError);
  std::istringstream unknown_name("context C = A, B\n");
  CHECK_THROWS_AS(parse_scenario(unknown_name), ValidationError);
  std::istringstream bad_key("frobnicate = 3\n");
  CHECK_THROWS_AS(parse_scenario(bad_key), ParseError);
}

TEST_CASE("context validation failures name the violated requirement") {
  std::istringstream not_orthogonal(
      "subspace A = (1, 0)\nsubspace B = (1, 1)\ncontext C = A, B\n");
  try {
    parse_scenario(not_orthogonal);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("not orthogonal") != std::string::npos);
  }

  std::istringstream incomplete(
      "subspace A = (1, 0, 0)\nsubspace B = (0, 1, 0)\ncontext C = A, B\n");
  try {
    parse_scenario(incomplete);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("identity") != std::string::npos);
  }
}

TEST_CASE("lattice DOT export") {
  const Scenario sc = load_scenario(kFixtures + "/spin_single_particle.qsc");

  SUBCASE("single block is a 4-node diamond") {
    const BlockLattice block = BlockLattice::build(*sc.find_context("Sigma_z"));
    const std::string dot = lattice_dot(block.elements(), sc, "Sigma_z");
    CHECK(count_occurrences(dot, ";") - count_occurrences(dot, "->") == 5);  // 4 nodes + rankdir
    CHECK(count_occurrences(dot, "->") == 4);
  }

  SUBCASE("pasted z/x lattice has 6 nodes") {
    const PastedLattice pasted = PastedLattice::build(sc.build_collection());
    CHECK(pasted.elements().size() == 6);
    const std::string dot = lattice_dot(pasted.elements(), sc, "pasted");
    CHECK(count_occurrences(dot, "->") == 8);  // 4 atoms: bottom->atom, atom->top
  }

  SUBCASE("three-outcome block is an 8-node cube") {
    const Scenario c3 = load_scenario(kFixtures + "/three_outcome_c3.qsc");
    const BlockLattice block = BlockLattice::build(*c3.find_context("Sigma_3"));
    const std::string dot = lattice_dot(block.elements(), c3, "Sigma_3");
    CHECK(block.elements().size() == 8);
    CHECK(count_occurrences(dot, "->") == 12);  // cube edge count
  }

  SUBCASE("edges are exactly the covering relation (no transitive edges)") {
    const PastedLattice pasted = PastedLattice::build(sc.build_collection());
    const auto& els = pasted.elements();
    const std::string dot = lattice_dot(els, sc, "pasted");
    for (std::size_t a = 0; a < els.size(); ++a)
      for (std::size_t b = 0; b < els.size(); ++b) {
        if (a == b || !leq(els[a], els[b]) || els[a] == els[b]) continue;
        bool transitive = false;
        for (std::size_t m = 0; m < els.size(); ++m)
          if (m != a && m != b && leq(els[a], els[m]) && els[m] != els[a] &&
              leq(els[m], els[b]) && els[m] != els[b])
            transitive = true;
        const std::string edge = "\"" + sc.display_name(els[a]) + "\" -> \"" +
                                 sc.display_name(els[b]) + "\"";
        CHECK((dot.find(edge) != std::string::npos) == !transitive);
      }
  }
}

TEST_CASE("admissibility assignments from files") {
  const Scenario sc = load_scenario(kFixtures + "/spin_single_particle.qsc");

  const auto one_hot = load_assignment(kFixtures + "/assignment_one_hot.assign");
  const auto all_zeros = load_assignment(kFixtures + "/assignment_all_zeros.assign");
  const auto two_hot = load_assignment(kFixtures + "/assignment_two_hot.assign");

  const Context& sz = *sc.find_context("Sigma_z");
  const Context& sx = *sc.find_context("Sigma_x");
  CHECK(check_admissibility(sz, one_hot).admissible);
  CHECK(check_admissibility(sx, one_hot).admissible);
  CHECK(check_admissibility(sx, all_zeros).sum == 0);
  CHECK(check_admissibility(sz, two_hot).sum == 2);
  CHECK_THROWS_AS(check_admissibility(sz, {{"P_z+", 1}}), ValidationError);
}

TEST_CASE("report serialization round-trips") {
  for (const char* fixture : {"epr_unpasted.qsc", "epr_pasted.qsc", "spin_single_particle.qsc"}) {
    const Scenario sc = load_scenario(kFixtures + "/" + fixture);
    const TruthReport original = evaluate_scenario(sc, sc.mode);
    const TruthReport reparsed = parse_report(format_report(original));
    CHECK(reparsed.mode == original.mode);
    CHECK(reparsed.state_text == original.state_text);
    REQUIRE(reparsed.entries.size() == original.entries.size());
    for (std::size_t i = 0; i < original.entries.size(); ++i) {
      CHECK(reparsed.entries[i].label == original.entries[i].label);
      CHECK(reparsed.entries[i].verdict.value == original.entries[i].verdict.value);
      CHECK(reparsed.entries[i].verdict.rule == original.entries[i].verdict.rule);
      CHECK(reparsed.entries[i].verdict.diagnostic == original.entries[i].verdict.diagnostic);
    }
    REQUIRE(reparsed.contexts.size() == original.contexts.size());
    for (std::size_t i = 0; i < original.contexts.size(); ++i) {
      CHECK(reparsed.contexts[i].context == original.contexts[i].context);
      CHECK(reparsed.contexts[i].sum == original.contexts[i].sum);
      CHECK(reparsed.contexts[i].admissible == original.contexts[i].admissible);
    }
    // And the re-serialization is byte-identical.
    CHECK(format_report(reparsed) == format_report(original));
  }
}

TEST_CASE("reports are deterministic") {
  const Scenario sc = load_scenario(kFixtures + "/epr_unpasted.qsc");
  const std::string a = format_report(evaluate_scenario(sc, sc.mode));
  const std::string b = format_report(evaluate_scenario(sc, sc.mode));
  CHECK(a == b);
}
