#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/logic.hpp"

namespace qlogic {

/// A measurement axis given by its two orthogonal spinors. Only axes
/// with Gaussian-rational spinors are representable; the named z/x/y
/// axes cover the standard cases.
struct SpinAxis {
  std::string label;
  Vector spinor_plus;
  Vector spinor_minus;

  static SpinAxis named(const std::string& name) {
    const GaussianRational one = GaussianRational::one();
    const GaussianRational i = GaussianRational::i();
    if (name == "z") return {"z", {one, {}}, {{}, one}};
    if (name == "x") return {"x", {one, one}, {one, -one}};
    if (name == "y") return {"y", {one, i}, {one, -i}};
    throw ParseError("unsupported axis '" + name + "' (expected z, x, or y)");
  }

  void validate() const {
    if (spinor_plus.size() != 2 || spinor_minus.size() != 2)
      throw ShapeError("axis spinors must live in C^2");
    if (is_zero_vector(spinor_plus) || is_zero_vector(spinor_minus))
      throw DomainError("axis spinors must be nonzero");
    GaussianRational inner;
    for (std::size_t k = 0; k < 2; ++k) inner += spinor_plus[k].conj() * spinor_minus[k];
    if (!inner.is_zero())
      throw DomainError("axis '" + label + "': spinors are not orthogonal");
  }
};

/// The two orthogonal lines in C^2 for one axis.
inline std::pair<Subspace, Subspace> spin_subspaces(const SpinAxis& axis) {
  axis.validate();
  return {Subspace::from_span(2, {axis.spinor_plus}),
          Subspace::from_span(2, {axis.spinor_minus})};
}

/// The two-particle EPR-Bohm setup over a pair of axes: single-particle
/// subspaces and contexts in C^2, the composite product subspaces
/// Z1/Z2/X1/X2 in C^4 with their two four-member contexts, and the
/// query sequence S.
struct EprScenario {
  SpinAxis axis_a;  // "z" role
  SpinAxis axis_b;  // "x" role

  // Per-axis lines in C^2 (identical for particles 1 and 2).
  Subspace a_plus, a_minus, b_plus, b_minus;

  // Single-particle contexts, one per particle and axis.
  std::vector<Context> particle_contexts;  // Sigma_1a, Sigma_1b, Sigma_2a, Sigma_2b

  // Composite product lines in C^4.
  Subspace z1, z2, x1, x2;

  // Composite blocks: the a-axis and b-axis product contexts, each
  // completed with the two same-sign product lines so the members
  // resolve the identity on C^4.
  ContextCollection composite_collection;

  // Sequence S: the four cross-particle conjunction propositions.
  std::array<Proposition, 4> sequence;

  // The singlet state (1/sqrt2)(|+-> - |-+>) is what forces the
  // product subspace Z1 or Z2 after particle 1's outcome; it is not
  // used in any computation here, which routes through Z1/Z2 directly.
};

namespace detail {

inline Context composite_context(const std::string& label, const std::string& axis,
                                 const Subspace& plus, const Subspace& minus) {
  return Context::build(
      label, {{"(P_1" + axis + "+ & P_2" + axis + "-)", tensor(plus, minus)},
              {"(P_1" + axis + "- & P_2" + axis + "+)", tensor(minus, plus)},
              {"(P_1" + axis + "+ & P_2" + axis + "+)", tensor(plus, plus)},
              {"(P_1" + axis + "- & P_2" + axis + "-)", tensor(minus, minus)}});
}

}  // namespace detail

inline EprScenario build_epr(const SpinAxis& axis_a, const SpinAxis& axis_b) {
  auto [a_plus, a_minus] = spin_subspaces(axis_a);
  auto [b_plus, b_minus] = spin_subspaces(axis_b);
  if (a_plus == b_plus && a_minus == b_minus)
    throw ValidationError("the two measurement axes must differ");

  std::vector<Context> particle_contexts;
  for (const char* particle : {"1", "2"}) {
    particle_contexts.push_back(Context::build(
        std::string("Sigma_") + particle + axis_a.label,
        {{std::string("P_") + particle + axis_a.label + "+", a_plus},
         {std::string("P_") + particle + axis_a.label + "-", a_minus}}));
    particle_contexts.push_back(Context::build(
        std::string("Sigma_") + particle + axis_b.label,
        {{std::string("P_") + particle + axis_b.label + "+", b_plus},
         {std::string("P_") + particle + axis_b.label + "-", b_minus}}));
  }

  Context ctx_a = detail::composite_context("Sigma_" + axis_a.label + axis_a.label,
                                            axis_a.label, a_plus, a_minus);
  Context ctx_b = detail::composite_context("Sigma_" + axis_b.label + axis_b.label,
                                            axis_b.label, b_plus, b_minus);

  Subspace z1 = tensor(a_plus, a_minus);
  Subspace z2 = tensor(a_minus, a_plus);
  Subspace x1 = tensor(b_plus, b_minus);
  Subspace x2 = tensor(b_minus, b_plus);

  std::array<Proposition, 4> sequence = {
      Proposition{ctx_a.members()[0].label, z1}, Proposition{ctx_a.members()[1].label, z2},
      Proposition{ctx_b.members()[0].label, x1}, Proposition{ctx_b.members()[1].label, x2}};

  ContextCollection collection = ContextCollection::build(
      {BlockLattice::build(std::move(ctx_a)), BlockLattice::build(std::move(ctx_b))});

  return EprScenario{axis_a,
                     axis_b,
                     std::move(a_plus),
                     std::move(a_minus),
                     std::move(b_plus),
                     std::move(b_minus),
                     std::move(particle_contexts),
                     std::move(z1),
                     std::move(z2),
                     std::move(x1),
                     std::move(x2),
                     std::move(collection),
                     std::move(sequence)};
}

struct DerivationStep {
  std::string label;       // what was evaluated
  std::string tag;         // rule/equation tag fired
  TruthValue value;
  std::string commentary;
};

struct DerivationReport {
  Mode mode;
  std::vector<DerivationStep> steps;
  bool contradiction = false;
  std::vector<std::string> violating_contexts;  // contexts whose bivaluation sum != 1
  std::string conclusion;
};

/// Replays the EPR derivation chain step by step. In pasted mode the
/// chain reaches the paradoxical conclusion and the report flags the
/// admissibility contradiction; in unpasted mode the counter-factual
/// steps come out indeterminate and the chain stops short.
inline DerivationReport derive_chain(const EprScenario& s, Mode mode) {
  DerivationReport report;
  report.mode = mode;
  const std::string& a = s.axis_a.label;
  const std::string& b = s.axis_b.label;

  // Single-particle collection for particle 1, used in unpasted mode.
  const ContextCollection particle1 = ContextCollection::build(
      {BlockLattice::build(s.particle_contexts[0]), BlockLattice::build(s.particle_contexts[1])});

  // Step 1: observer 1 verifies P_1a+ factually.
  const Proposition p1a_plus{"P_1" + a + "+", s.a_plus};
  const Verdict v1 = evaluate_factual(p1a_plus, s.a_plus.basis().row(0));
  report.steps.push_back({p1a_plus.label + " at psi_1 in H_1" + a + "+", rule_tag(v1.rule),
                          v1.value, "observer 1 verifies the " + a + "-axis outcome"});

  // Step 2: counter-factual values of P_1b+/- at the state subspace H_1a+.
  for (const auto& [sign, sub] : {std::pair{"+", &s.b_plus}, std::pair{"-", &s.b_minus}}) {
    const Proposition p{"P_1" + b + sign, *sub};
    const Verdict v = mode == Mode::Pasted
                          ? evaluate_counterfactual_pasted(p, s.a_plus)
                          : evaluate_counterfactual_unpasted(p, s.a_plus, particle1);
    report.steps.push_back({p.label + " at H_1" + a + "+",
                            mode == Mode::Pasted ? "Eq-19" : rule_tag(v.rule), v.value,
                            v.diagnostic});
  }

  // Step 3: the product-state conjunction at Z1 (factual within Z1).
  const Verdict v3 = evaluate_counterfactual_pasted(s.sequence[0], s.z1);
  report.steps.push_back({s.sequence[0].label + " at Z1", "Eq-21", v3.value,
                          "the singlet preparation forces the product state"});

  // Step 4: counter-factual values of the b-axis conjunctions at Z1.
  for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
    const Verdict v = mode == Mode::Pasted
                          ? evaluate_counterfactual_pasted(s.sequence[k], s.z1)
                          : evaluate_counterfactual_unpasted(s.sequence[k], s.z1,
                                                             s.composite_collection);
    report.steps.push_back({s.sequence[k].label + " at Z1",
                            mode == Mode::Pasted ? "Eq-22" : rule_tag(v.rule), v.value,
                            v.diagnostic});
  }

  if (mode == Mode::Pasted) {
    // Step 5: the chain asserts P_2a- together with a definite P_2b-/+,
    // i.e. simultaneous verification across incompatible contexts. The
    // implied bivaluation assigns 0 to both members of each b-axis
    // context, so the admissibility sum is 0, not 1.
    report.steps.push_back({"(P_2" + a + "- & P_2" + b + "-/+) verified simultaneously",
                            "Eq-23", TruthValue::True,
                            "paradoxical conclusion drawn from the previous steps"});
    for (const char* particle : {"1", "2"}) {
      const Context& ctx = s.particle_contexts[particle[0] == '1' ? 1 : 3];
      std::map<std::string, int> implied;
      for (const Proposition& m : ctx.members()) implied[m.label] = 0;
      const Admissibility adm = check_admissibility(ctx, implied);
      if (!adm.admissible) report.violating_contexts.push_back(ctx.label());
    }
    report.contradiction = !report.violating_contexts.empty();
    report.conclusion =
        "EPR paradox: the conclusion contradicts the admissibility condition "
        "(Eq-24 sum != 1) on the " + b + "-axis contexts. Avoiding it requires "
        "denying either the principle of locality or counter-factual definiteness.";
  } else {
    report.conclusion =
        "No paradox: without pasting, the counter-factual steps are indeterminate "
        "(0/0) and the chain cannot reach the Eq-23 conclusion.";
  }
  return report;
}

inline DerivationReport derive_pasted_chain(const EprScenario& s) {
  return derive_chain(s, Mode::Pasted);
}

enum class ProductState { Z1, Z2 };

/// Truth values of the four members of S, aligned with S.
using TruthPopulation = std::array<TruthValue, 4>;

inline TruthPopulation truth_population(const EprScenario& s, ProductState state, Mode mode) {
  const Subspace& state_sub = state == ProductState::Z1 ? s.z1 : s.z2;
  TruthPopulation out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Verdict v = mode == Mode::Pasted
                          ? evaluate_counterfactual_pasted(s.sequence[k], state_sub)
                          : evaluate_counterfactual_unpasted(s.sequence[k], state_sub,
                                                             s.composite_collection);
    out[k] = v.value;
  }
  return out;
}

inline std::string format_population(const TruthPopulation& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) s += ", ";
    s += truth_bit(t[k]);
  }
  s += ")";
  return s;
}

}  // namespace qlogic
