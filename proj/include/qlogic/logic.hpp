#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/subspace.hpp"

namespace qlogic {

/// An experimentally verifiable proposition: a label plus the subspace
/// that represents it.
struct Proposition {
  std::string label;
  Subspace subspace;
};

/// True iff P maps every vector of S back into S (S is invariant
/// under P). Checked on the canonical basis vectors of S.
inline bool invariant_check(const Subspace& s, const Projection& p) {
  if (s.ambient_dim() != p.dim()) throw ShapeError("invariant_check dimension mismatch");
  for (std::size_t i = 0; i < s.basis().rows(); ++i) {
    const Vector image = matvec(p.matrix(), s.basis().row(i));
    if (is_zero_vector(image)) continue;
    if (!s.contains_state(image)) return false;
  }
  return true;
}

/// A maximal family of co-measurable propositions: two or more
/// nontrivial, mutually orthogonal projections that resolve the
/// identity.
class Context {
 public:
  static Context build(std::string label, std::vector<Proposition> members) {
    if (members.size() < 2)
      throw ValidationError("context '" + label + "': needs two or more members");
    std::vector<Projection> projections;
    for (const Proposition& m : members) {
      if (m.subspace.is_trivial())
        throw ValidationError("context '" + label + "': member '" + m.label +
                              "' is a trivial subspace");
      projections.push_back(projection_of(m.subspace));
    }
    const std::size_t n = members[0].subspace.ambient_dim();
    Matrix sum = Matrix::zero(n, n);
    for (std::size_t i = 0; i < projections.size(); ++i) {
      if (projections[i].dim() != n)
        throw ShapeError("context '" + label + "': mixed ambient dimensions");
      for (std::size_t j = i + 1; j < projections.size(); ++j)
        if (!matmul(projections[i].matrix(), projections[j].matrix()).is_zero())
          throw ValidationError("context '" + label + "': members '" + members[i].label +
                                "' and '" + members[j].label + "' are not orthogonal");
      sum = sum + projections[i].matrix();
    }
    if (sum != Matrix::identity(n))
      throw ValidationError("context '" + label + "': projections do not sum to the identity");
    return Context(std::move(label), std::move(members), std::move(projections));
  }

  const std::string& label() const { return label_; }
  const std::vector<Proposition>& members() const { return members_; }
  const std::vector<Projection>& projections() const { return projections_; }
  std::size_t ambient_dim() const { return members_[0].subspace.ambient_dim(); }

 private:
  Context(std::string label, std::vector<Proposition> members, std::vector<Projection> projections)
      : label_(std::move(label)), members_(std::move(members)),
        projections_(std::move(projections)) {}

  std::string label_;
  std::vector<Proposition> members_;
  std::vector<Projection> projections_;
};

/// The Boolean algebra generated by one context: the 2^|members| joins
/// of subsets of the member ranges, indexed by subset bitmask (bit i =
/// member i). Element 0 is {0}; the full mask is the whole space.
class BlockLattice {
 public:
  static BlockLattice build(Context ctx) {
    const std::size_t k = ctx.members().size();
    std::vector<Subspace> elements;
    elements.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Subspace s = Subspace::zero(ctx.ambient_dim());
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) s = join(s, ctx.members()[i].subspace);
      elements.push_back(std::move(s));
    }
    return BlockLattice(std::move(ctx), std::move(elements));
  }

  const Context& context() const { return context_; }
  const std::vector<Subspace>& elements() const { return elements_; }
  std::size_t ambient_dim() const { return context_.ambient_dim(); }

  bool contains(const Subspace& s) const {
    for (const Subspace& e : elements_)
      if (e == s) return true;
    return false;
  }

 private:
  BlockLattice(Context ctx, std::vector<Subspace> elements)
      : context_(std::move(ctx)), elements_(std::move(elements)) {}

  Context context_;
  std::vector<Subspace> elements_;
};

/// The blocks of all contexts associated with one system, unpasted.
class ContextCollection {
 public:
  static ContextCollection build(std::vector<BlockLattice> blocks) {
    if (blocks.empty()) throw ValidationError("context collection is empty");
    const std::size_t n = blocks[0].ambient_dim();
    std::vector<std::string> seen;
    for (const BlockLattice& b : blocks) {
      if (b.ambient_dim() != n)
        throw ShapeError("context collection: mixed ambient dimensions");
      for (const std::string& label : seen)
        if (label == b.context().label())
          throw ValidationError("context collection: duplicate label '" + label + "'");
      seen.push_back(b.context().label());
    }
    return ContextCollection(std::move(blocks));
  }

  const std::vector<BlockLattice>& blocks() const { return blocks_; }
  std::size_t ambient_dim() const { return blocks_[0].ambient_dim(); }

 private:
  explicit ContextCollection(std::vector<BlockLattice> blocks) : blocks_(std::move(blocks)) {}

  std::vector<BlockLattice> blocks_;
};

/// The union of all blocks, merged at common elements ({0}, the full
/// space, and any coinciding subspaces). Order is subspace inclusion.
class PastedLattice {
 public:
  static PastedLattice build(const ContextCollection& collection) {
    std::vector<Subspace> elements;
    for (const BlockLattice& b : collection.blocks())
      for (const Subspace& s : b.elements()) {
        bool present = false;
        for (const Subspace& e : elements)
          if (e == s) { present = true; break; }
        if (!present) elements.push_back(s);
      }
    return PastedLattice(std::move(elements));
  }

  const std::vector<Subspace>& elements() const { return elements_; }

 private:
  explicit PastedLattice(std::vector<Subspace> elements) : elements_(std::move(elements)) {}

  std::vector<Subspace> elements_;
};

struct LocateResult {
  const BlockLattice* block = nullptr;  // null: NoCommonBlock
  bool cohabiting() const { return block != nullptr; }
};

/// Finds a single block whose element set holds both subspaces. When
/// none exists the pair is neither comparable nor incomparable.
inline LocateResult locate_pair(const ContextCollection& collection, const Subspace& a,
                                const Subspace& b) {
  if (a.ambient_dim() != collection.ambient_dim() ||
      b.ambient_dim() != collection.ambient_dim())
    throw ShapeError("locate_pair ambient mismatch");
  for (const BlockLattice& block : collection.blocks())
    if (block.contains(a) && block.contains(b)) return {&block};
  return {};
}

enum class TruthValue { True, False, Indeterminate };

/// Indeterminate prints as "0/0" in reports.
inline std::string truth_text(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    default: return "0/0";
  }
}

inline std::string truth_bit(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "1";
    case TruthValue::False: return "0";
    default: return "0/0";
  }
}

/// Which valuation rule produced a verdict.
enum class Rule {
  FactualTrue,     // Eq-1: state inside the subspace
  FactualFalse,    // Eq-2: state outside the subspace
  OrderLeq,        // Eq-3: state subspace <= proposition subspace
  Incomparable,    // Eq-4: mutually non-ordered pair
  ReverseOrder,    // Eq-5: proposition subspace strictly below the state subspace
  NoCommonBlock,   // Eq-28: pair shares no block, unpasted
};

inline const char* rule_tag(Rule r) {
  switch (r) {
    case Rule::FactualTrue: return "Eq-1";
    case Rule::FactualFalse: return "Eq-2";
    case Rule::OrderLeq: return "Eq-3";
    case Rule::Incomparable: return "Eq-4";
    case Rule::ReverseOrder: return "Eq-5";
    default: return "Eq-28";
  }
}

struct Verdict {
  TruthValue value;
  Rule rule;
  std::string diagnostic;  // empty when clean
};

/// Factual valuation: membership of the concrete state.
inline Verdict evaluate_factual(const Proposition& p, const Vector& psi) {
  if (p.subspace.contains_state(psi)) return {TruthValue::True, Rule::FactualTrue, {}};
  return {TruthValue::False, Rule::FactualFalse, {}};
}

/// Counter-factual valuation in the pasted regime, by the ordering of
/// the state subspace against the proposition subspace. The strict
/// reverse order (state subspace strictly larger) is left
/// indeterminate: membership there genuinely depends on the state.
inline Verdict evaluate_counterfactual_pasted(const Proposition& p,
                                              const Subspace& state_subspace) {
  if (state_subspace.is_trivial())
    throw DomainError("state subspace must be nontrivial");
  if (state_subspace.ambient_dim() != p.subspace.ambient_dim())
    throw ShapeError("state/proposition ambient mismatch");
  switch (classify_order(state_subspace, p.subspace)) {
    case Order::Equal:
    case Order::LeqStrict:
      return {TruthValue::True, Rule::OrderLeq, {}};
    case Order::Incomparable: {
      Verdict v{TruthValue::False, Rule::Incomparable, {}};
      if (!meet(state_subspace, p.subspace).is_zero())
        v.diagnostic = "incomparable pair with nontrivial intersection";
      return v;
    }
    default:
      return {TruthValue::Indeterminate, Rule::ReverseOrder, {}};
  }
}

/// Counter-factual valuation without pasting: the ordering rules apply
/// only inside a shared block; otherwise the value is 0/0.
inline Verdict evaluate_counterfactual_unpasted(const Proposition& p,
                                                const Subspace& state_subspace,
                                                const ContextCollection& collection) {
  if (state_subspace.is_trivial())
    throw DomainError("state subspace must be nontrivial");
  const LocateResult loc = locate_pair(collection, state_subspace, p.subspace);
  if (!loc.cohabiting()) return {TruthValue::Indeterminate, Rule::NoCommonBlock, {}};
  return evaluate_counterfactual_pasted(p, state_subspace);
}

struct Admissibility {
  bool admissible;
  int sum;
};

/// Bivaluation admissibility: the 0/1 values over one context must sum
/// to exactly 1.
inline Admissibility check_admissibility(const Context& ctx,
                                         const std::map<std::string, int>& assignment) {
  int sum = 0;
  for (const Proposition& m : ctx.members()) {
    const auto it = assignment.find(m.label);
    if (it == assignment.end())
      throw ValidationError("assignment missing proposition '" + m.label + "'");
    if (it->second != 0 && it->second != 1)
      throw ValidationError("assignment for '" + m.label + "' must be 0 or 1");
    sum += it->second;
  }
  return {sum == 1, sum};
}

/// Same-space conjunction: the meet of the two subspaces.
inline Proposition conjunction_same_space(const Proposition& p, const Proposition& q) {
  if (p.subspace.ambient_dim() != q.subspace.ambient_dim())
    throw ShapeError("conjunction ambient mismatch");
  return {"(" + p.label + " & " + q.label + ")", meet(p.subspace, q.subspace)};
}

/// Cross-particle conjunction: the tensor product of the two subspaces.
inline Proposition conjunction_cross_space(const Proposition& p, const Proposition& q) {
  return {"(" + p.label + " & " + q.label + ")", tensor(p.subspace, q.subspace)};
}

enum class Mode { Pasted, Unpasted };

/// Assignment of truth values to labeled propositions under one mode
/// and state subspace.
struct Valuation {
  Mode mode;
  Subspace state_subspace;
  std::map<std::string, TruthValue> values;
};

}  // namespace qlogic
