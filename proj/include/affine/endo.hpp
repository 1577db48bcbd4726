#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affine/transgroup.hpp"

namespace affine {

inline constexpr std::size_t kDefaultMaxGroupOrder = 49;

/// A self-map of a translation group, stored as an index table:
/// table[i] is the index of the image of elements[i]. The two flags are
/// memoized predicate results (nullopt means not yet computed).
struct GroupSelfMap {
  std::vector<ElementIndex> table;
  std::optional<bool> endomorphism;
  std::optional<bool> trace_preserving;

  GroupSelfMap() = default;
  explicit GroupSelfMap(std::vector<ElementIndex> t) : table(std::move(t)) {}

  ElementIndex operator()(std::size_t i) const { return table[i]; }
  std::size_t size() const noexcept { return table.size(); }

  friend bool operator==(const GroupSelfMap& a, const GroupSelfMap& b) { return a.table == b.table; }
  friend auto operator<=>(const GroupSelfMap& a, const GroupSelfMap& b) { return a.table <=> b.table; }
};

/// (α + β)(σ) = α(σ) ∘ β(σ).
GroupSelfMap add(const TranslationGroup& g, const GroupSelfMap& alpha, const GroupSelfMap& beta);

/// (α ∘ β)(σ) = α(β(σ)).
GroupSelfMap compose(const TranslationGroup& g, const GroupSelfMap& alpha, const GroupSelfMap& beta);

/// α(σ₁ ∘ σ₂) = α(σ₁) ∘ α(σ₂) for every pair, and α(id) = id. Uses the
/// memoized flag when present. Throws SizeMismatch.
bool is_endomorphism(const TranslationGroup& g, const GroupSelfMap& alpha);

/// Every σ ≠ id whose image is not the identity keeps its direction. An
/// image equal to the identity has no direction and is accepted.
/// Throws NotEndomorphism.
bool is_trace_preserving(const TranslationGroup& g, const GroupSelfMap& alpha);

/// Computes and stores both flags.
GroupSelfMap& classify(const TranslationGroup& g, GroupSelfMap& alpha);

GroupSelfMap zero_endo(const TranslationGroup& g);
GroupSelfMap unit_endo(const TranslationGroup& g);
/// σ ↦ σ⁻¹.
GroupSelfMap inversion_endo(const TranslationGroup& g);
/// −α = φ ∘ α, the pointwise inverse. Throws NotEndomorphism.
GroupSelfMap negate(const TranslationGroup& g, const GroupSelfMap& alpha);

/// All endomorphisms, found by choosing an image for every generator and
/// propagating along the Cayley graph; a candidate is dropped as soon as one
/// element would receive two images. Sorted by table.
/// Throws OrderTooLarge when the group order exceeds max_order.
std::vector<GroupSelfMap> enumerate_endomorphisms(const TranslationGroup& g,
                                                  std::size_t max_order = kDefaultMaxGroupOrder);

/// Trace-preserving subset of a list of endomorphisms.
std::vector<GroupSelfMap> select_trace_preserving(const TranslationGroup& g, std::span<const GroupSelfMap> endos);

std::vector<GroupSelfMap> enumerate_tp_endomorphisms(const TranslationGroup& g,
                                                     std::size_t max_order = kDefaultMaxGroupOrder);

enum class SelfMapOp { Add, Compose };

/// Sums (or composites) of every pair of listed endomorphisms are again
/// endomorphisms; witness is the pair.
CheckResult check_endomorphism_closure(const TranslationGroup& g, std::span<const GroupSelfMap> endos, SelfMapOp op);

/// Sums (or composites) of every pair of listed trace-preserving
/// endomorphisms are trace-preserving endomorphisms.
CheckResult check_trace_preserving_closure(const TranslationGroup& g, std::span<const GroupSelfMap> tp,
                                           SelfMapOp op);

/// Every listed map is a trace-preserving endomorphism. The witness is the
/// map index, followed by the translation whose direction changes.
CheckResult check_trace_preserving(const TranslationGroup& g, std::span<const GroupSelfMap> maps);

/// For every listed endomorphism: α + 0 = α, α + (−α) = 0, α ∘ 1 = α and
/// −α = φ ∘ α, with −α computed by solving α(σ) ∘ x = id in the Cayley table;
/// plus φ ∘ φ = 1. Witness is the endomorphism index.
CheckResult check_identities(const TranslationGroup& g, std::span<const GroupSelfMap> endos);

/// Counterexample for a ring axiom. `endos` indexes the checked list;
/// `translation` is the group element where the two sides differ, if any.
struct RingWitness {
  std::vector<std::size_t> endos;
  std::optional<ElementIndex> translation;
};

struct RingAxiomResult {
  std::string name;
  bool passed = true;
  std::optional<RingWitness> witness;
  std::string detail;
  std::size_t cases = 0;
};

/// Names of the ten ring axioms, in report order.
inline constexpr const char* kRingAxiomNames[] = {
    "add_closure",      "add_associative", "add_identity",      "add_inverses",       "add_commutative",
    "mul_closure",      "mul_associative", "left_distributive", "right_distributive", "mul_identity",
};

struct RingReport {
  std::vector<RingAxiomResult> axioms;  // one per kRingAxiomNames entry
  RingAxiomResult mul_commutative;      // informational only
  std::optional<std::size_t> end_count;
  std::size_t tp_count = 0;

  bool all_passed() const noexcept;
  /// Throws std::out_of_range for an unknown name.
  const RingAxiomResult& at(std::string_view name) const;
};

/// Exhaustive check of the associative unitary ring axioms on `elements`
/// under + and ∘. `end_count` is carried into the report unchanged.
RingReport check_ring_axioms(const TranslationGroup& g, std::span<const GroupSelfMap> elements,
                             std::optional<std::size_t> end_count = std::nullopt);

/// Comparison of (elements, +, ∘) with integers mod p, where p = |elements|.
/// Labels come from the unit: label(k·1) = k, so 0 ↦ 0 and 1 ↦ 1.
struct ModularComparison {
  bool matches = false;
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> labels;  // label of elements[i]
  std::string detail;
};

ModularComparison compare_with_integers_mod(const TranslationGroup& g, std::span<const GroupSelfMap> elements);

}  // namespace affine
