#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affine/check.hpp"
#include "affine/collineation.hpp"

namespace affine {

using ElementIndex = std::uint32_t;

/// The translations of a plane as an explicit finite group. Elements are in
/// canonical order (identity first, then lexicographic by image array);
/// cayley(i, j) is the index of elements[i] ∘ elements[j].
struct TranslationGroup {
  std::vector<ClassifiedMap> elements;
  std::vector<ElementIndex> table;  // row-major order x order
  std::vector<ElementIndex> inverse;
  std::vector<std::optional<DirectionId>> direction_of;

  std::size_t order() const noexcept { return elements.size(); }
  ElementIndex cayley(std::size_t i, std::size_t j) const { return table[i * elements.size() + j]; }
  ElementIndex& cayley(std::size_t i, std::size_t j) { return table[i * elements.size() + j]; }

  /// Index of a permutation among the elements, by binary search.
  std::optional<ElementIndex> find(const PointBijection& f) const;
};

/// Builds the Cayley table by composing permutations. Throws MissingIdentity
/// if the identity is absent, NotClosed (naming the pair) if a composite
/// falls outside the list.
TranslationGroup build_group(const IncidencePlane& plane, std::vector<ClassifiedMap> translations);

CheckResult check_group_axioms(const TranslationGroup& g);
CheckResult check_abelian(const TranslationGroup& g);
/// δ⁻¹ ∘ σ ∘ δ ∈ Tr for every dilation δ and translation σ; the witness is
/// (dilation index, translation index).
CheckResult check_normal_in_dilations(const TranslationGroup& g, std::span<const ClassifiedMap> dilations);
/// δ⁻¹ ∘ σ ∘ δ has the direction of σ for every σ ≠ id.
CheckResult check_conjugation_direction(const TranslationGroup& g, std::span<const ClassifiedMap> dilations);
/// σ₂ ∘ σ₁ keeps a direction shared by σ₁ and σ₂ (or is the identity).
CheckResult check_composition_direction(const TranslationGroup& g);
/// Conjugation by each dilation is a bijection of the translation set.
CheckResult check_conjugation_permutes(const TranslationGroup& g, std::span<const ClassifiedMap> dilations);

/// Closure of a set of elements under the group law, as a membership mask.
std::vector<bool> generated_subgroup(const TranslationGroup& g, std::span<const ElementIndex> gens);

/// Greedy generating set: repeatedly take the lowest-index element outside
/// the subgroup generated so far.
std::vector<ElementIndex> generators(const TranslationGroup& g);

/// Order of one element.
std::size_t element_order(const TranslationGroup& g, ElementIndex i);

}  // namespace affine
