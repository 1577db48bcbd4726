#include "affine/transgroup.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "affine/error.hpp"

namespace affine {

std::optional<ElementIndex> TranslationGroup::find(const PointBijection& f) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), f,
                                   [](const ClassifiedMap& e, const PointBijection& key) { return e.map < key; });
  if (it == elements.end() || it->map != f) return std::nullopt;
  return static_cast<ElementIndex>(it - elements.begin());
}

TranslationGroup build_group(const IncidencePlane& plane, std::vector<ClassifiedMap> translations) {
  TranslationGroup g;
  std::sort(translations.begin(), translations.end());
  translations.erase(std::unique(translations.begin(), translations.end()), translations.end());
  if (translations.empty() || !translations.front().map.is_identity()) {
    throw Error(ErrorCode::MissingIdentity, "translation list does not contain the identity");
  }
  g.elements = std::move(translations);

  const std::size_t n = g.order();
  g.table.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = g.find(compose(g.elements[i].map, g.elements[j].map));
      if (!k) {
        throw Error(ErrorCode::NotClosed, "composite of elements " + std::to_string(i) + " and " +
                                              std::to_string(j) + " is not in the list");
      }
      g.cayley(i, j) = *k;
    }
  }

  g.inverse.resize(n);
  g.direction_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = g.find(g.elements[i].map.inverse());
    if (!k) throw Error(ErrorCode::NotClosed, "inverse of element " + std::to_string(i) + " is not in the list");
    g.inverse[i] = *k;
    g.direction_of[i] = direction(plane, g.elements[i]);
  }
  return g;
}

CheckResult check_group_axioms(const TranslationGroup& g) {
  CheckResult r{.name = "group_axioms"};
  const std::size_t n = g.order();
  auto fail = [&](std::vector<std::size_t> w, std::string detail) {
    r.passed = false;
    r.witness = std::move(w);
    r.detail = std::move(detail);
    return r;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.cases;
      if (g.cayley(i, j) >= n) return fail({i, j}, "composite outside the element set");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.cayley(0, i) != i || g.cayley(i, 0) != i) return fail({i}, "element 0 is not a two-sided identity");
    if (g.inverse[i] >= n || g.cayley(i, g.inverse[i]) != 0 || g.cayley(g.inverse[i], i) != 0) {
      return fail({i}, "recorded inverse does not compose to the identity");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++r.cases;
        if (g.cayley(g.cayley(i, j), k) != g.cayley(i, g.cayley(j, k))) {
          return fail({i, j, k}, "composition is not associative");
        }
      }
    }
  }
  return r;
}

CheckResult check_abelian(const TranslationGroup& g) {
  CheckResult r{.name = "abelian"};
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      ++r.cases;
      if (g.cayley(i, j) != g.cayley(j, i)) {
        r.passed = false;
        r.witness = {i, j};
        r.detail = "elements do not commute";
        return r;
      }
    }
  }
  return r;
}

namespace {

PointBijection conjugate(const PointBijection& delta, const PointBijection& sigma) {
  return compose(delta.inverse(), compose(sigma, delta));
}

}  // namespace

CheckResult check_normal_in_dilations(const TranslationGroup& g, std::span<const ClassifiedMap> dilations) {
  CheckResult r{.name = "normal_in_dilations"};
  for (std::size_t d = 0; d < dilations.size(); ++d) {
    for (std::size_t s = 0; s < g.order(); ++s) {
      ++r.cases;
      if (!g.find(conjugate(dilations[d].map, g.elements[s].map))) {
        r.passed = false;
        r.witness = {d, s};
        r.detail = "conjugate of translation by dilation is not a translation";
        return r;
      }
    }
  }
  return r;
}

CheckResult check_conjugation_direction(const TranslationGroup& g, std::span<const ClassifiedMap> dilations) {
  CheckResult r{.name = "conjugation_direction"};
  for (std::size_t d = 0; d < dilations.size(); ++d) {
    for (std::size_t s = 1; s < g.order(); ++s) {
      ++r.cases;
      const auto k = g.find(conjugate(dilations[d].map, g.elements[s].map));
      if (!k || g.direction_of[*k] != g.direction_of[s]) {
        r.passed = false;
        r.witness = {d, s};
        r.detail = k ? "conjugate has a different direction" : "conjugate is not a translation";
        return r;
      }
    }
  }
  return r;
}

CheckResult check_composition_direction(const TranslationGroup& g) {
  CheckResult r{.name = "composition_direction"};
  for (std::size_t s1 = 1; s1 < g.order(); ++s1) {
    for (std::size_t s2 = 1; s2 < g.order(); ++s2) {
      if (g.direction_of[s1] != g.direction_of[s2]) continue;
      ++r.cases;
      const auto k = g.cayley(s2, s1);
      if (k != 0 && g.direction_of[k] != g.direction_of[s1]) {
        r.passed = false;
        r.witness = {s1, s2};
        r.detail = "composite of equal-direction translations changes direction";
        return r;
      }
    }
  }
  return r;
}

CheckResult check_conjugation_permutes(const TranslationGroup& g, std::span<const ClassifiedMap> dilations) {
  CheckResult r{.name = "conjugation_permutes"};
  for (std::size_t d = 0; d < dilations.size(); ++d) {
    ++r.cases;
    std::vector<bool> hit(g.order(), false);
    for (std::size_t s = 0; s < g.order(); ++s) {
      const auto k = g.find(conjugate(dilations[d].map, g.elements[s].map));
      if (!k || hit[*k]) {
        r.passed = false;
        r.witness = {d, s};
        r.detail = "conjugation is not a bijection of the translations";
        return r;
      }
      hit[*k] = true;
    }
  }
  return r;
}

std::vector<bool> generated_subgroup(const TranslationGroup& g, std::span<const ElementIndex> gens) {
  std::vector<bool> in(g.order(), false);
  if (g.order() == 0) return in;
  std::deque<ElementIndex> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    const auto e = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      const auto next = g.cayley(s, e);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  }
  return in;
}

std::vector<ElementIndex> generators(const TranslationGroup& g) {
  std::vector<ElementIndex> gens;
  auto in = generated_subgroup(g, gens);
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (in[i]) continue;
    gens.push_back(static_cast<ElementIndex>(i));
    in = generated_subgroup(g, gens);
  }
  return gens;
}

std::size_t element_order(const TranslationGroup& g, ElementIndex i) {
  std::size_t k = 1;
  for (auto power = i; power != 0 && k <= g.order(); power = g.cayley(i, power)) ++k;
  return k;
}

}  // namespace affine
