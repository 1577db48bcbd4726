#include "affine/endo.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "affine/error.hpp"

namespace affine {

namespace {

void require_size(const TranslationGroup& g, const GroupSelfMap& a) {
  if (a.size() != g.order()) {
    throw Error(ErrorCode::SizeMismatch, "self-map table has " + std::to_string(a.size()) +
                                             " entries, group order is " + std::to_string(g.order()));
  }
}

GroupSelfMap flagged(std::vector<ElementIndex> table) {
  GroupSelfMap m(std::move(table));
  m.endomorphism = true;
  m.trace_preserving = true;
  return m;
}

}  // namespace

GroupSelfMap add(const TranslationGroup& g, const GroupSelfMap& alpha, const GroupSelfMap& beta) {
  require_size(g, alpha);
  require_size(g, beta);
  std::vector<ElementIndex> t(g.order());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.cayley(alpha(i), beta(i));
  return GroupSelfMap(std::move(t));
}

GroupSelfMap compose(const TranslationGroup& g, const GroupSelfMap& alpha, const GroupSelfMap& beta) {
  require_size(g, alpha);
  require_size(g, beta);
  std::vector<ElementIndex> t(g.order());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = alpha(beta(i));
  return GroupSelfMap(std::move(t));
}

bool is_endomorphism(const TranslationGroup& g, const GroupSelfMap& alpha) {
  if (alpha.endomorphism) return *alpha.endomorphism;
  require_size(g, alpha);
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha(i) >= n) return false;
  }
  if (n > 0 && alpha(0) != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha(g.cayley(i, j)) != g.cayley(alpha(i), alpha(j))) return false;
    }
  }
  return true;
}

bool is_trace_preserving(const TranslationGroup& g, const GroupSelfMap& alpha) {
  if (alpha.trace_preserving) return *alpha.trace_preserving;
  if (!is_endomorphism(g, alpha)) {
    throw Error(ErrorCode::NotEndomorphism, "trace preservation is defined for endomorphisms only");
  }
  for (std::size_t s = 1; s < g.order(); ++s) {
    const auto image = alpha(s);
    if (image == 0) continue;
    if (g.direction_of[image] != g.direction_of[s]) return false;
  }
  return true;
}

GroupSelfMap& classify(const TranslationGroup& g, GroupSelfMap& alpha) {
  alpha.endomorphism = is_endomorphism(g, alpha);
  alpha.trace_preserving = *alpha.endomorphism && is_trace_preserving(g, alpha);
  return alpha;
}

GroupSelfMap zero_endo(const TranslationGroup& g) { return flagged(std::vector<ElementIndex>(g.order(), 0)); }

GroupSelfMap unit_endo(const TranslationGroup& g) {
  std::vector<ElementIndex> t(g.order());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<ElementIndex>(i);
  return flagged(std::move(t));
}

// An endomorphism because the translation group is abelian; its trace
// preservation follows from σ and σ⁻¹ sharing every trace.
GroupSelfMap inversion_endo(const TranslationGroup& g) { return flagged(g.inverse); }

GroupSelfMap negate(const TranslationGroup& g, const GroupSelfMap& alpha) {
  if (!is_endomorphism(g, alpha)) throw Error(ErrorCode::NotEndomorphism, "negation needs an endomorphism");
  auto result = compose(g, inversion_endo(g), alpha);
  result.endomorphism = true;
  if (alpha.trace_preserving) result.trace_preserving = alpha.trace_preserving;
  return result;
}

std::vector<GroupSelfMap> enumerate_endomorphisms(const TranslationGroup& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order) {
    throw Error(ErrorCode::OrderTooLarge, "endomorphism enumeration limited to group order " +
                                              std::to_string(max_order) + ", got " + std::to_string(n));
  }
  const auto gens = generators(g);
  const std::size_t k = gens.size();
  constexpr ElementIndex kUnset = ~ElementIndex{0};

  std::vector<GroupSelfMap> out;
  std::vector<ElementIndex> choice(k, 0);
  std::vector<ElementIndex> image(n);
  std::deque<ElementIndex> queue;
  while (true) {
    // Propagate α(s ∘ e) = α(s) ∘ α(e) over every Cayley-graph edge.
    std::fill(image.begin(), image.end(), kUnset);
    image[0] = 0;
    queue.assign({0});
    bool consistent = true;
    while (consistent && !queue.empty()) {
      const auto e = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < k; ++gi) {
        const auto target = g.cayley(gens[gi], e);
        const auto value = g.cayley(choice[gi], image[e]);
        if (image[target] == kUnset) {
          image[target] = value;
          queue.push_back(target);
        } else if (image[target] != value) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      GroupSelfMap m(image);
      if (is_endomorphism(g, m)) {
        m.endomorphism = true;
        out.push_back(std::move(m));
      }
    }

    std::size_t pos = 0;
    while (pos < k && ++choice[pos] == n) choice[pos++] = 0;
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupSelfMap> select_trace_preserving(const TranslationGroup& g, std::span<const GroupSelfMap> endos) {
  std::vector<GroupSelfMap> out;
  for (const auto& e : endos) {
    if (is_trace_preserving(g, e)) {
      auto m = e;
      m.endomorphism = true;
      m.trace_preserving = true;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<GroupSelfMap> enumerate_tp_endomorphisms(const TranslationGroup& g, std::size_t max_order) {
  const auto all = enumerate_endomorphisms(g, max_order);
  return select_trace_preserving(g, all);
}

bool RingReport::all_passed() const noexcept {
  return std::all_of(axioms.begin(), axioms.end(), [](const auto& a) { return a.passed; });
}

const RingAxiomResult& RingReport::at(std::string_view name) const {
  for (const auto& a : axioms) {
    if (a.name == name) return a;
  }
  throw std::out_of_range("no ring axiom named " + std::string(name));
}

namespace {

class RingChecker {
 public:
  RingChecker(const TranslationGroup& g, std::span<const GroupSelfMap> elems) : g_(g), elems_(elems) {
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i].table, i);
  }

  RingReport run() {
    RingReport report;
    report.tp_count = elems_.size();
    report.axioms = {
        closure("add_closure", [&](const auto& a, const auto& b) { return add(g_, a, b); }),
        associative("add_associative", [&](const auto& a, const auto& b) { return add(g_, a, b); }),
        add_identity(),
        add_inverses(),
        commutative("add_commutative", [&](const auto& a, const auto& b) { return add(g_, a, b); }),
        closure("mul_closure", [&](const auto& a, const auto& b) { return compose(g_, a, b); }),
        associative("mul_associative", [&](const auto& a, const auto& b) { return compose(g_, a, b); }),
        left_distributive(),
        right_distributive(),
        mul_identity(),
    };
    report.mul_commutative = commutative("mul_commutative", [&](const auto& a, const auto& b) { return compose(g_, a, b); });
    return report;
  }

 private:
  std::optional<std::size_t> lookup(const GroupSelfMap& m) const {
    const auto it = index_.find(m.table);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  static std::optional<ElementIndex> first_difference(const GroupSelfMap& a, const GroupSelfMap& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return static_cast<ElementIndex>(i);
    }
    return std::nullopt;
  }

  static void fail(RingAxiomResult& r, std::vector<std::size_t> endos, std::optional<ElementIndex> sigma,
                   std::string detail) {
    r.passed = false;
    r.witness = RingWitness{std::move(endos), sigma};
    r.detail = std::move(detail);
  }

  // Records a failure when lhs and rhs differ; returns true on failure.
  bool differ(RingAxiomResult& r, const GroupSelfMap& lhs, const GroupSelfMap& rhs, std::vector<std::size_t> endos,
              const char* detail) {
    ++r.cases;
    if (auto sigma = first_difference(lhs, rhs)) {
      fail(r, std::move(endos), sigma, detail);
      return true;
    }
    return false;
  }

  template <class Op>
  RingAxiomResult closure(const char* name, Op op) {
    RingAxiomResult r{.name = name};
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (std::size_t j = 0; j < elems_.size(); ++j) {
        ++r.cases;
        if (!lookup(op(elems_[i], elems_[j]))) {
          fail(r, {i, j}, std::nullopt, "result is not in the set");
          return r;
        }
      }
    }
    return r;
  }

  template <class Op>
  RingAxiomResult associative(const char* name, Op op) {
    RingAxiomResult r{.name = name};
    const auto n = elems_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto ij = op(elems_[i], elems_[j]);
        for (std::size_t k = 0; k < n; ++k) {
          const auto lhs = op(ij, elems_[k]);
          const auto rhs = op(elems_[i], op(elems_[j], elems_[k]));
          if (differ(r, lhs, rhs, {i, j, k}, "(a op b) op c differs from a op (b op c)")) return r;
        }
      }
    }
    return r;
  }

  template <class Op>
  RingAxiomResult commutative(const char* name, Op op) {
    RingAxiomResult r{.name = name};
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (std::size_t j = i + 1; j < elems_.size(); ++j) {
        if (differ(r, op(elems_[i], elems_[j]), op(elems_[j], elems_[i]), {i, j}, "a op b differs from b op a")) {
          return r;
        }
      }
    }
    return r;
  }

  RingAxiomResult add_identity() {
    RingAxiomResult r{.name = "add_identity"};
    const auto zero = zero_endo(g_);
    const auto z = lookup(zero);
    if (!z) {
      fail(r, {}, std::nullopt, "zero endomorphism is not in the set");
      return r;
    }
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (differ(r, add(g_, elems_[i], zero), elems_[i], {i, *z}, "a + 0 differs from a")) return r;
      if (differ(r, add(g_, zero, elems_[i]), elems_[i], {*z, i}, "0 + a differs from a")) return r;
    }
    return r;
  }

  RingAxiomResult add_inverses() {
    RingAxiomResult r{.name = "add_inverses"};
    const auto zero = zero_endo(g_);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      // Pointwise inverse, so non-endomorphisms in a fixture do not throw.
      const auto neg = compose(g_, inversion_endo(g_), elems_[i]);
      const auto k = lookup(neg);
      if (!k) {
        ++r.cases;
        fail(r, {i}, std::nullopt, "additive inverse is not in the set");
        return r;
      }
      if (differ(r, add(g_, elems_[i], neg), zero, {i, *k}, "a + (-a) differs from 0")) return r;
    }
    return r;
  }

  RingAxiomResult left_distributive() {
    RingAxiomResult r{.name = "left_distributive"};
    const auto n = elems_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto& [a, b, c] = std::tie(elems_[i], elems_[j], elems_[k]);
          const auto lhs = compose(g_, a, add(g_, b, c));
          const auto rhs = add(g_, compose(g_, a, b), compose(g_, a, c));
          if (differ(r, lhs, rhs, {i, j, k}, "a(b + c) differs from ab + ac")) return r;
        }
      }
    }
    return r;
  }

  RingAxiomResult right_distributive() {
    RingAxiomResult r{.name = "right_distributive"};
    const auto n = elems_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto& [a, b, c] = std::tie(elems_[i], elems_[j], elems_[k]);
          const auto lhs = compose(g_, add(g_, a, b), c);
          const auto rhs = add(g_, compose(g_, a, c), compose(g_, b, c));
          if (differ(r, lhs, rhs, {i, j, k}, "(a + b)c differs from ac + bc")) return r;
        }
      }
    }
    return r;
  }

  RingAxiomResult mul_identity() {
    RingAxiomResult r{.name = "mul_identity"};
    const auto unit = unit_endo(g_);
    const auto u = lookup(unit);
    if (!u) {
      // Witness: the first element, with the first translation it moves,
      // is not the unit; no element of the set equals the identity table.
      std::vector<std::size_t> endos;
      std::optional<ElementIndex> sigma;
      if (!elems_.empty()) {
        endos = {0};
        sigma = first_difference(elems_[0], unit);
      }
      r.cases = elems_.size();
      fail(r, std::move(endos), sigma, "unit endomorphism is not in the set");
      return r;
    }
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (differ(r, compose(g_, elems_[i], unit), elems_[i], {i, *u}, "a o 1 differs from a")) return r;
      if (differ(r, compose(g_, unit, elems_[i]), elems_[i], {*u, i}, "1 o a differs from a")) return r;
    }
    return r;
  }

  const TranslationGroup& g_;
  std::span<const GroupSelfMap> elems_;
  std::map<std::vector<ElementIndex>, std::size_t> index_;
};

}  // namespace

RingReport check_ring_axioms(const TranslationGroup& g, std::span<const GroupSelfMap> elements,
                             std::optional<std::size_t> end_count) {
  for (const auto& e : elements) require_size(g, e);
  auto report = RingChecker(g, elements).run();
  report.end_count = end_count;
  return report;
}

ModularComparison compare_with_integers_mod(const TranslationGroup& g, std::span<const GroupSelfMap> elements) {
  ModularComparison out;
  const auto p = static_cast<std::uint32_t>(elements.size());
  out.modulus = p;
  if (p == 0) {
    out.detail = "empty set";
    return out;
  }

  std::map<std::vector<ElementIndex>, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].table, i);
  auto lookup = [&](const GroupSelfMap& m) -> std::optional<std::size_t> {
    const auto it = index.find(m.table);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  constexpr std::uint32_t kUnlabeled = ~std::uint32_t{0};
  out.labels.assign(p, kUnlabeled);
  const auto unit = unit_endo(g);
  auto multiple = zero_endo(g);
  for (std::uint32_t k = 0; k < p; ++k) {
    const auto i = lookup(multiple);
    if (!i || out.labels[*i] != kUnlabeled) {
      out.detail = "multiples of the unit do not enumerate the set";
      return out;
    }
    out.labels[*i] = k;
    multiple = add(g, multiple, unit);
  }

  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const auto s = lookup(add(g, elements[i], elements[j]));
      const auto m = lookup(compose(g, elements[i], elements[j]));
      if (!s || out.labels[*s] != (out.labels[i] + out.labels[j]) % p) {
        out.detail = "addition table differs at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        return out;
      }
      if (!m || out.labels[*m] != (out.labels[i] * out.labels[j]) % p) {
        out.detail = "multiplication table differs at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        return out;
      }
    }
  }
  out.matches = true;
  return out;
}

}  // namespace affine

namespace affine {

namespace {

GroupSelfMap apply(const TranslationGroup& g, SelfMapOp op, const GroupSelfMap& a, const GroupSelfMap& b) {
  return op == SelfMapOp::Add ? add(g, a, b) : compose(g, a, b);
}

const char* op_name(SelfMapOp op) { return op == SelfMapOp::Add ? "sum" : "composite"; }

}  // namespace

CheckResult check_endomorphism_closure(const TranslationGroup& g, std::span<const GroupSelfMap> endos,
                                       SelfMapOp op) {
  CheckResult r{.name = op == SelfMapOp::Add ? "endomorphism_sum_closure" : "endomorphism_composite_closure"};
  for (std::size_t i = 0; i < endos.size(); ++i) {
    for (std::size_t j = 0; j < endos.size(); ++j) {
      ++r.cases;
      if (!is_endomorphism(g, apply(g, op, endos[i], endos[j]))) {
        return r.fail({i, j}, std::string(op_name(op)) + " is not an endomorphism");
      }
    }
  }
  return r;
}

CheckResult check_trace_preserving_closure(const TranslationGroup& g, std::span<const GroupSelfMap> tp,
                                           SelfMapOp op) {
  CheckResult r{.name = op == SelfMapOp::Add ? "trace_preserving_sum_closure" : "trace_preserving_composite_closure"};
  for (std::size_t i = 0; i < tp.size(); ++i) {
    for (std::size_t j = 0; j < tp.size(); ++j) {
      ++r.cases;
      const auto m = apply(g, op, tp[i], tp[j]);
      if (!is_endomorphism(g, m) || !is_trace_preserving(g, m)) {
        return r.fail({i, j}, std::string(op_name(op)) + " is not a trace-preserving endomorphism");
      }
    }
  }
  return r;
}

CheckResult check_trace_preserving(const TranslationGroup& g, std::span<const GroupSelfMap> maps) {
  CheckResult r{.name = "trace_preserving"};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    ++r.cases;
    if (!is_endomorphism(g, maps[i])) return r.fail({i}, "not an endomorphism");
    for (std::size_t s = 1; s < g.order(); ++s) {
      const auto image = maps[i](s);
      if (image != 0 && g.direction_of[image] != g.direction_of[s]) {
        return r.fail({i, s}, "image of the translation has a different direction");
      }
    }
  }
  return r;
}

CheckResult check_identities(const TranslationGroup& g, std::span<const GroupSelfMap> endos) {
  CheckResult r{.name = "endomorphism_identities"};
  const auto zero = zero_endo(g);
  const auto unit = unit_endo(g);
  const auto phi = inversion_endo(g);
  const std::size_t n = g.order();

  ++r.cases;
  if (compose(g, phi, phi) != unit) return r.fail({}, "inversion composed with itself is not the unit");

  std::vector<ElementIndex> solved(n);
  for (std::size_t i = 0; i < endos.size(); ++i) {
    const auto& a = endos[i];
    ++r.cases;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t x = 0; x < n; ++x) {
        if (g.cayley(a(s), x) == 0) {
          solved[s] = static_cast<ElementIndex>(x);
          break;
        }
      }
    }
    const GroupSelfMap minus(solved);
    if (add(g, a, zero) != a) return r.fail({i}, "a + 0 differs from a");
    if (add(g, a, minus) != zero) return r.fail({i}, "a + (-a) differs from 0");
    if (compose(g, a, unit) != a) return r.fail({i}, "a o 1 differs from a");
    if (negate(g, a) != minus || compose(g, phi, a) != minus) return r.fail({i}, "-a differs from phi o a");
  }
  return r;
}

}  // namespace affine
