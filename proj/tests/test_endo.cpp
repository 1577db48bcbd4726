#include <gtest/gtest.h>

#include <cmath>

#include "affine/error.hpp"
#include "affine/io.hpp"
#include "support.hpp"

using namespace affine;
using testing_support::PlaneGroup;
using testing_support::shift_index;

namespace {

GroupSelfMap table(std::vector<ElementIndex> t) { return GroupSelfMap(std::move(t)); }

std::vector<std::vector<int>> raw_tables(const std::vector<GroupSelfMap>& maps) {
  std::vector<std::vector<int>> out;
  for (const auto& m : maps) out.emplace_back(m.table.begin(), m.table.end());
  return out;
}

// Trace preservation judged from the permutations alone.
bool oracle_trace_preserving(const PlaneGroup& pg, const std::vector<int>& a) {
  const auto lines = oracle::affine_plane(static_cast<int>(std::lround(std::sqrt(pg.plane.num_points()))));
  const auto raw = testing_support::raw_maps(pg.group.elements);
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (a[i] == 0) continue;
    if (!oracle::same_direction(lines, raw[i], raw[a[i]])) return false;
  }
  return true;
}

}  // namespace

TEST(SelfMapOps, AddExamples) {
  const PlaneGroup pg(2);
  const auto& g = pg.group;
  const auto zero = zero_endo(g), one = unit_endo(g);
  for (const auto& a : enumerate_endomorphisms(g)) EXPECT_EQ(add(g, a, zero), a);
  EXPECT_EQ(add(g, one, one), zero);
  EXPECT_THROW(add(g, one, table({0, 1})), Error);
}

TEST(SelfMapOps, ComposeExamples) {
  const PlaneGroup pg(3);
  const auto& g = pg.group;
  const auto zero = zero_endo(g), one = unit_endo(g), phi = inversion_endo(g);
  for (const auto& a : enumerate_endomorphisms(g)) {
    EXPECT_EQ(compose(g, a, one), a);
    EXPECT_EQ(compose(g, zero, a), zero);
  }
  EXPECT_EQ(compose(g, phi, phi), one);
  EXPECT_THROW(compose(g, one, table({0})), Error);
}

TEST(SelfMapOps, FlagsUnsetAfterArithmetic) {
  const PlaneGroup pg(3);
  const auto s = add(pg.group, unit_endo(pg.group), unit_endo(pg.group));
  EXPECT_FALSE(s.endomorphism.has_value());
  EXPECT_FALSE(s.trace_preserving.has_value());
}

TEST(IsEndomorphism, Examples) {
  const PlaneGroup pg(2);
  const auto& g = pg.group;
  EXPECT_TRUE(is_endomorphism(g, table({0, 1, 2, 3})));
  EXPECT_TRUE(is_endomorphism(g, table({0, 0, 0, 0})));
  EXPECT_FALSE(is_endomorphism(g, table({0, 0, 2, 3})));
  EXPECT_FALSE(is_endomorphism(g, table({1, 0, 3, 2})));  // moves the identity
  EXPECT_THROW(is_endomorphism(g, table({0, 1})), Error);
}

TEST(Distinguished, ZeroAndUnit) {
  const PlaneGroup p2(2), p3(3);
  const auto z = zero_endo(p2.group);
  EXPECT_EQ(z.table, (std::vector<ElementIndex>{0, 0, 0, 0}));
  EXPECT_EQ(z.endomorphism, true);
  EXPECT_EQ(z.trace_preserving, true);
  const auto u = unit_endo(p3.group);
  EXPECT_EQ(u.table, (std::vector<ElementIndex>{0, 1, 2, 3, 4, 5, 6, 7, 8}));
  // recompute from scratch rather than trusting the flags
  for (const auto* pg : {&p2, &p3}) {
    for (auto m : {zero_endo(pg->group), unit_endo(pg->group), inversion_endo(pg->group)}) {
      GroupSelfMap fresh(m.table);
      EXPECT_TRUE(is_endomorphism(pg->group, fresh));
      EXPECT_TRUE(is_trace_preserving(pg->group, fresh));
    }
  }
}

TEST(Distinguished, Inversion) {
  const PlaneGroup p2(2), p3(3);
  EXPECT_EQ(inversion_endo(p2.group), unit_endo(p2.group));
  const auto phi = inversion_endo(p3.group);
  EXPECT_EQ(phi(shift_index(p3, 3, 1, 0)), shift_index(p3, 3, 2, 0));
  EXPECT_EQ(phi(0), 0u);
}

TEST(Distinguished, Negate) {
  const PlaneGroup pg(3);
  const auto& g = pg.group;
  const auto zero = zero_endo(g);
  EXPECT_EQ(negate(g, zero), zero);
  EXPECT_EQ(negate(g, unit_endo(g)), inversion_endo(g));
  for (const auto& a : enumerate_endomorphisms(g)) EXPECT_EQ(add(g, a, negate(g, a)), zero);
  EXPECT_THROW(negate(g, table({0, 0, 0, 0, 0, 0, 0, 0, 1})), Error);
}

TEST(TracePreserving, DirectionSwapFails) {
  const PlaneGroup pg(2);
  // (01)(23) <-> (02)(13), (03)(12) fixed
  auto swap = table({0, 2, 1, 3});
  EXPECT_TRUE(is_endomorphism(pg.group, swap));
  EXPECT_FALSE(is_trace_preserving(pg.group, swap));
  EXPECT_THROW(is_trace_preserving(pg.group, table({0, 0, 2, 3})), Error);
}

TEST(Enumerate, KleinMatchesBruteForce) {
  const PlaneGroup pg(2);
  const auto endos = enumerate_endomorphisms(pg.group);
  EXPECT_EQ(endos.size(), 16u);
  const auto t = oracle::cayley(testing_support::raw_maps(pg.group.elements));
  EXPECT_EQ(raw_tables(endos), oracle::brute_endomorphisms(t));
}

TEST(Enumerate, MatchesCoordinateOracle) {
  for (std::uint32_t p : {3u, 5u}) {
    const PlaneGroup pg(p);
    const auto endos = enumerate_endomorphisms(pg.group);
    EXPECT_EQ(endos.size(), std::size_t(p * p * p * p));
    const auto raw = testing_support::raw_maps(pg.group.elements);
    EXPECT_EQ(raw_tables(endos), oracle::coordinate_endomorphisms(static_cast<int>(p), raw));
    const auto t = oracle::cayley(raw);
    for (const auto& a : raw_tables(endos)) EXPECT_TRUE(oracle::is_homomorphism(t, a));
  }
}

TEST(Enumerate, TrivialGroup) {
  const auto plane = build_prime_plane(2);
  const auto g = build_group(plane, {classify(plane, PointBijection::identity(4))});
  const auto endos = enumerate_endomorphisms(g);
  ASSERT_EQ(endos.size(), 1u);
  EXPECT_EQ(endos[0].table, std::vector<ElementIndex>{0});
}

TEST(Enumerate, OrderBound) {
  const PlaneGroup pg(3);
  try {
    enumerate_endomorphisms(pg.group, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderTooLarge);
  }
}

TEST(EnumerateTracePreserving, Counts) {
  const PlaneGroup p2(2);
  const auto tp2 = enumerate_tp_endomorphisms(p2.group);
  EXPECT_EQ(tp2, (std::vector<GroupSelfMap>{zero_endo(p2.group), unit_endo(p2.group)}));
  EXPECT_EQ(enumerate_tp_endomorphisms(PlaneGroup(3).group).size(), 3u);
  EXPECT_EQ(enumerate_tp_endomorphisms(PlaneGroup(5).group).size(), 5u);
}

TEST(EnumerateTracePreserving, MatchesOracleFilter) {
  for (std::uint32_t p : {2u, 3u}) {
    const PlaneGroup pg(p);
    const auto t = oracle::cayley(testing_support::raw_maps(pg.group.elements));
    const auto all = p == 2 ? oracle::brute_endomorphisms(t)
                            : oracle::coordinate_endomorphisms(3, testing_support::raw_maps(pg.group.elements));
    std::vector<std::vector<int>> expected;
    for (const auto& a : all) {
      if (oracle_trace_preserving(pg, a)) expected.push_back(a);
    }
    EXPECT_EQ(raw_tables(enumerate_tp_endomorphisms(pg.group)), expected);
  }
}

TEST(EnumerateTracePreserving, AreScalarPowers) {
  // sigma -> sigma^k for k = 0 .. p-1
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PlaneGroup pg(p);
    const auto raw = testing_support::raw_maps(pg.group.elements);
    std::vector<std::vector<int>> expected;
    for (std::uint32_t k = 0; k < p; ++k) {
      std::vector<int> t;
      for (const auto& s : raw) t.push_back(static_cast<int>(std::find(raw.begin(), raw.end(), oracle::power(s, k)) - raw.begin()));
      expected.push_back(t);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(raw_tables(enumerate_tp_endomorphisms(pg.group)), expected);
  }
}

TEST(Ring, AllAxiomsPass) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PlaneGroup pg(p);
    const auto endos = enumerate_endomorphisms(pg.group);
    const auto tp = select_trace_preserving(pg.group, endos);
    const auto report = check_ring_axioms(pg.group, tp, endos.size());
    EXPECT_TRUE(report.all_passed()) << p;
    EXPECT_EQ(report.axioms.size(), 10u);
    EXPECT_EQ(report.tp_count, p);
    EXPECT_EQ(report.end_count, endos.size());
    EXPECT_TRUE(report.mul_commutative.passed);
  }
}

TEST(Ring, MatchesIntegersModP) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PlaneGroup pg(p);
    const auto tp = enumerate_tp_endomorphisms(pg.group);
    const auto cmp = compare_with_integers_mod(pg.group, tp);
    EXPECT_TRUE(cmp.matches) << cmp.detail;
    EXPECT_EQ(cmp.modulus, p);
    // independent check of the labelled tables
    for (std::size_t i = 0; i < tp.size(); ++i) {
      for (std::size_t j = 0; j < tp.size(); ++j) {
        const auto s = add(pg.group, tp[i], tp[j]);
        const auto m = compose(pg.group, tp[i], tp[j]);
        const auto si = std::find(tp.begin(), tp.end(), s) - tp.begin();
        const auto mi = std::find(tp.begin(), tp.end(), m) - tp.begin();
        EXPECT_EQ(cmp.labels[si], (cmp.labels[i] + cmp.labels[j]) % p);
        EXPECT_EQ(cmp.labels[mi], (cmp.labels[i] * cmp.labels[j]) % p);
      }
    }
    EXPECT_EQ(cmp.labels[std::find(tp.begin(), tp.end(), zero_endo(pg.group)) - tp.begin()], 0u);
    EXPECT_EQ(cmp.labels[std::find(tp.begin(), tp.end(), unit_endo(pg.group)) - tp.begin()], 1u);
  }
}

TEST(Ring, UnitRemovedFailsMulIdentity) {
  const PlaneGroup pg(3);
  auto tp = enumerate_tp_endomorphisms(pg.group);
  tp.erase(std::find(tp.begin(), tp.end(), unit_endo(pg.group)));
  const auto report = check_ring_axioms(pg.group, tp);
  EXPECT_FALSE(report.all_passed());
  const auto& mi = report.at("mul_identity");
  EXPECT_FALSE(mi.passed);
  ASSERT_TRUE(mi.witness.has_value());
  EXPECT_FALSE(mi.witness->endos.empty());
  EXPECT_TRUE(mi.witness->translation.has_value());
  EXPECT_THROW(report.at("no_such_axiom"), std::out_of_range);
}

TEST(Ring, NonTracePreservingSetFails) {
  const PlaneGroup pg(2);
  const std::vector<GroupSelfMap> set = {zero_endo(pg.group), unit_endo(pg.group), table({0, 2, 1, 3})};
  const auto report = check_ring_axioms(pg.group, set);
  EXPECT_FALSE(report.all_passed());
}

TEST(Ring, PrimePowerPlaneGivesFieldOfFour) {
  auto plane = load_plane_file(testing_support::fixture("ag2_4.json")).plane;
  verify_axioms(plane);
  const auto g = build_group(plane, enumerate_translations(plane));
  const auto endos = enumerate_endomorphisms(g);
  EXPECT_EQ(endos.size(), 65536u);
  const auto tp = select_trace_preserving(g, endos);
  EXPECT_EQ(tp.size(), 4u);
  EXPECT_TRUE(check_ring_axioms(g, tp, endos.size()).all_passed());
  // characteristic 2, so not the integers mod 4
  EXPECT_FALSE(compare_with_integers_mod(g, tp).matches);
}

// Properties.

TEST(EndoProperty, ClosedUnderSumAndComposite) {
  for (std::uint32_t p : {2u, 3u}) {
    const PlaneGroup pg(p);
    const auto endos = enumerate_endomorphisms(pg.group);
    const auto tp = select_trace_preserving(pg.group, endos);
    for (auto op : {SelfMapOp::Add, SelfMapOp::Compose}) {
      const auto e = check_endomorphism_closure(pg.group, endos, op);
      EXPECT_TRUE(e.passed);
      EXPECT_EQ(e.cases, endos.size() * endos.size());
      EXPECT_TRUE(check_trace_preserving_closure(pg.group, tp, op).passed);
    }
  }
}

TEST(EndoProperty, ClosureCheckCatchesBadPair) {
  const PlaneGroup pg(2);
  const std::vector<GroupSelfMap> set = {unit_endo(pg.group), table({0, 2, 1, 3})};
  EXPECT_FALSE(check_trace_preserving_closure(pg.group, set, SelfMapOp::Add).passed);
}

TEST(EndoProperty, IdentityImageAndNegation) {
  for (std::uint32_t p : {2u, 3u}) {
    const PlaneGroup pg(p);
    const auto endos = enumerate_endomorphisms(pg.group);
    const auto phi = inversion_endo(pg.group);
    for (const auto& a : endos) {
      EXPECT_EQ(a(0), 0u);
      EXPECT_EQ(negate(pg.group, a), compose(pg.group, phi, a));
    }
    EXPECT_TRUE(check_identities(pg.group, endos).passed);
  }
}

TEST(EndoProperty, FlagsAgreeWithRecomputation) {
  const PlaneGroup pg(3);
  for (const auto& a : enumerate_endomorphisms(pg.group)) {
    GroupSelfMap fresh(a.table);
    EXPECT_EQ(a.endomorphism, is_endomorphism(pg.group, fresh));
    if (a.trace_preserving) EXPECT_EQ(*a.trace_preserving, is_trace_preserving(pg.group, fresh));
  }
}

TEST(EndoProperty, TracePreservingCheckWitness) {
  const PlaneGroup pg(2);
  EXPECT_TRUE(check_trace_preserving(pg.group, enumerate_tp_endomorphisms(pg.group)).passed);
  const std::vector<GroupSelfMap> set = {unit_endo(pg.group), table({0, 2, 1, 3})};
  const auto r = check_trace_preserving(pg.group, set);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{1, 1}));
}
