#include <gtest/gtest.h>

#include <cmath>

#include <sgut/bounds.hpp>
#include <sgut/families.hpp>

using namespace sgut;

namespace {

const BoundCheck& find(const std::vector<BoundCheck>& checks, const std::string& id) {
  for (const auto& c : checks)
    if (c.bound_id == id) return c;
  throw std::runtime_error("missing " + id);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no sgut::Error thrown";
  return ErrorKind::ParseError;
}

const Graph c5 = generate({Family::Cycle, 5});
const Graph p4 = generate({Family::Path, 4});

}  // namespace

TEST(BoundValue, ExactAndSqrt) {
  const BoundValue e = BoundValue::exact(ExactScalar(7, 2));
  EXPECT_FALSE(e.is_sqrt());
  EXPECT_EQ(e.str(), "7/2");
  EXPECT_EQ(e.compare(ExactScalar(4)), 1);
  const BoundValue r = BoundValue::sqrt_of(ExactScalar(2));
  EXPECT_TRUE(r.is_sqrt());
  EXPECT_EQ(r.str(), "sqrt(2)");
  EXPECT_EQ(r.compare(ExactScalar(1)), -1);
  EXPECT_EQ(r.compare(ExactScalar(3, 2)), 1);
  EXPECT_EQ(r.decimal(6), "1.414213");
  const BoundValue four = BoundValue::sqrt_of(ExactScalar(16));
  EXPECT_FALSE(four.is_sqrt());
  EXPECT_EQ(four.str(), "4");
}

TEST(Lem22, PathFour) {
  const auto [up, lo] = lem22(p4, 2);
  EXPECT_EQ(up.bound.str(), "243");
  EXPECT_EQ(lo.bound.str(), "6");
  EXPECT_EQ(lo.case_label, "delta=1");
  EXPECT_EQ(up.actual, 19);
  EXPECT_TRUE(up.holds);
  EXPECT_TRUE(lo.holds);
  EXPECT_FALSE(lo.tight);
}

TEST(Lem22, CycleFourMinDegreeTwo) {
  const auto [up, lo] = lem22(generate({Family::Cycle, 4}), 3);
  EXPECT_EQ(lo.bound.str(), "48");
  EXPECT_EQ(lo.case_label, "delta>=2");
  EXPECT_EQ(lo.actual, 64);
  EXPECT_TRUE(up.holds);
}

TEST(Prop21, PendantCaseTightOnP3) {
  const Graph p3 = generate({Family::Path, 3});
  const auto [up2, lo2] = prop21(p3, 2);
  EXPECT_EQ(lo2.case_label, "delta=1");
  EXPECT_EQ(lo2.bound.str(), "6");
  EXPECT_TRUE(lo2.tight);
  const auto [up3, lo3] = prop21(p3, 3);
  EXPECT_EQ(lo3.bound.str(), "4");
  EXPECT_TRUE(lo3.tight);
}

TEST(Prop21, CompleteGraphTightBothSides) {
  const auto [up, lo] = prop21(generate({Family::Complete, 4}), 4);
  EXPECT_EQ(up.bound.str(), "243");
  EXPECT_EQ(lo.bound.str(), "243");
  EXPECT_TRUE(up.tight);
  EXPECT_TRUE(lo.tight);
}

TEST(Prop21, NeedsThreeVertices) {
  EXPECT_EQ(kind_of([] { prop21(generate({Family::Path, 2}), 2); }), ErrorKind::KOutOfRange);
  EXPECT_EQ(kind_of([] { prop21(Graph::from_edge_list(4, {{0, 1}}), 2); }), ErrorKind::Disconnected);
}

TEST(Thm32, CycleFiveSharp) {
  const auto checks = thm32(c5, 5);
  ASSERT_EQ(checks.size(), 4u);
  EXPECT_EQ(find(checks, "thm32.1.sum_upper").bound.str(), "256");
  EXPECT_EQ(find(checks, "thm32.1.product_upper").bound.str(), "16384");
  EXPECT_EQ(find(checks, "thm32.2.sum_lower").bound.str(), "256");
  EXPECT_EQ(find(checks, "thm32.3.product_lower").bound.str(), "16384");
  for (const auto& c : checks) {
    EXPECT_TRUE(c.tight) << c.bound_id;
  }
  EXPECT_EQ(find(checks, "thm32.2.sum_lower").case_label, "delta>=2,Delta<=n-3");
}

TEST(Thm32, PathFourPendantCase) {
  const auto checks = thm32(p4, 2);
  const auto& sum_lower = find(checks, "thm32.2.sum_lower");
  EXPECT_EQ(sum_lower.case_label, "delta=1,Delta=n-2");
  EXPECT_EQ(sum_lower.bound.str(), "24");
  EXPECT_EQ(sum_lower.actual, 38);
  EXPECT_EQ(find(checks, "thm32.3.product_lower").bound.str(), "144");
  EXPECT_EQ(find(checks, "thm32.3.product_lower").actual, 361);
}

TEST(Thm32, ComplementMustBeConnected) {
  EXPECT_EQ(kind_of([] { thm32(generate({Family::Cycle, 4}), 2); }), ErrorKind::ComplementDisconnected);
  EXPECT_EQ(kind_of([] { thm32(generate({Family::Complete, 3}), 2); }), ErrorKind::ComplementDisconnected);
  EXPECT_EQ(kind_of([] { thm32(c5, 6); }), ErrorKind::KOutOfRange);
}

TEST(Cor41, CycleFive) {
  const auto checks = cor41(c5, 5);
  EXPECT_EQ(find(checks, "cor41.2.product_upper").bound.str(), "16384");
  EXPECT_TRUE(find(checks, "cor41.2.product_upper").tight);
  EXPECT_EQ(find(checks, "cor41.1.sum_lower").bound.str(), "256");
  EXPECT_EQ(find(checks, "cor41.1.sum_upper").case_label, "s1=min");
}

TEST(Cor41, PathFour) {
  EXPECT_EQ(find(cor41(p4, 2), "cor41.1.sum_lower").bound.str(), "24");
}

TEST(PolyaSzego, CycleFiveBothBranches) {
  const auto checks = ps_product(c5, 5);
  ASSERT_EQ(checks.size(), 3u);
  EXPECT_EQ(checks[0].case_label, "Delta+delta<=n-1");
  EXPECT_EQ(checks[1].case_label, "Delta+delta>=n-1");
  for (const auto& c : checks) {
    EXPECT_EQ(c.bound.str(), "16384");
    EXPECT_TRUE(c.tight);
    EXPECT_TRUE(c.binding);
  }
}

TEST(PolyaSzego, SingleBranchAwayFromBoundary) {
  // P5: delta 1, Delta 2, n - 1 = 4.
  const auto checks = ps_product(generate({Family::Path, 5}), 3);
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_EQ(checks[0].case_label, "Delta+delta<=n-1");
  for (const auto& c : checks) EXPECT_TRUE(c.holds);
}

TEST(AmGm, CycleFiveExactRoot) {
  const auto checks = amgm_sum(c5, 5);
  ASSERT_EQ(checks.size(), 3u);
  EXPECT_EQ(checks[0].bound.str(), "256");
  EXPECT_FALSE(checks[0].bound.is_sqrt());
  EXPECT_TRUE(checks[0].tight);
  EXPECT_EQ(find(checks, "amgm.sum_upper").bound.str(), "256");
}

TEST(AmGm, IrrationalLowerBound) {
  // P4, k = 3: (2 * 2 * 4)^2 * (1 * 2)^3 = 2048, not a square.
  const auto checks = amgm_sum(p4, 3);
  const auto& lower = checks.front();
  EXPECT_TRUE(lower.bound.is_sqrt());
  EXPECT_EQ(lower.bound.squared(), 2048);
  EXPECT_TRUE(lower.holds);
  EXPECT_NEAR(std::stod(lower.bound.decimal(9)), std::sqrt(2048.0), 1e-9);
}

TEST(Selection, ParseAndOrder) {
  const auto all = BoundSelection::parse("all");
  EXPECT_EQ(all.ids().size(), kBoundIds.size());
  const auto sel = BoundSelection::parse("amgm.sum_upper,prop21");
  EXPECT_EQ(sel.ids(), (std::vector<std::string>{"prop21.upper", "prop21.lower", "amgm.sum_upper"}));
  EXPECT_TRUE(sel.touches_group("amgm"));
  EXPECT_FALSE(sel.touches_group("thm32"));
  EXPECT_EQ(kind_of([] { BoundSelection::parse("thm99"); }), ErrorKind::UnknownBound);
}

TEST(Selection, EvaluateSkipsInapplicableGroups) {
  const Instance inst = Instance::make(generate({Family::Cycle, 4}));
  const auto checks = evaluate(inst, 2, BoundSelection::all());
  for (const auto& c : checks) {
    const auto g = group_of(c.bound_id);
    EXPECT_TRUE(g == "prop21" || g == "lem22") << c.bound_id;
  }
  EXPECT_EQ(checks.size(), 4u);
}

TEST(Equality, Diagnosis) {
  const auto d = diagnose(c5, 5);
  EXPECT_TRUE(d.regular);
  EXPECT_TRUE(d.k_equals_n);
  EXPECT_TRUE(d.half_regular_odd_order);
  EXPECT_TRUE(d.tree_distance_both_sides);
  EXPECT_FALSE(d.is_path);
  const auto p = diagnose(generate({Family::Path, 3}), 2);
  EXPECT_TRUE(p.is_path);
  EXPECT_TRUE(p.p3_with_k2);
}

TEST(Equality, WitnessRequiresTightness) {
  const auto [up, lo] = lem22(p4, 2);
  EXPECT_EQ(kind_of([&] { equality_witness(p4, 2, up); }), ErrorKind::NotTight);
  const auto checks = thm32(c5, 5);
  EXPECT_TRUE(equality_witness(c5, 5, checks.front()).regular);
}
