#include <gtest/gtest.h>

#include "almost_fourier/error.hpp"
#include "almost_fourier/groups/io.hpp"

using namespace almost_fourier;
using namespace almost_fourier::groups;

namespace {

std::vector<FiniteGroup> shipped() {
  return {trivial_group(), cyclic(2), cyclic(3), cyclic(4), cyclic(6), cyclic(12), klein(),
          symmetric(3),    symmetric(4), dihedral(3), dihedral(4), dihedral(6), quaternion(),
          direct_product(cyclic(2), symmetric(3))};
}

}  // namespace

TEST(Groups, Orders) {
  EXPECT_EQ(symmetric(3).order(), 6u);
  EXPECT_EQ(symmetric(4).order(), 24u);
  EXPECT_EQ(dihedral(4).order(), 8u);
  EXPECT_EQ(quaternion().order(), 8u);
  EXPECT_EQ(klein().order(), 4u);
  EXPECT_THROW(symmetric(5), Error);
}

TEST(Groups, RejectsNonGroup) {
  // Row 1 of this table repeats an entry.
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 1}), Error);
  // x*y table of a non-associative loop of order 5 (Latin square with identity 0).
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    FiniteGroup::from_table(5, loop);
    FAIL() << "expected NotAGroup";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
}

TEST(Groups, Centralizers) {
  auto s3 = symmetric(3);
  const Elem t = s3.by_name("(12)");
  EXPECT_EQ(s3.centralizer(t).order(), 2u);
  EXPECT_EQ(s3.centralizer(s3.identity()).order(), 6u);
  auto q = quaternion();
  EXPECT_EQ(q.centralizer(q.by_name("i")).order(), 4u);
  EXPECT_TRUE(q.centralizer(q.by_name("i")).is_abelian());
  auto sub = s3.centralizer(t);
  EXPECT_THROW(sub.centralizer(s3.by_name("(123)")), Error);
}

TEST(Groups, ClassesPartitionAndOrbitStabilizer) {
  for (const auto& g : shipped()) {
    auto classes = g.conjugacy_classes();
    std::vector<int> count(g.order(), 0);
    Elem last_min = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      ASSERT_FALSE(classes[c].empty());
      if (c > 0) EXPECT_GT(classes[c].front(), last_min);
      last_min = classes[c].front();
      for (Elem x : classes[c]) {
        ++count[g.position(x)];
        EXPECT_EQ(classes[c].size() * g.centralizer(x).order(), g.order());
      }
    }
    for (int k : count) EXPECT_EQ(k, 1);
  }
  std::vector<std::size_t> sizes;
  for (const auto& c : symmetric(3).conjugacy_classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  for (const auto& c : cyclic(4).conjugacy_classes()) EXPECT_EQ(c.size(), 1u);
}

TEST(Groups, ShippedCharacterTablesValidate) {
  for (const auto& g : shipped()) {
    auto chars = irreducible_characters(g);
    auto check = validate_characters(g, chars);
    EXPECT_TRUE(check.ok) << g.order() << ": " << (check.diagnostics.empty() ? "" : check.diagnostics[0]);
    EXPECT_EQ(chars.size(), g.conjugacy_classes().size());
  }
}

TEST(Groups, ValidateReportsFailures) {
  auto g = cyclic(2);
  ClassFunction one(g, {1, 1}, "1");
  auto check = validate_characters(g, {one, one});
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.diagnostics.empty());
  auto t = trivial_group();
  EXPECT_TRUE(validate_characters(t, irreducible_characters(t)).ok);
  // Characters of a different (if isomorphic) group are rejected.
  EXPECT_FALSE(validate_characters(t, irreducible_characters(trivial_group())).ok);
}

TEST(Groups, ClassFunctionMustBeConstantOnClasses) {
  auto s3 = symmetric(3);
  std::vector<Scalar> v(6, Scalar(0));
  v[s3.position(s3.by_name("(12)"))] = Scalar(1);
  EXPECT_THROW(ClassFunction(s3, v), Error);
}

TEST(Groups, CentralSubgroupAndQuotientOrder) {
  auto d4 = dihedral(4);
  const Elem r2 = d4.by_name("r^2");
  CentralSubgroup lam(d4, {d4.identity(), r2});
  EXPECT_EQ(quotient_order(d4, lam), 4u);
  EXPECT_EQ(quotient_order(d4, CentralSubgroup::trivial(d4)), 8u);
  EXPECT_THROW(CentralSubgroup(d4, {d4.identity(), d4.by_name("s")}), Error);
  EXPECT_THROW(CentralSubgroup(d4, {d4.identity(), d4.by_name("r")}), Error);
  auto q = quaternion();
  CentralSubgroup c(q, {q.identity(), q.by_name("-1")});
  EXPECT_EQ(quotient_order(q.centralizer(q.by_name("i")), c), 2u);
  // Central in D4 but not contained in the centralizer of s used as the group.
  CentralSubgroup z(d4, {d4.identity(), r2});
  EXPECT_THROW(quotient_order(d4.generated({d4.by_name("s")}), z), Error);
}

TEST(Groups, JsonRoundTrip) {
  for (const auto& g : shipped()) {
    auto h = group_from_json(group_to_json(g));
    ASSERT_EQ(h.order(), g.order());
    for (Elem a : g.elements())
      for (Elem b : g.elements()) EXPECT_EQ(h.mul(a, b), g.mul(a, b));
    EXPECT_TRUE(validate_characters(h, irreducible_characters(h)).ok);
  }
  EXPECT_THROW(group_from_json(nlohmann::json{{"order", 2}}), Error);
}
