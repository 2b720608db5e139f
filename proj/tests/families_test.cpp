#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "almost_fourier/error.hpp"
#include "almost_fourier/families/families.hpp"

using namespace almost_fourier;
using families::FamilyId;
using exact::Scalar;
using exact::ScalarMat;
using pairing::TabulatedDatum;

namespace {

Scalar half(long n) { return Scalar::frac(n, 2); }

TabulatedDatum load(FamilyId id) {
  std::ifstream in(std::string(AF_DATA_DIR) + "/families/" + families::family_name(id) + ".json");
  EXPECT_TRUE(in.good()) << families::family_name(id);
  return pairing::datum_from_json(nlohmann::json::parse(in));
}

using NamedRecord = std::tuple<std::string, std::string, bool>;

std::vector<NamedRecord> named(const TabulatedDatum& d, const pairing::CellKey& key) {
  const auto& [x, y, h] = key;
  std::vector<NamedRecord> out;
  for (const auto& r : d.cells.at(key)) out.emplace_back(d.point(y).d.name(r.dy), d.point(x).d.name(r.dx), r.adapted);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Families, DatumsValidate) {
  for (auto id : families::all_families()) EXPECT_NO_THROW(pairing::validate(families::datum(id)));
}

// The embedded tables agree with the ones derived from the matrix models.
TEST(Families, EmbeddedMatchesDerivedTables) {
  for (auto id : families::all_families()) {
    const auto mine = families::datum(id);
    const auto derived = load(id);
    SCOPED_TRACE(mine.name);
    EXPECT_EQ(mine.prefactor, derived.prefactor);
    EXPECT_EQ(mine.lambda, derived.lambda);
    ASSERT_EQ(mine.points.size(), derived.points.size());
    for (std::size_t k = 0; k < mine.points.size(); ++k) {
      const auto& a = mine.points[k];
      const auto& b = derived.points[k];
      EXPECT_EQ(a.label, b.label);
      EXPECT_EQ(a.zbar, b.zbar) << a.label;
      ASSERT_EQ(a.d.order(), b.d.order());
      for (auto e : a.d.elements())
        for (auto f : a.d.elements())
          EXPECT_EQ(a.d.name(a.d.mul(e, f)), b.d.name(b.d.mul(b.d.by_name(a.d.name(e)), b.d.by_name(a.d.name(f)))));
      for (const auto& [z, e] : a.lambda_image) EXPECT_EQ(a.d.name(e), b.d.name(b.lambda_image.at(z)));
      ASSERT_EQ(a.irreps.size(), b.irreps.size()) << a.label;
      for (std::size_t i = 0; i < a.irreps.size(); ++i) {
        EXPECT_EQ(a.irreps[i].label, b.irreps[i].label);
        EXPECT_EQ(a.irreps[i].sector, b.irreps[i].sector);
        for (auto e : a.d.elements())
          EXPECT_EQ(a.irreps[i].character(e), b.irreps[i].character(b.d.by_name(a.d.name(e))));
      }
    }
    ASSERT_EQ(mine.cells.size(), derived.cells.size());
    for (const auto& [key, recs] : mine.cells) {
      ASSERT_TRUE(derived.cells.count(key));
      EXPECT_EQ(named(mine, key), named(derived, key)) << std::get<0>(key) << "|" << std::get<1>(key);
    }
  }
}

TEST(Families, F15GoldenBothVariants) {
  const ScalarMat golden = ScalarMat::from_rows({{half(1), half(1), half(1), half(1), 1},
                                                 {half(1), half(1), half(-1), half(-1), 1},
                                                 {half(1), half(-1), half(1), half(-1), 0},
                                                 {half(1), half(-1), half(-1), half(1), 0},
                                                 {1, 1, 0, 0, 2}});
  for (auto id : {FamilyId::F15_rsq1, FamilyId::F15_rsqm1}) {
    auto rep = families::family_report(id);
    EXPECT_EQ(rep.gram.labels(), (std::vector<std::string>{"(1,1)", "(1,eps)", "(r,1)", "(r,eps)", "(g,1)"}));
    EXPECT_EQ(rep.gram.matrix(), golden);
    EXPECT_EQ(rep.radical.size(), 1u);
    EXPECT_EQ(rep.quotient_dim, 4u);
    EXPECT_EQ(rep.reduced, golden.submatrix({0, 1, 2, 3}, {0, 1, 2, 3}));
    EXPECT_EQ(rep.basis_labels, (std::vector<std::string>{"(1,1)", "(1,eps)", "(r,1)", "(r,eps)"}));
    ASSERT_EQ(rep.relations.size(), 1u);
    EXPECT_TRUE(rep.relations[0].holds);
    EXPECT_EQ(rep.variants_coincide, true);
    EXPECT_TRUE(rep.ok());
    auto d = families::datum(id);
    EXPECT_EQ(d.point("1").zbar, 2u);
    EXPECT_EQ(d.point("r").zbar, 2u);
    EXPECT_EQ(d.point("g").zbar, 1u);
  }
}

TEST(Families, F15VariantsDifferOnlyInChiSector) {
  auto a = families::datum(FamilyId::F15_rsq1);
  auto b = families::datum(FamilyId::F15_rsqm1);
  EXPECT_EQ(b.point("r").d.elem_order(b.point("r").d.by_name("r")), 4u);
  EXPECT_EQ(a.point("r").d.elem_order(a.point("r").d.by_name("r")), 2u);
  // Both chi blocks are 1/2 [[1,-1],[-1,1]].
  const ScalarMat chi = ScalarMat::from_rows({{half(1), half(-1)}, {half(-1), half(1)}});
  EXPECT_EQ(pairing::pairing_matrix(a, "chi", "chi").matrix(), chi);
  EXPECT_EQ(pairing::pairing_matrix(b, "chi", "chi").matrix(), chi);
}

TEST(Families, F15TranslatesFollowEquivariance) {
  auto d = families::datum(FamilyId::F15_rsqm1);
  const pairing::TabSigma p{"r", "chi+"}, q{"r", "chi-"}, one{"1", "1"};
  EXPECT_EQ(pairing::pair_translated(d, "g-1", p, "1", q), -pairing::pair_tabulated(d, p, q));
  EXPECT_EQ(pairing::pair_translated(d, "g-1", p, "g-1", q), pairing::pair_tabulated(d, p, q));
  EXPECT_EQ(pairing::pair_translated(d, "g-1", one, "1", one), pairing::pair_tabulated(d, one, one));
  EXPECT_THROW(pairing::pair_translated(d, "nope", one, "1", one), Error);
}

TEST(Families, F112Golden) {
  auto rep = families::family_report(FamilyId::F112);
  EXPECT_EQ(rep.gram.labels(), (std::vector<std::string>{"(1,1)", "(g-1,1)", "(g-1,eps)", "(g,1)"}));
  EXPECT_EQ(rep.gram.matrix(), ScalarMat::from_rows({{1, half(1), half(1), 1},
                                                     {half(1), half(1), 0, half(1)},
                                                     {half(1), 0, half(1), half(1)},
                                                     {1, half(1), half(1), 1}}));
  EXPECT_EQ(rep.reduced, ScalarMat::from_rows({{half(1), 0}, {0, half(1)}}));
  EXPECT_EQ(rep.basis_labels, (std::vector<std::string>{"(g-1,1)", "(g-1,eps)"}));
  for (const auto& r : rep.relations) EXPECT_TRUE(r.holds) << r.text;
  EXPECT_EQ(rep.relations.size(), 2u);
  EXPECT_TRUE(rep.extra_images);
  EXPECT_EQ(rep.images.coords.size(), 3u);
  auto d = families::datum(FamilyId::F112);
  EXPECT_EQ(pairing::kappa(d, "g-1", "g-1", "H"), half(1));
  EXPECT_EQ(pairing::kappa(d, "1", "g", "H"), Scalar(1));
  EXPECT_TRUE(rep.ok());
  // (1,1) is a positive combination of the basis: coefficients (1,1).
  const auto& coef = rep.basis.coefficients[rep.images.image_of(0)];
  EXPECT_EQ(coef, (exact::Vec{1, 1}));
}

TEST(Families, F112KappaComesFromFlags) {
  auto d = families::datum(FamilyId::F112);
  auto& recs = d.cells.at({"g-1", "g-1", "H"});
  recs[2].adapted = recs[3].adapted = true;
  EXPECT_EQ(pairing::kappa(d, "g-1", "g-1", "H"), Scalar::frac(1, 4));
  EXPECT_NE(pairing::pairing_matrix(d, "1", "1").matrix(), families::family_report(FamilyId::F112).golden);
}

TEST(Families, F14ConstantPairing) {
  auto rep = families::family_report(FamilyId::F14);
  for (std::size_t i = 0; i < rep.gram.size(); ++i)
    for (std::size_t j = 0; j < rep.gram.size(); ++j) EXPECT_EQ(rep.gram(i, j), Scalar(1));
  EXPECT_EQ(rep.quotient_dim, 1u);
  EXPECT_EQ(rep.basis_labels, (std::vector<std::string>{"(1,1)"}));
  EXPECT_TRUE(rep.ok());
  auto d = families::datum(FamilyId::F14);
  EXPECT_EQ(pairing::pair_tabulated(d, {"x", "chi"}, {"y", "chi"}), Scalar(1));
}

TEST(Families, StarVectorsAndHermitian) {
  for (auto id : families::all_families()) {
    auto rep = families::family_report(id);
    EXPECT_TRUE(rep.gram.matrix().is_hermitian());
    ASSERT_EQ(rep.stars.size(), rep.gram.size());
    // (b, star(p)) = sum_b' (b', p)(b, b'); star(b) for an orthogonal basis is (b,b) b.
    for (std::size_t p = 0; p < rep.gram.size(); ++p) {
      const auto& s = rep.stars[p];
      ASSERT_EQ(s.coefficients.size(), rep.basis.members.size());
      for (std::size_t k = 0; k < rep.basis.members.size(); ++k) {
        const std::size_t b = rep.images.classes[rep.basis.members[k]].front();
        EXPECT_EQ(s.coefficients[k], rep.gram(b, p));
      }
    }
  }
}

TEST(Families, ParseNames) {
  EXPECT_EQ(families::parse_family("F15a"), FamilyId::F15_rsq1);
  EXPECT_EQ(families::parse_family("F15b"), FamilyId::F15_rsqm1);
  EXPECT_EQ(families::parse_family("F112"), FamilyId::F112);
  EXPECT_THROW(families::parse_family("F16"), Error);
}
