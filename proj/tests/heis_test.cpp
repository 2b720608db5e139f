#include <gtest/gtest.h>

#include <random>

#include "almost_fourier/error.hpp"
#include "almost_fourier/heis/heisenberg.hpp"
#include "oracle/heis_oracle.hpp"

using namespace almost_fourier;
using namespace almost_fourier::heis;

namespace {

ScalarMat oracle_matrix(int n) {
  oracle::Heis o{n};
  auto zs = o.z_index();
  ScalarMat m(zs.size(), zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j)
      m(i, j) = Scalar(o.pair(zs[i].first, zs[i].second, zs[j].first, zs[j].second));
  return m;
}

std::size_t nullity(const ScalarMat& a, long shift) {
  ScalarMat s = a;
  for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) -= Scalar(shift);
  return s.rows() - exact::rank(s);
}

}  // namespace

TEST(Heis, BuildLimits) {
  for (int n : {0, 4}) {
    try {
      Heisenberg h(n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
    }
  }
}

TEST(Heis, GroupLaw) {
  for (int n : {1, 2}) {
    Heisenberg h(n);
    const auto& g = h.group();
    EXPECT_EQ(g.order(), 2u * h.space_size());
    EXPECT_EQ(g.center(), (std::vector<groups::Elem>{h.lift(0), h.c()}));
    for (unsigned x = 0; x < h.space_size(); ++x) {
      for (unsigned e = 0; e < 2; ++e) {
        const auto xd = h.lift(x, e);
        EXPECT_EQ(g.mul(xd, xd), h.q(x) ? h.c() : h.lift(0));
        for (unsigned y = 0; y < h.space_size(); ++y) {
          EXPECT_EQ(h.form(x, y), (h.bilinear(x, y) + h.bilinear(y, x)) % 2);
          for (unsigned f = 0; f < 2; ++f) {
            const auto yd = h.lift(y, f);
            EXPECT_EQ(g.mul(xd, yd), g.mul(h.form(x, y) ? h.c() : h.lift(0), g.mul(yd, xd)));
          }
        }
      }
      EXPECT_EQ(h.form(x, x), 0);
    }
    // Nondegenerate.
    for (unsigned x = 1; x < h.space_size(); ++x) {
      bool hit = false;
      for (unsigned y = 0; y < h.space_size(); ++y) hit |= h.form(x, y) == 1;
      EXPECT_TRUE(hit);
    }
  }
}

TEST(Heis, QuaternionAtNEqualsOne) {
  Heisenberg h(1);
  const auto& g = h.group();
  std::size_t involutions = 0;
  for (auto e : g.elements()) involutions += (e != g.identity() && g.elem_order(e) <= 2);
  EXPECT_EQ(involutions, 1u);
  std::vector<std::size_t> sizes;
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(g.centralizer(h.lift(1)).order(), 4u);
  EXPECT_TRUE(g.centralizer(h.lift(1)).is_abelian());
  EXPECT_EQ(groups::quotient_order(g.centralizer(h.lift(1)), h.datum().lambda()), 2u);
}

TEST(Heis, ZIndexCount) {
  EXPECT_EQ(z_count(1), 10u);
  EXPECT_EQ(z_count(2), 136u);
  for (int n : {1, 2, 3}) EXPECT_EQ(Heisenberg(n).z_index().size(), z_count(n));
}

TEST(Heis, CharacterTablesValidate) {
  for (int n : {1, 2, 3}) {
    Heisenberg h(n);
    for (unsigned x = 0; x < h.space_size(); ++x) {
      if (n == 3 && x % 7 != 0 && x != 1) continue;
      auto sc = h.sector_characters(x);
      auto z = h.group().centralizer(h.lift(x));
      std::vector<groups::ClassFunction> all = sc.one;
      all.insert(all.end(), sc.chi.begin(), sc.chi.end());
      auto check = groups::validate_characters(z, all);
      EXPECT_TRUE(check.ok) << "n=" << n << " x=" << x << " " << (check.ok ? "" : check.diagnostics[0]);
      EXPECT_EQ(sc.chi.size(), x == 0 ? 1u : 2u);
      for (const auto& s : sc.one) EXPECT_EQ(h.datum().sector_of({"p", h.lift(x), s}), 0u);
      for (const auto& s : sc.chi) EXPECT_EQ(h.datum().sector_of({"p", h.lift(x), s}), 1u);
    }
  }
  Heisenberg h1(1);
  auto sc = h1.sector_characters(0);
  EXPECT_EQ(sc.chi[0](h1.lift(0)), Scalar(2));
  EXPECT_EQ(sc.chi[0](h1.c()), Scalar(-2));
  auto sx = h1.sector_characters(1);
  EXPECT_EQ(sx.one.size(), 2u);
  EXPECT_EQ(sx.chi[0](h1.lift(1)), Scalar::i());
  EXPECT_EQ(sx.chi[1](h1.lift(1)), -Scalar::i());
}

TEST(Heis, ClosedFormExamples) {
  Heisenberg h1(1), h2(2);
  EXPECT_EQ(closed_form(h1, {0, 0}, {0, 0}), Scalar::frac(1, 4));
  // 2^{-2n+2} = 1 at n = 1 and both delta factors are 1.
  EXPECT_EQ(closed_form(h1, {1, 0}, {1, 0}), Scalar(1));
  EXPECT_EQ(closed_form(h1, {1, 2}, {1, 2}), Scalar(1));
  // n=2, x=0, x'!=0 with <x',y> = 1.
  const unsigned xp = 1, y = 2;
  ASSERT_EQ(h2.form(xp, y), 1);
  EXPECT_EQ(closed_form(h2, {0, y}, {xp, 0}), Scalar::frac(-1, 8));
  EXPECT_EQ(pairing::pair_finite(h1.datum(), h1.point({0, 0}), h1.point({0, 0})), Scalar::frac(1, 4));
  EXPECT_EQ(pairing::pair_finite(h1.datum(), h1.point({1, 0}), h1.point({0, 2})), Scalar::frac(-1, 2));
}

TEST(Heis, BruteForceMatchesClosedFormAndOracle) {
  for (int n : {1, 2}) {
    Heisenberg h(n);
    auto m = matrix_M(h);
    EXPECT_EQ(m.matrix(), closed_form_matrix(h)) << n;
    EXPECT_EQ(m.matrix(), oracle_matrix(n)) << n;
    EXPECT_EQ(m.matrix(), matrix_M(h, 1).matrix()) << "lift dependence at n=" << n;
    EXPECT_EQ(m.matrix(), m.matrix().transpose());
    EXPECT_EQ(m.matrix() * m.matrix(), m2_block_formula(h));
  }
}

TEST(Heis, SampledEntriesAtNThree) {
  Heisenberg h(3);
  auto zs = h.z_index();
  std::mt19937_64 rng(0xC4A7);
  for (int k = 0; k < 40; ++k) {
    const auto& a = zs[rng() % zs.size()];
    const auto& b = zs[rng() % zs.size()];
    EXPECT_EQ(pairing::pair_finite(h.datum(), h.point(a), h.point(b)), closed_form(h, a, b));
  }
}

TEST(Heis, SpectrumNOne) {
  Heisenberg h(1);
  auto m = matrix_M(h);
  auto r = spectrum_report(m);
  EXPECT_EQ(r.factorization, "(t-1)^1(t-2)^6(t-4)^3");
  EXPECT_TRUE(r.min_poly_124);
  EXPECT_FALSE(r.min_poly_12);
  EXPECT_FALSE(r.det.is_zero());
  // Oracle multiplicities from eigenspace dimensions of the oracle's M^2.
  ScalarMat o = oracle_matrix(1);
  ScalarMat sq = o * o;
  EXPECT_EQ(nullity(sq, 1), 1u);
  EXPECT_EQ(nullity(sq, 2), 6u);
  EXPECT_EQ(nullity(sq, 4), 3u);
}

TEST(Heis, ImagesFormBasis) {
  Heisenberg h(1);
  auto m = matrix_M(h);
  auto im = pairing::image_set(m);
  EXPECT_EQ(im.coords.size(), 10u);
  EXPECT_EQ(im.dim, 10u);
  auto pb = pairing::positive_basis(im);
  EXPECT_EQ(pb.members.size(), 10u);
}

TEST(Heis, SectorRules) {
  for (int n : {1, 2}) {
    auto r = check_sector_rules(Heisenberg(n));
    EXPECT_GT(r.mixed_required.checked, 0u);
    EXPECT_EQ(r.mixed_required.mismatches, 0u) << (r.mixed_required.examples.empty() ? "" : r.mixed_required.examples[0]);
    EXPECT_EQ(r.chi_required.mismatches, 0u) << (r.chi_required.examples.empty() ? "" : r.chi_required.examples[0]);
    if (n == 1) EXPECT_EQ(r.mixed_other.checked, 0u);
    if (n == 2) EXPECT_GT(r.mixed_other.checked, 0u);
  }
}
