#include <gtest/gtest.h>

#include <functional>

#include "almost_fourier/clifford/clifford.hpp"
#include "almost_fourier/error.hpp"

using namespace almost_fourier;
using namespace almost_fourier::clifford;

namespace {

// Oracle: products of basis monomials by sorting index lists with adjacent
// swaps, e_k e_k = 1.
std::pair<int, std::vector<int>> oracle_monomial(std::vector<int> idx) {
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        sign = -sign;
        moved = true;
      } else if (idx[k] == idx[k + 1]) {
        idx.erase(idx.begin() + static_cast<long>(k), idx.begin() + static_cast<long>(k) + 2);
        moved = true;
        break;
      }
    }
  }
  return {sign, idx};
}

std::vector<int> bits(std::uint32_t m) {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k)
    if (m >> k & 1) out.push_back(k);
  return out;
}

// Oracle: orthogonal matrix (-1)^n R_{v_1}...R_{v_n} with R_u = I - 2 u u^T.
ScalarMat oracle_beta(const std::vector<Vec>& xi, std::size_t N) {
  ScalarMat M = ScalarMat::identity(N);
  for (const auto& u : xi) {
    ScalarMat R = ScalarMat::identity(N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) R(a, b) -= Scalar(2) * u[a] * u[b];
    M = M * R;
  }
  return xi.size() % 2 ? M.scaled(Scalar(-1)) : M;
}

Vec mat_vec(const ScalarMat& M, const Vec& v) {
  Vec out(M.rows(), Scalar(0));
  for (std::size_t a = 0; a < M.rows(); ++a)
    for (std::size_t b = 0; b < M.cols(); ++b) out[a] += M(a, b) * v[b];
  return out;
}

Vec e(int N, int k) {
  Vec v(static_cast<std::size_t>(N), Scalar(0));
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Parse;
}

}  // namespace

TEST(Clifford, GeneratorRelations) {
  const int N = 4;
  const Element one = Element::scalar(N, 1);
  for (int a = 0; a < N; ++a) {
    const Element ea = Element::monomial(N, 1u << a);
    EXPECT_EQ(ea * ea, one);
    for (int b = a + 1; b < N; ++b) {
      const Element eb = Element::monomial(N, 1u << b);
      EXPECT_TRUE((ea * eb + eb * ea).is_zero());
    }
  }
  Vec v{Scalar::frac(3, 5), Scalar::frac(4, 5)};
  EXPECT_EQ(Element::vector(v) * Element::vector(v), Element::scalar(2, 1));
  EXPECT_EQ(kind_of([] { (void)(Element::scalar(2, 1) * Element::scalar(3, 1)); }), ErrorKind::AlgebraMismatch);
  EXPECT_EQ(kind_of([] { Element(15); }), ErrorKind::SizeLimit);
}

TEST(Clifford, MonomialSignsMatchOracle) {
  for (std::uint32_t s = 0; s < 32; ++s) {
    for (std::uint32_t t = 0; t < 32; ++t) {
      auto idx = bits(s);
      auto rhs = bits(t);
      idx.insert(idx.end(), rhs.begin(), rhs.end());
      auto [sign, rest] = oracle_monomial(idx);
      EXPECT_EQ(monomial_sign(s, t), sign) << s << " " << t;
      EXPECT_EQ(bits(s ^ t), rest);
    }
  }
}

TEST(Clifford, Associative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&](int N) {
    Element x(N);
    for (std::uint32_t m = 0; m < (1u << N); ++m)
      if (rng() % 3 == 0) x += Element::monomial(N, m, coef(rng));
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 1 + trial % 5;
    auto a = random_element(N), b = random_element(N), c = random_element(N);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Clifford, BetaExamples) {
  EXPECT_TRUE(beta({e(1, 0)}, e(1, 0)) == e(1, 0));
  Vec minus = e(2, 1);
  minus[1] = -1;
  EXPECT_TRUE(beta({e(2, 0)}, e(2, 1)) == minus);
  EXPECT_TRUE(beta({e(3, 0), e(3, 1)}, e(3, 2)) == e(3, 2));
  Vec half{Scalar::frac(1, 2), Scalar::frac(1, 2)};
  EXPECT_EQ(kind_of([&] { beta({half}, e(2, 0)); }), ErrorKind::NotInV);
}

TEST(Clifford, BetaRandomAgainstReflections) {
  std::mt19937_64 rng(0xC4A7);
  for (int trial = 0; trial < 200; ++trial) {
    const int N = 1 + static_cast<int>(rng() % 8);
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Vec> xi;
    for (int k = 0; k < n; ++k) xi.push_back(random_unit_vector(N, rng));
    Vec v = trial % 2 ? e(N, static_cast<int>(rng() % N)) : random_unit_vector(N, rng);
    EXPECT_TRUE(beta(xi, v) == mat_vec(oracle_beta(xi, static_cast<std::size_t>(N)), v)) << trial;
  }
}

TEST(Clifford, RandomUnitVectors) {
  std::mt19937_64 rng(5);
  for (int N = 1; N <= 8; ++N) {
    auto u = random_unit_vector(N, rng);
    EXPECT_EQ(u.size(), static_cast<std::size_t>(N));
    EXPECT_TRUE(dot(u, u).is_one());
  }
}

TEST(Spin, DatumLayout) {
  auto d = SpinDatum::parse("1:1,3:1");
  EXPECT_EQ(d.N(), 4);
  EXPECT_EQ(d.I_odd(), (std::vector<int>{1, 3}));
  EXPECT_EQ(d.offset(3), 1);
  auto d2 = SpinDatum::parse("1:3, 2:1, 3:2");
  EXPECT_EQ(d2.N(), 3 + 2 + 6);
  EXPECT_EQ(d2.I_even(), (std::vector<int>{2}));
  EXPECT_EQ(d2.I_odd_at_least(3), (std::vector<int>{1}));
  EXPECT_EQ(kind_of([] { SpinDatum::parse("5:3"); }), ErrorKind::SizeLimit);
  EXPECT_EQ(kind_of([] { SpinDatum::parse("1-3"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { SpinDatum::parse("0:1"); }), ErrorKind::Parse);
}

TEST(Spin, Generators) {
  auto d = SpinDatum::parse("1:1,3:1,5:1");
  auto gens = spin_generators(d);
  const int N = d.N();
  EXPECT_EQ(gens.y.at(1) * gens.y.at(1), Element::scalar(N, 1));
  EXPECT_EQ(gens.y.at(3) * gens.y.at(3), Element::scalar(N, -1));
  EXPECT_EQ(gens.y.at(5) * gens.y.at(5), Element::scalar(N, 1));
  for (const auto& [i, ok] : gens.beta_is_y) EXPECT_TRUE(ok) << i;
  EXPECT_EQ(gens.y.at(1) * gens.y.at(3), -(gens.y.at(3) * gens.y.at(1)));
  EXPECT_EQ(kind_of([&] { y_tilde(d, 2); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([&] { x_ief(d, 1, {2}, {1}); }), ErrorKind::BadIndex);
}

TEST(Spin, XAntisymmetry) {
  std::mt19937_64 rng(3);
  for (const char* text : {"1:3", "1:2,3:2", "3:3"}) {
    auto d = SpinDatum::parse(text);
    for (int i : d.I_odd()) {
      const Element one = Element::scalar(d.N(), 1);
      for (int trial = 0; trial < 5; ++trial) {
        auto [a, b] = random_orthonormal_pair(d.m(i), rng);
        auto xab = x_ief(d, i, a, b);
        auto xba = x_ief(d, i, b, a);
        EXPECT_EQ(xab, -xba) << text << " " << i;
        EXPECT_EQ(xab * xba, -(xab * xab));
        // for unit vectors in general only x_{f,e} = x_{e,f}^-1 survives
        auto u = random_unit_vector(d.m(i), rng);
        auto v = random_unit_vector(d.m(i), rng);
        EXPECT_EQ(x_ief(d, i, u, v) * x_ief(d, i, v, u), one);
      }
    }
  }
  auto d = SpinDatum::parse("1:2");
  Vec u{Scalar::frac(3, 5), Scalar::frac(4, 5)};
  Vec v{1, 0};
  EXPECT_NE(x_ief(d, 1, u, v), -x_ief(d, 1, v, u));
}

TEST(Spin, DeltaOrders) {
  EXPECT_EQ(delta_check(SpinDatum::parse("1:1")).order, 4u);
  EXPECT_EQ(delta_check(SpinDatum::parse("1:2,2:1")).order, 4u);
  auto r = delta_check(SpinDatum::parse("1:1,3:1"));
  EXPECT_EQ(r.order, 8u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.relations.size(), 1 + 2 * 2 + 1u);
  EXPECT_EQ(delta_check(SpinDatum::parse("1:1,3:1,5:1")).order, 16u);
  EXPECT_EQ(delta_check(SpinDatum::parse("1:2,3:1,5:1")).order, 16u);
  EXPECT_EQ(kind_of([] { delta_check(SpinDatum::parse("2:2")); }), ErrorKind::BadParams);
}

TEST(Spin, ConjugationAction) {
  auto d1 = SpinDatum::parse("1:1,3:1");
  auto t = conj_action_check(d1, 1, d1.e(1), d1.e(1));
  EXPECT_TRUE(t.trivial_case);
  EXPECT_TRUE(t.ok());
  std::mt19937_64 rng(17);
  for (const char* text : {"1:3", "1:3,3:1", "3:3"}) {
    auto d = SpinDatum::parse(text);
    const int i = d.I_odd_at_least(3).front();
    for (int trial = 0; trial < 5; ++trial) {
      auto r = conj_action_check(d, i, random_unit_vector(3, rng), random_unit_vector(3, rng));
      EXPECT_TRUE(r.beta_equal);
      EXPECT_EQ(r.sign, 1) << text;
    }
  }
}

TEST(Spin, KernelContainment) {
  auto k = kernel_check(SpinDatum::parse("1:1,3:1,5:1"));
  EXPECT_EQ(k.generators, 3u);
  EXPECT_TRUE(k.ok());
}

TEST(Spin, SimplyConnected) {
  auto m = parse_multiplicities;
  EXPECT_TRUE(simply_connected(ClassicalType::SL, m("1:5,2:3")));
  EXPECT_TRUE(simply_connected(ClassicalType::Spin, m("1:3")));
  EXPECT_FALSE(simply_connected(ClassicalType::Spin, m("1:3,3:3")));
  EXPECT_TRUE(simply_connected(ClassicalType::Spin, m("1:3,3:2,2:4")));
  EXPECT_TRUE(simply_connected(ClassicalType::Spin, m("1:1,3:1")));
  EXPECT_FALSE(simply_connected(ClassicalType::Spin, m("1:4,5:3,7:1")));
  EXPECT_FALSE(simply_connected(ClassicalType::Symplectic, m("2:3")));
  EXPECT_TRUE(simply_connected(ClassicalType::Symplectic, m("2:2,4:1,1:6")));
  EXPECT_FALSE(simply_connected(ClassicalType::Symplectic, m("2:1,4:5")));
  EXPECT_TRUE(simply_connected(ClassicalType::Symplectic, m("1:0,2:0")));
  EXPECT_EQ(parse_type("Sp"), ClassicalType::Symplectic);
  EXPECT_EQ(kind_of([] { parse_type("G2"); }), ErrorKind::BadParams);
}

TEST(Spin, ExceptionalTable) {
  EXPECT_EQ(exceptional_table().size(), 14u);
  EXPECT_EQ(exceptional_lookup("F4", "B_3").h0, "H = H^0 = PGL_2");
  EXPECT_FALSE(exceptional_lookup("F4", "A_1\\tilde A_1").simply_connected);
  auto d4 = exceptional_lookup("E8", "D_4(a_1)A_2");
  EXPECT_EQ(d4.component_group, "Z/2");
  EXPECT_NE(d4.h0.find("outer involution"), std::string::npos);
  EXPECT_TRUE(exceptional_lookup("E6", "D_4").simply_connected);
  EXPECT_TRUE(exceptional_lookup("g2", "G_2(a_1)").simply_connected);
  EXPECT_TRUE(exceptional_lookup("E7", "A_2A_1").simply_connected);
  for (const auto& row : exceptional_table()) {
    EXPECT_EQ(exceptional_lookup(row.group, row.label == "*" ? "X" : row.label).label, row.label);
    EXPECT_EQ(row.simply_connected, row.label == "*");
  }
  EXPECT_EQ(kind_of([] { exceptional_lookup("E9", "A_1"); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([] { exceptional_lookup("E8", " "); }), ErrorKind::UnknownLabel);
}
