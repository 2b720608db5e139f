#include <gtest/gtest.h>

#include "almost_fourier/error.hpp"
#include "almost_fourier/hecke/hecke.hpp"

using namespace almost_fourier;
using namespace almost_fourier::hecke;

namespace {

// Independent numeric model: the generator matrices at t = t0 written
// straight from the edge list of each graph, no WGraph involved.
struct Oracle {
  std::vector<std::string> names;
  std::vector<int> mark;
  std::map<std::pair<int, int>, Scalar> mu;  // (y, x)

  int at(const std::string& s) const {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == s) return static_cast<int>(k);
    return -1;
  }

  ScalarMat gen(int s, const Scalar& t0) const {
    const std::size_t d = names.size();
    ScalarMat M(d, d);
    for (std::size_t x = 0; x < d; ++x) {
      if (mark[x] == s) {
        M(x, x) = -1;
        continue;
      }
      M(x, x) = t0 * t0;
      for (std::size_t y = 0; y < d; ++y) {
        auto it = mu.find({static_cast<int>(y), static_cast<int>(x)});
        if (mark[y] == s && it != mu.end()) M(y, x) = t0 * it->second;
      }
    }
    return M;
  }
};

Oracle oracle_d(int n, const Scalar& l) {
  Oracle o;
  for (int j = 0; j <= n; ++j) {
    o.names.push_back("v" + std::to_string(j));
    o.mark.push_back(j);
  }
  for (int j = n - 1; j >= 1; --j) {
    o.names.push_back("v'" + std::to_string(j));
    o.mark.push_back(j);
  }
  // cycle v0 v1 ... vn v'_{n-1} ... v'_1 v0
  const std::size_t d = o.names.size();
  for (std::size_t k = 0; k < d; ++k) {
    const int a = static_cast<int>(k), b = static_cast<int>((k + 1) % d);
    o.mu[{a, b}] = 1;
    o.mu[{b, a}] = 1;
  }
  o.mu[{o.at("v0"), o.at("v1")}] = l;
  o.mu[{o.at("v1"), o.at("v0")}] = l.inverse();
  const std::string last = "v'" + std::to_string(n - 1);
  o.mu[{o.at("v" + std::to_string(n)), o.at(last)}] = l;
  o.mu[{o.at(last), o.at("v" + std::to_string(n))}] = l.inverse();
  return o;
}

int braid(int n, int i, int j) {
  if (std::abs(i - j) >= 2) return 2;
  return (std::min(i, j) == 0 || std::min(i, j) == n - 1) ? 4 : 3;
}

std::vector<Scalar> lambdas() { return {1, 2, 5}; }

}  // namespace

TEST(WGraph, Shapes) {
  auto a = wgraph(GraphKind::A, 2);
  EXPECT_EQ(a.vertices, (std::vector<std::string>{"v0", "v1", "v2"}));
  EXPECT_EQ(a.marks, (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  EXPECT_EQ(a.mu.at({0, 1}), Scalar(2));
  EXPECT_EQ(a.mu.at({1, 0}), Scalar(1));
  EXPECT_EQ(a.mu.at({2, 1}), Scalar(2));
  auto c = wgraph(GraphKind::C, 3);
  EXPECT_EQ(c.vertices, (std::vector<std::string>{"v0", "v3"}));
  EXPECT_TRUE(c.mu.empty());
  auto d = wgraph(GraphKind::D, 2, 3);
  EXPECT_EQ(d.vertices.size(), 4u);
  EXPECT_EQ(d.mu.at({d.index("v0"), d.index("v1")}), Scalar(3));
  EXPECT_EQ(d.mu.at({d.index("v1"), d.index("v0")}), Scalar::frac(1, 3));
  EXPECT_EQ(d.mu.at({d.index("v'1"), d.index("v0")}), Scalar(1));
  auto b = wgraph(GraphKind::B, 4);
  EXPECT_EQ(b.vertices, (std::vector<std::string>{"v1", "v2", "v3"}));
  EXPECT_EQ(b.braid_order(0, 1), 4);
  EXPECT_EQ(b.braid_order(1, 2), 3);
  EXPECT_EQ(b.braid_order(3, 4), 4);
  EXPECT_EQ(b.braid_order(1, 3), 2);
}

TEST(WGraph, BadParams) {
  for (auto f : {+[] { wgraph(GraphKind::A, 1); }, +[] { wgraph(GraphKind::D, 2, 0); }}) {
    try {
      f();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadParams);
    }
  }
  EXPECT_THROW(parse_kind("e"), Error);
}

TEST(Hecke, RelationsAllKinds) {
  for (int n : {2, 3, 4}) {
    for (auto k : {GraphKind::A, GraphKind::B, GraphKind::C}) {
      auto g = wgraph(k, n);
      auto rep = check_relations(raw_module(g), g);
      EXPECT_TRUE(rep.ok()) << kind_name(k) << n << " " << (rep.ok() ? "" : rep.failures.front());
      EXPECT_EQ(rep.quadratic, static_cast<std::size_t>(n + 1));
      EXPECT_EQ(rep.braid, static_cast<std::size_t>(n * (n + 1) / 2));
    }
    for (const auto& l : lambdas()) {
      auto g = wgraph(GraphKind::D, n, l);
      EXPECT_TRUE(check_relations(raw_module(g), g).ok()) << n << " " << l;
    }
  }
}

TEST(Hecke, GeneratorActionConvention) {
  auto g = wgraph(GraphKind::C, 3);
  auto m = hecke_module(g);
  const Poly t2 = Poly::t() * Poly::t();
  EXPECT_EQ(m.gen(0)(0, 0), Poly(-1));
  EXPECT_EQ(m.gen(0)(1, 1), t2);
  auto d = wgraph(GraphKind::D, 2, 3);
  auto md = hecke_module(d);
  // T_{s1} v0 = t^2 v0 + t mu(v1, v0) v1 + t mu(v'1, v0) v'1
  EXPECT_EQ(md.gen(1)(d.index("v1"), d.index("v0")), Poly::t() * Scalar::frac(1, 3));
  EXPECT_EQ(md.gen(1)(d.index("v'1"), d.index("v0")), Poly::t());
}

// Against the numeric oracle at t = 3: same matrices, and the braid
// relations hold there.
TEST(Hecke, AgreesWithOracle) {
  const Scalar t0 = 3;
  for (int n : {2, 3}) {
    for (const auto& l : lambdas()) {
      auto o = oracle_d(n, l);
      auto g = wgraph(GraphKind::D, n, l);
      auto m = hecke_module(g);
      for (int s = 0; s <= n; ++s) {
        ScalarMat mine = m.gen(s).map([&](const Poly& p) { return p.evaluate(t0); });
        ScalarMat theirs(o.names.size(), o.names.size());
        const ScalarMat og = o.gen(s, t0);
        for (std::size_t x = 0; x < o.names.size(); ++x)
          for (std::size_t y = 0; y < o.names.size(); ++y) theirs(g.index(o.names[y]), g.index(o.names[x])) = og(y, x);
        EXPECT_EQ(mine, theirs);
      }
      for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          ScalarMat P = ScalarMat::identity(o.names.size()), Q = P;
          for (int k = 0; k < braid(n, i, j); ++k) {
            P = P * o.gen(k % 2 ? j : i, t0);
            Q = Q * o.gen(k % 2 ? i : j, t0);
          }
          EXPECT_EQ(P, Q) << n << " " << i << j;
        }
      }
    }
  }
}

// Reading mu(y,x) in the other direction.
TEST(Hecke, TransposedWeights) {
  for (const auto& l : std::vector<Scalar>{2, 5}) {
    auto g = wgraph(GraphKind::D, 2, l);
    std::map<std::pair<std::size_t, std::size_t>, Scalar> flipped;
    for (const auto& [yx, w] : g.mu) flipped[{yx.second, yx.first}] = w;
    g.mu = flipped;
    EXPECT_TRUE(check_relations(raw_module(g), g).ok());
  }
  // Breaking the product condition on the m = 4 edge does fail.
  auto g = wgraph(GraphKind::A, 2);
  g.mu[{0, 1}] = 3;
  EXPECT_FALSE(check_relations(raw_module(g), g).ok());
  EXPECT_THROW(hecke_module(g), Error);
}

TEST(Hecke, Omega) {
  auto wa = omega(GraphKind::A, 2);
  EXPECT_EQ(wa, ScalarMat::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  auto wc = omega(GraphKind::C, 4);
  EXPECT_EQ(wc, ScalarMat::from_rows({{0, 1}, {1, 0}}));
  auto g = wgraph(GraphKind::D, 2, 1);
  auto wd = omega(GraphKind::D, 2);
  EXPECT_EQ(wd(g.index("v'1"), g.index("v1")), Scalar(1));
  EXPECT_EQ(wd(g.index("v2"), g.index("v0")), Scalar(1));
  for (int n : {2, 3, 4}) {
    for (auto k : {GraphKind::A, GraphKind::B, GraphKind::C}) {
      auto gg = wgraph(k, n);
      EXPECT_TRUE(check_omega(hecke_module(gg), gg).empty()) << kind_name(k) << n;
    }
    for (const auto& l : lambdas()) {
      auto gg = wgraph(GraphKind::D, n, l);
      EXPECT_TRUE(check_omega(hecke_module(gg), gg).empty()) << n << l;
    }
  }
}

TEST(Hecke, RestrictionAndCounts) {
  for (int n : {2, 3}) {
    for (auto k : {GraphKind::A, GraphKind::B, GraphKind::C}) {
      auto g = wgraph(k, n);
      auto m = hecke_module(g);
      for (int i = 0; i <= n; ++i) {
        auto r = restrict_to(m, g, i);
        EXPECT_TRUE(r.ok()) << kind_name(k) << n << " i=" << i;
        std::size_t expect = 0;
        if (k == GraphKind::A) expect = 1;
        if (k == GraphKind::B) expect = (i >= 1 && i <= n - 1) ? 1 : 0;
        if (k == GraphKind::C) expect = (i == 0 || i == n) ? 1 : 0;
        EXPECT_EQ(r.count, expect);
      }
    }
  }
  for (int n : {2, 3, 4})
    for (const auto& c : counting_identities(n)) EXPECT_TRUE(c.a_ok && c.b_ok && c.c_ok) << n << " " << c.i;
}

TEST(Hecke, RestrictionDetectsInstability) {
  auto g = wgraph(GraphKind::A, 2);
  auto m = raw_module(g);
  m.T.at(1)(0, 2) = Poly(1);  // T_{s1} v2 now leaks into v0, which is marked s0
  try {
    restrict_to(m, g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StabilityFailure);
  }
}

TEST(Hecke, DecomposeD1) {
  for (int n : {2, 3, 4}) {
    auto r = decompose_d1(n);
    EXPECT_EQ(r.plus_dim, static_cast<std::size_t>(n + 1));
    EXPECT_EQ(r.minus_dim, static_cast<std::size_t>(n - 1));
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.plus_is_a && r.minus_is_b);
    EXPECT_EQ(r.words, 1 + (n + 1) + (n + 1) * (n + 1) + (n + 1) * (n + 1) * (n + 1) + 300u);
  }
  auto m = hecke_module(wgraph(GraphKind::D, 3, 1));
  EXPECT_EQ(word_trace(m, {}), Poly(6));
}

TEST(Hecke, LambdaIndependence) {
  EXPECT_TRUE(lambda_independence(2, 0, {1, 2, 5}));
  EXPECT_TRUE(lambda_independence(3, 2, {1, 3}));
  for (int n : {2, 3})
    for (int i = 0; i <= n; ++i) EXPECT_TRUE(lambda_independence(n, i, {1, 2, 5})) << n << i;
  // Over all generators the cycle can be traversed, so some traces move.
  EXPECT_FALSE(full_word_differences(2, {1, 2, 5}).empty());
}

TEST(Hecke, WordSampling) {
  auto a = sample_words({0, 1, 2});
  auto b = sample_words({0, 1, 2});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 1 + 3 + 9 + 27 + 300u);
  EXPECT_NE(a, sample_words({0, 1, 2}, 6, 3, 100, 7));
  EXPECT_EQ(word_string({0, 2}), "s0 s2");
}

TEST(Hecke, VrcIdentities) {
  auto r = vrc_identities();
  EXPECT_TRUE(r.f_squared_identity);
  EXPECT_TRUE(r.matches_gram);
  EXPECT_TRUE(r.e_holds);
  EXPECT_TRUE(r.eliminated_consistent);
  EXPECT_EQ(r.inverse_equalities.size(), 4u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.F(0, 0), Scalar::frac(1, 2));
  EXPECT_EQ(r.F(3, 1), Scalar::frac(-1, 2));
}

TEST(Hecke, SpecializeAtOne) {
  auto gc = wgraph(GraphKind::C, 3);
  auto rc = specialize_q1(hecke_module(gc), gc);
  for (const auto& S : rc.generators) {
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < S.cols(); ++j)
        if (i != j) EXPECT_TRUE(S(i, j).is_zero());
  }
  auto ga = wgraph(GraphKind::A, 2);
  auto ra = specialize_q1(hecke_module(ga), ga);
  EXPECT_EQ(exact::power(ra.generators[0] * ra.generators[1], 4), ScalarMat::identity(3));
  EXPECT_NE(exact::power(ra.generators[0] * ra.generators[1], 2), ScalarMat::identity(3));
  auto gd = wgraph(GraphKind::D, 2, 1);
  auto rd = specialize_q1(hecke_module(gd), gd);
  ASSERT_TRUE(rd.theta_split.has_value());
  EXPECT_TRUE(*rd.theta_split);
  EXPECT_TRUE(rd.ok());
}

TEST(Hecke, JsonRoundTrip) {
  for (auto g : {wgraph(GraphKind::A, 3), wgraph(GraphKind::D, 2, Scalar::frac(2, 3)), wgraph(GraphKind::C, 2)}) {
    auto back = wgraph_from_json(wgraph_to_json(g));
    EXPECT_EQ(back.vertices, g.vertices);
    EXPECT_EQ(back.marks, g.marks);
    EXPECT_EQ(back.mu, g.mu);
    EXPECT_EQ(back.lambda, g.lambda);
  }
  auto j = wgraph_to_json(wgraph(GraphKind::A, 2));
  j["edges"][0]["to"] = "v9";
  EXPECT_THROW(wgraph_from_json(j), Error);
  j = wgraph_to_json(wgraph(GraphKind::A, 2));
  j["vertices"][0]["marks"] = {7};
  EXPECT_THROW(wgraph_from_json(j), Error);
}
