#include "almost_fourier/verify/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "almost_fourier/clifford/clifford.hpp"
#include "almost_fourier/error.hpp"
#include "almost_fourier/exact/linalg.hpp"
#include "almost_fourier/groups/character.hpp"
#include "almost_fourier/heis/heisenberg.hpp"
#include "almost_fourier/pairing/finite.hpp"
#include "almost_fourier/pairing/tabulated.hpp"

namespace almost_fourier::verify {

using exact::Scalar;
using exact::ScalarMat;
using exact::Vec;

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string mismatches(std::size_t bad) { return std::to_string(bad) + " mismatches"; }

std::size_t count_mismatches(const ScalarMat& a, const ScalarMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return a.rows() * a.cols() + 1;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) bad += !(a(i, j) == b(i, j));
  return bad;
}

}  // namespace

void Runner::emit(CheckResult r) {
  if (sink_) sink_(r);
  results_.push_back(std::move(r));
}

void Runner::check(const std::string& name, const std::string& expected, const std::function<std::string()>& actual) {
  CheckResult r{name, "fail", expected, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.actual = actual();
    if (r.actual == expected) r.status = "pass";
  } catch (const Error& e) {
    r.actual = e.what();
  } catch (const std::exception& e) {
    r.actual = std::string("exception: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(std::move(r));
}

void Runner::skip(const std::string& name, const std::string& why) { emit({name, "skipped", "", why, 0}); }

std::size_t Runner::failures() const {
  std::size_t n = 0;
  for (const auto& r : results_) n += r.status == "fail";
  return n;
}

nlohmann::ordered_json to_json(const CheckResult& r, bool timing) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["status"] = r.status;
  j["expected"] = r.expected;
  j["actual"] = r.actual;
  if (timing) j["ms"] = std::round(r.ms * 1000) / 1000;
  return j;
}

std::string matrix_string(const ScalarMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- fourier

const std::vector<std::string>& fourier_groups() {
  static const std::vector<std::string> names = {"trivial", "Z2", "Z3", "Z4", "S3", "D4", "Q8"};
  return names;
}

namespace {

groups::FiniteGroup group_by_name(const std::string& name) {
  if (name == "trivial") return groups::trivial_group();
  if (name == "Z2") return groups::cyclic(2);
  if (name == "Z3") return groups::cyclic(3);
  if (name == "Z4") return groups::cyclic(4);
  if (name == "S3") return groups::symmetric(3);
  if (name == "D4") return groups::dihedral(4);
  if (name == "Q8") return groups::quaternion();
  throw Error(ErrorKind::BadParams, "unknown group '" + name + "' (trivial, Z2, Z3, Z4, S3, D4, Q8)");
}

}  // namespace

ScalarMat fourier_matrix(const std::string& group) { return pairing::classical_fourier(group_by_name(group)).matrix(); }

void fourier_checks(Runner& r, const std::string& group) {
  // sum over classes of the number of irreducibles of the centralizer
  static const std::map<std::string, std::string> sizes = {{"trivial", "1"}, {"Z2", "4"}, {"Z3", "9"}, {"Z4", "16"},
                                                           {"S3", "8"},      {"D4", "22"}, {"Q8", "22"}};
  const auto g = group_by_name(group);
  const auto M = pairing::classical_fourier(g).matrix();
  const std::string p = "fourier/" + group + "/";
  r.check(p + "size", sizes.at(group), [&] { return std::to_string(M.rows()); });
  r.check(p + "hermitian", "true", [&] { return yes(M.is_hermitian()); });
  r.check(p + "square-is-identity", "true", [&] { return yes(M * M == ScalarMat::identity(M.rows())); });
}

// ---------------------------------------------------------------- heis

void heis_checks(Runner& r, int n, bool spectrum) {
  const heis::Heisenberg h(n);
  const std::string p = "heis/n=" + std::to_string(n) + "/";
  r.check(p + "z-count", std::to_string(heis::z_count(n)), [&] { return std::to_string(h.z_index().size()); });
  r.check(p + "characters", "all valid", [&] {
    for (unsigned x = 0; x < h.space_size(); ++x) {
      auto sc = h.sector_characters(x);
      std::vector<groups::ClassFunction> all = sc.one;
      all.insert(all.end(), sc.chi.begin(), sc.chi.end());
      auto c = groups::validate_characters(h.group().centralizer(h.lift(x)), all);
      if (!c.ok) return "x=" + h.vec_name(x) + ": " + (c.diagnostics.empty() ? "" : c.diagnostics.front());
    }
    return std::string("all valid");
  });
  const auto m = heis::matrix_M(h);
  const ScalarMat& M = m.matrix();
  r.check(p + "brute-force-vs-closed-form", mismatches(0), [&] { return mismatches(count_mismatches(M, heis::closed_form_matrix(h))); });
  const ScalarMat M2 = M * M;
  r.check(p + "square-block-formula", mismatches(0), [&] { return mismatches(count_mismatches(M2, heis::m2_block_formula(h))); });
  r.check(p + "min-poly-divides-124", "true", [&] { return yes(exact::min_poly_divides(M2, {1, 2, 4})); });
  r.check(p + "det-nonzero", "true", [&] { return yes(!exact::det(M).is_zero()); });
  if (n == 1 || spectrum) {
    const std::string expect = n == 1 ? "(t-1)^1(t-2)^6(t-4)^3" : "";
    if (n == 1) r.check(p + "char-poly-square", expect, [&] { return heis::spectrum_report(m).factorization; });
    else r.check(p + "char-poly-square", "factors over {1,2,4}", [&] {
      auto f = heis::spectrum_report(m).factorization;
      return f.empty() || f.find('[') != std::string::npos ? "does not factor: " + f : std::string("factors over {1,2,4}");
    });
  }
  const auto rules = heis::check_sector_rules(h);
  r.check(p + "mixed-sector-closed-form", mismatches(0), [&] { return mismatches(rules.mixed_required.mismatches); });
  r.check(p + "chi-sector-closed-form", mismatches(0), [&] { return mismatches(rules.chi_required.mismatches); });
}

void pairing_property_checks(Runner& r, int n, std::size_t samples, std::uint64_t seed) {
  const heis::Heisenberg h(n);
  const auto& d = h.datum();
  const auto& g = d.group();
  std::vector<pairing::FinitePoint> pts;
  for (unsigned eps = 0; eps < 2; ++eps) {
    for (const auto& z : h.z_index()) pts.push_back(h.point(z, eps));
    for (unsigned x = 0; x < h.space_size(); ++x)
      for (auto& q : h.chi_points(x, eps)) pts.push_back(std::move(q));
  }
  const auto& lam = d.lambda().elements();
  const std::string p = "pairing/heis-n=" + std::to_string(n) + "/" + (samples ? std::to_string(samples) + "-sampled/" : "exhaustive/");
  std::size_t herm = 0, conj = 0, equi = 0, tuples = 0;
  auto run = [&](const pairing::FinitePoint& a, const pairing::FinitePoint& b, groups::Elem f, groups::Elem z, groups::Elem z2) {
    ++tuples;
    const Scalar v = pairing::pair_finite(d, a, b);
    herm += !(pairing::pair_finite(d, b, a) == v.conj());
    conj += !(pairing::pair_finite(d, pairing::conjugate_point(d, f, a), pairing::conjugate_point(d, f, b)) == v);
    const auto& chi = d.lambda_characters()[d.sector_of(a)];
    const auto& chi2 = d.lambda_characters()[d.sector_of(b)];
    equi += !(pairing::pair_finite(d, pairing::translate_point(d, z, a), pairing::translate_point(d, z2, b)) ==
              chi(z2) * chi2(z).conj() * v);
  };
  if (samples == 0) {
    for (const auto& a : pts)
      for (const auto& b : pts)
        for (std::size_t k = 0; k < g.order(); ++k)
          run(a, b, g.elements()[k], lam[k % lam.size()], lam[(k / lam.size()) % lam.size()]);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto& a = pts[rng() % pts.size()];
      const auto& b = pts[rng() % pts.size()];
      const auto f = g.elements()[rng() % g.order()];
      const auto z = lam[rng() % lam.size()];
      const auto z2 = lam[rng() % lam.size()];
      run(a, b, f, z, z2);
    }
  }
  const std::string tail = " of " + std::to_string(tuples);
  r.check(p + "hermitian", "0 failures" + tail, [&] { return std::to_string(herm) + " failures" + tail; });
  r.check(p + "conjugation-invariant", "0 failures" + tail, [&] { return std::to_string(conj) + " failures" + tail; });
  r.check(p + "lambda-equivariant", "0 failures" + tail, [&] { return std::to_string(equi) + " failures" + tail; });
}

// ---------------------------------------------------------------- families

void family_checks(Runner& r, families::FamilyId id) {
  const auto rep = families::family_report(id);
  const std::string p = "family/" + rep.name + "/";
  r.check(p + "matrix", matrix_string(rep.golden), [&] { return matrix_string(rep.gram.matrix()); });
  r.check(p + "radical-dim", std::to_string(rep.golden_radical_dim), [&] { return std::to_string(rep.radical.size()); });
  for (const auto& rel : rep.relations) r.check(p + "relation " + rel.text, "holds", [&] { return rel.holds ? "holds" : "fails"; });
  r.check(p + "reduced-gram", matrix_string(rep.golden_reduced), [&] { return matrix_string(rep.reduced); });
  r.check(p + "basis", join(rep.golden_basis), [&] { return join(rep.basis_labels); });
  for (const auto& v : rep.values) r.check(p + v.name, v.expected.to_string(), [&] { return v.actual.to_string(); });
  if (rep.variants_coincide) r.check(p + "sector-1-same-for-both-variants", "true", [&] { return yes(*rep.variants_coincide); });
}

// ---------------------------------------------------------------- hecke

std::optional<HeckeCheck> parse_hecke_check(const std::string& s) {
  if (s == "relations") return HeckeCheck::Relations;
  if (s == "omega") return HeckeCheck::Omega;
  if (s == "restrict") return HeckeCheck::Restrict;
  if (s == "decompose") return HeckeCheck::Decompose;
  if (s == "vrc") return HeckeCheck::Vrc;
  return std::nullopt;
}

namespace {

std::string lambda_tag(const hecke::WGraph& g) {
  return g.kind == hecke::GraphKind::D ? "d(lambda=" + g.lambda.to_string() + ")" : hecke::kind_name(g.kind);
}

}  // namespace

void hecke_checks(Runner& r, const HeckeSelection& sel, std::uint64_t seed) {
  using hecke::GraphKind;
  const int n = sel.n;
  const std::string p = "hecke/n=" + std::to_string(n) + "/";
  auto wants = [&](HeckeCheck c) { return !sel.check || *sel.check == c; };
  std::vector<hecke::WGraph> graphs;
  const std::vector<Scalar> lambdas = sel.lambda ? std::vector<Scalar>{*sel.lambda} : std::vector<Scalar>{1, 2, 5};
  for (auto k : {GraphKind::A, GraphKind::B, GraphKind::C, GraphKind::D}) {
    if (sel.kind && *sel.kind != k) continue;
    if (k == GraphKind::D)
      for (const auto& l : lambdas) graphs.push_back(hecke::wgraph(k, n, l));
    else
      graphs.push_back(hecke::wgraph(k, n));
  }
  for (const auto& g : graphs) {
    const std::string q = p + lambda_tag(g) + "/";
    if (wants(HeckeCheck::Relations)) {
      const std::string expect = "quadratic " + std::to_string(n + 1) + ", braid " + std::to_string(n * (n + 1) / 2);
      r.check(q + "relations", expect, [&] {
        auto rep = hecke::check_relations(hecke::raw_module(g), g);
        if (!rep.ok()) return rep.failures.front();
        return "quadratic " + std::to_string(rep.quadratic) + ", braid " + std::to_string(rep.braid);
      });
    }
    if (wants(HeckeCheck::Omega)) {
      r.check(q + "omega", "omega^2 = 1, omega T_i omega = T_{n-i}", [&] {
        auto f = hecke::check_omega(hecke::hecke_module(g), g);
        return f.empty() ? std::string("omega^2 = 1, omega T_i omega = T_{n-i}") : f.front();
      });
    }
    if (wants(HeckeCheck::Restrict)) {
      r.check(q + "restrict", "stable, quotient t^2, traces agree for every i", [&] {
        const auto m = hecke::hecke_module(g);
        for (int i = 0; i <= n; ++i) {
          auto rep = hecke::restrict_to(m, g, i, seed);
          if (!rep.ok()) return "fails at i=" + std::to_string(i);
        }
        return std::string("stable, quotient t^2, traces agree for every i");
      });
    }
  }
  const bool all_kinds = !sel.kind;
  if (wants(HeckeCheck::Restrict) && all_kinds) {
    r.check(p + "counting-identities", "hold for i=0.." + std::to_string(n), [&] {
      for (const auto& c : hecke::counting_identities(n))
        if (!(c.a_ok && c.b_ok && c.c_ok)) return "fails at i=" + std::to_string(c.i);
      return "hold for i=0.." + std::to_string(n);
    });
  }
  if (wants(HeckeCheck::Decompose) && (all_kinds || *sel.kind == GraphKind::D)) {
    const std::size_t n1 = static_cast<std::size_t>(n + 1);
    const std::size_t words = 1 + n1 + n1 * n1 + n1 * n1 * n1 + 300;
    const std::string expect = "dims (" + std::to_string(n + 1) + "," + std::to_string(n - 1) + "), traces equal on " +
                               std::to_string(words) + " words, E+ = E^a, E- = E^b";
    r.check(p + "decompose-d1", expect, [&] {
      auto rep = hecke::decompose_d1(n, seed);
      if (!rep.ok()) return rep.failures.front();
      return "dims (" + std::to_string(rep.plus_dim) + "," + std::to_string(rep.minus_dim) + "), traces " +
             (rep.trace_equal ? "equal" : "differ") + " on " + std::to_string(rep.words) + " words, E+ " +
             (rep.plus_is_a ? "= E^a" : "!= E^a") + ", E- " + (rep.minus_is_b ? "= E^b" : "!= E^b");
    });
    r.check(p + "lambda-independence", "true for lambda in {1,2,5} and every i", [&] {
      for (int i = 0; i <= n; ++i)
        if (!hecke::lambda_independence(n, i, {1, 2, 5}, seed)) return "fails at i=" + std::to_string(i);
      return std::string("true for lambda in {1,2,5} and every i");
    });
  }
  if (wants(HeckeCheck::Vrc) && all_kinds) {
    const auto rep = hecke::vrc_identities(n);
    r.check(p + "vrc/F-squared-identity", "true", [&] { return yes(rep.f_squared_identity); });
    r.check(p + "vrc/F-equals-reduced-gram", matrix_string(rep.gram), [&] { return matrix_string(rep.F); });
    r.check(p + "vrc/inverse-equalities", "4 hold", [&] {
      std::size_t good = 0;
      for (const auto& [name, ok] : rep.inverse_equalities) good += ok;
      return std::to_string(good) + " hold";
    });
    r.check(p + "vrc/consistent", "true", [&] { return yes(rep.e_holds && rep.eliminated_consistent); });
  }
}

// ---------------------------------------------------------------- clifford

void clifford_datum_checks(Runner& r, const std::string& text, const std::string& which, std::uint64_t seed) {
  using namespace clifford;
  if (which != "beta" && which != "delta" && which != "conj" && which != "all")
    throw Error(ErrorKind::BadParams, "unknown clifford check '" + which + "'");
  const SpinDatum d = SpinDatum::parse(text);
  const std::string p = "clifford/" + text + "/";
  std::mt19937_64 rng(seed);
  if (which == "beta" || which == "all") {
    r.check(p + "beta-of-y-tilde", "y_i for every odd i", [&] {
      for (const auto& [i, ok] : spin_generators(d).beta_is_y)
        if (!ok) return "differs at i=" + std::to_string(i);
      return std::string("y_i for every odd i");
    });
    r.check(p + "beta-reflection-formula", "50 agree", [&] {
      for (int k = 0; k < 50; ++k) {
        std::vector<Vec> xi;
        for (int j = 0, len = 1 + static_cast<int>(rng() % 3); j < len; ++j) xi.push_back(random_unit_vector(d.N(), rng));
        beta(xi, random_unit_vector(d.N(), rng));
      }
      return std::string("50 agree");
    });
  }
  if ((which == "delta" || which == "all") && !d.I_odd().empty()) {
    const std::string order = std::to_string(std::size_t{1} << (d.I_odd().size() + 1));
    r.check(p + "delta-order", order, [&] { return std::to_string(delta_check(d).order); });
  }
  if (which == "conj" || which == "all") {
    for (int i : d.I_odd()) {
      r.check(p + "conj-action i=" + std::to_string(i), "beta equal, sign +1", [&] {
        Vec e = d.e(i), f = d.e(i);
        if (d.m(i) >= 2) {
          e = random_unit_vector(d.m(i), rng);
          f = random_unit_vector(d.m(i), rng);
        }
        auto rep = conj_action_check(d, i, e, f);
        return std::string(rep.beta_equal ? "beta equal" : "beta differs") + ", sign " +
               (rep.sign > 0 ? "+1" : rep.sign < 0 ? "-1" : "none");
      });
    }
  }
}

void clifford_checks(Runner& r, std::uint64_t seed) {
  using namespace clifford;
  r.check("clifford/beta/200-random", "200 agree, N <= 8", [&] {
    std::mt19937_64 rng(seed);
    int maxN = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int N = 1 + static_cast<int>(rng() % 8);
      maxN = std::max(maxN, N);
      std::vector<Vec> xi;
      for (int k = 0, len = 1 + static_cast<int>(rng() % 4); k < len; ++k) xi.push_back(random_unit_vector(N, rng));
      beta(xi, random_unit_vector(N, rng));
    }
    return "200 agree, N <= " + std::to_string(maxN);
  });
  const SpinDatum d13 = SpinDatum::parse("1:1,3:1");
  r.check("clifford/y1-squared", "(1)", [&] { return (y_tilde(d13, 1) * y_tilde(d13, 1)).to_string(); });
  r.check("clifford/y3-squared", "(-1)", [&] { return (y_tilde(d13, 3) * y_tilde(d13, 3)).to_string(); });
  r.check("clifford/y1-y3-anticommute", "true", [&] {
    return yes(y_tilde(d13, 1) * y_tilde(d13, 3) == -(y_tilde(d13, 3) * y_tilde(d13, 1)));
  });
  for (const char* text : {"1:1", "1:1,3:1", "1:1,3:1,5:1"}) {
    const SpinDatum d = SpinDatum::parse(text);
    const std::string expect = std::to_string(std::size_t{1} << (d.I_odd().size() + 1));
    r.check(std::string("clifford/delta-order/") + text, expect, [&] {
      auto rep = delta_check(d);
      return std::to_string(rep.order);
    });
  }
  r.check("clifford/kernel-contains-A", "3 pair generators map to 1", [&] {
    auto k = kernel_check(SpinDatum::parse("1:1,3:1,5:1"));
    return std::to_string(k.generators) + " pair generators map to " + (k.ok() ? "1" : "something else");
  });
  r.check("clifford/conj-action/1:3", "beta equal, sign +1", [&] {
    std::mt19937_64 rng(seed);
    const SpinDatum d = SpinDatum::parse("1:3");
    auto rep = conj_action_check(d, 1, random_unit_vector(3, rng), random_unit_vector(3, rng));
    return std::string(rep.beta_equal ? "beta equal" : "beta differs") + ", sign " + (rep.sign > 0 ? "+1" : "-1");
  });
  struct Case {
    const char* type;
    const char* m;
    bool expect;
  };
  static const Case cases[] = {
      {"SL", "1:5,2:3", true},       {"SL", "3:4", true},           {"Spin", "1:3", true},
      {"Spin", "1:3,3:3", false},    {"Spin", "1:3,3:2,2:4", true}, {"Spin", "1:4,5:3,7:1", false},
      {"Spin", "2:3,4:3,1:1", true}, {"Sp", "2:3", false},          {"Sp", "2:2,4:1,1:6", true},
      {"Sp", "2:1,4:5", false},
  };
  for (const auto& c : cases) {
    r.check(std::string("clifford/simply-connected/") + c.type + " " + c.m, yes(c.expect),
            [&] { return yes(simply_connected(parse_type(c.type), parse_multiplicities(c.m))); });
  }
  struct Row {
    const char* group;
    const char* label;
    const char* h;
    bool sc;
  };
  static const Row rows[] = {
      {"G2", "G_2(a_1)", "(H^0)_der simply connected", true},
      {"E6", "D_4(a_1)", "(H^0)_der simply connected", true},
      {"F4", "A_1~A_1", "H = H^0 = PGL_2 x SL_2", false},
      {"F4", "B_3", "H = H^0 = PGL_2", false},
      {"F4", "C_3", "(H^0)_der simply connected", true},
      {"E7", "A_2A_1^2", "H = H^0 = SL_2^3/{+-1}, {+-1} diagonal in the centre", false},
      {"E7", "A_4", "(H^0)_der simply connected", true},
      {"E8", "A_2A_1^2", "H = H^0 = (SL_2 x Spin_7)/{+-1}, {+-1} diagonal in the centre", false},
      {"E8", "A_3A_2A_1", "H = H^0 = PGL_2 x SL_2", false},
      {"E8", "A_4A_2", "H = H^0 = SL_2^2/{+-1}, {+-1} diagonal in the centre", false},
      {"E8", "D_4(a_1)A_2", "H^0 = PGL_3, H = PGL_3 . Z/2 with Z/2 acting by an outer involution", false},
      {"E8", "D_5(a_1)A_1", "H = H^0 = PGL_2 x SL_2", false},
      {"E8", "A_6", "H = H^0 = SL_2^2/{+-1}, {+-1} diagonal in the centre", false},
      {"E8", "E_8(a_7)", "(H^0)_der simply connected", true},
  };
  r.check("clifford/exceptional/row-count", std::to_string(std::size(rows)), [] { return std::to_string(exceptional_table().size()); });
  for (const auto& row : rows) {
    r.check(std::string("clifford/exceptional/") + row.group + ":" + row.label, std::string(row.h) + "; sc=" + yes(row.sc), [&] {
      const auto& got = exceptional_lookup(row.group, row.label);
      return got.h0 + "; sc=" + yes(got.simply_connected);
    });
  }
}

// ---------------------------------------------------------------- criteria

void criterion_checks(Runner& r, int criterion, std::uint64_t seed) {
  using families::FamilyId;
  switch (criterion) {
    case 1:
      for (const auto& g : fourier_groups()) fourier_checks(r, g);
      return;
    case 2:
      family_checks(r, FamilyId::F15_rsqm1);
      family_checks(r, FamilyId::F15_rsq1);
      return;
    case 3:
      family_checks(r, FamilyId::F112);
      return;
    case 4:
      family_checks(r, FamilyId::F14);
      return;
    case 5:
      heis_checks(r, 1, true);
      heis_checks(r, 2, false);
      return;
    case 6:
      pairing_property_checks(r, 1, 0, seed);
      pairing_property_checks(r, 2, 500, seed);
      return;
    case 7:
      for (int n : {2, 3, 4}) hecke_checks(r, HeckeSelection{n, {}, {}, {}}, seed);
      return;
    case 8:
      clifford_checks(r, seed);
      return;
    default:
      throw Error(ErrorKind::BadParams, "no checks for criterion " + std::to_string(criterion));
  }
}

void verify_all(Runner& r, std::uint64_t seed) {
  for (int c = 1; c <= 8; ++c) criterion_checks(r, c, seed);
}

}  // namespace almost_fourier::verify
