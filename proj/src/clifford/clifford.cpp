#include "almost_fourier/clifford/clifford.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "almost_fourier/error.hpp"

namespace almost_fourier::clifford {

namespace {

void check_dim(int N) {
  if (N < 0 || N > kMaxDim) throw Error(ErrorKind::SizeLimit, "Clifford dimension " + std::to_string(N) + " outside [0,14]");
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

int to_int(const std::string& s, const std::string& ctx) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "expected an integer in '" + ctx + "'");
  }
  if (used != s.size()) throw Error(ErrorKind::Parse, "expected an integer in '" + ctx + "'");
  return v;
}

Vec basis_vector(int N, int k) {
  Vec v(static_cast<std::size_t>(N), Scalar(0));
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

Element reversed_product(int N, std::vector<Vec> vs) {
  std::reverse(vs.begin(), vs.end());
  return product(N, vs);
}

}  // namespace

Element::Element(int N) : N_(N) { check_dim(N); }

Element Element::scalar(int N, const Scalar& s) {
  Element e(N);
  e.add_term(0, s);
  return e;
}

Element Element::vector(const Vec& v) {
  Element e(static_cast<int>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) e.add_term(1u << k, v[k]);
  return e;
}

Element Element::monomial(int N, std::uint32_t mask, const Scalar& c) {
  Element e(N);
  if (mask >> N) throw Error(ErrorKind::BadIndex, "monomial outside C(V)");
  e.add_term(mask, c);
  return e;
}

Scalar Element::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<Vec> Element::as_vector() const {
  Vec v(static_cast<std::size_t>(N_), Scalar(0));
  for (const auto& [m, c] : terms_) {
    if (std::popcount(m) != 1) return std::nullopt;
    v[static_cast<std::size_t>(std::countr_zero(m))] = c;
  }
  return v;
}

void Element::add_term(std::uint32_t mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(mask, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.N_ != N_) throw Error(ErrorKind::AlgebraMismatch, "adding elements of different Clifford algebras");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.N_ != N_) throw Error(ErrorKind::AlgebraMismatch, "subtracting elements of different Clifford algebras");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

Element operator*(const Scalar& s, Element a) {
  if (s.is_zero()) return Element(a.N_);
  for (auto& [m, c] : a.terms_) c *= s;
  return a;
}

bool operator<(const Element& a, const Element& b) {
  if (a.N_ != b.N_) return a.N_ < b.N_;
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) return ia->second.to_string() < ib->second.to_string();
  }
  return false;
}

int monomial_sign(std::uint32_t s, std::uint32_t t) {
  // move each e_j of T left past the e_i of S with i > j
  int swaps = 0;
  for (std::uint32_t rest = t; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(s >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

Element Element::mul(const Element& a, const Element& b) {
  if (a.N_ != b.N_) throw Error(ErrorKind::AlgebraMismatch, "product of elements of C(V) with dim V = " +
                                                                std::to_string(a.N_) + " and " + std::to_string(b.N_));
  Element out(a.N_);
  for (const auto& [s, x] : a.terms_) {
    for (const auto& [t, y] : b.terms_) {
      Scalar c = x * y;
      if (monomial_sign(s, t) < 0) c = -c;
      out.add_term(s ^ t, c);
    }
  }
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (m == 0) continue;
    os << "*e";
    bool sep = false;
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      os << (sep ? "," : "") << std::countr_zero(rest) + 1;
      sep = true;
    }
  }
  return os.str();
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot of vectors of different length");
  Scalar s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Vec reflect(const Vec& u, const Vec& x) {
  const Scalar c = Scalar(2) * dot(u, x);
  Vec out = x;
  for (std::size_t k = 0; k < x.size(); ++k) out[k] -= c * u[k];
  return out;
}

Element product(int N, const std::vector<Vec>& vs) {
  Element acc = Element::scalar(N, 1);
  for (const auto& v : vs) {
    if (static_cast<int>(v.size()) != N) throw Error(ErrorKind::AlgebraMismatch, "vector of the wrong length");
    acc = acc * Element::vector(v);
  }
  return acc;
}

Vec beta(const std::vector<Vec>& xi, const Vec& v) {
  const int N = static_cast<int>(v.size());
  for (const auto& u : xi)
    if (!dot(u, u).is_one()) throw Error(ErrorKind::NotInV, "factor of xi is not a unit vector");
  const Element g = product(N, xi);
  const Element conj = g * Element::vector(v) * reversed_product(N, xi);
  auto out = conj.as_vector();
  if (!out) throw Error(ErrorKind::NotInV, "xi v xi^-1 = " + conj.to_string());
  Vec expect = v;
  for (auto it = xi.rbegin(); it != xi.rend(); ++it) expect = reflect(*it, expect);
  if (xi.size() % 2)
    for (auto& c : expect) c = -c;
  if (*out != expect) throw Error(ErrorKind::NotInV, "xi v xi^-1 differs from the reflection formula");
  return *out;
}

ScalarMat beta_matrix(const Element& g, const Element& g_inv) {
  const int N = g.dim();
  ScalarMat M(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    auto col = (g * Element::monomial(N, 1u << k) * g_inv).as_vector();
    if (!col) throw Error(ErrorKind::NotInV, "conjugate of e" + std::to_string(k + 1) + " leaves V");
    for (int r = 0; r < N; ++r) M(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = (*col)[static_cast<std::size_t>(r)];
  }
  return M;
}

Vec random_unit_vector(int N, std::mt19937_64& rng, int range) {
  check_dim(N);
  if (N == 0) throw Error(ErrorKind::BadParams, "no unit vectors in a zero space");
  std::uniform_int_distribution<int> coord(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Vec p;
  Scalar s = 0;
  for (int k = 0; k + 1 < N; ++k) {
    p.push_back(Scalar::frac(coord(rng), den(rng)));
    s += p.back() * p.back();
  }
  const Scalar inv = (s + 1).inverse();
  Vec u;
  for (const auto& x : p) u.push_back(Scalar(2) * x * inv);
  u.push_back((s - 1) * inv);
  if (N == 1 && coord(rng) < 0) u[0] = -u[0];
  std::shuffle(u.begin(), u.end(), rng);
  return u;
}

std::pair<Vec, Vec> random_orthonormal_pair(int m, std::mt19937_64& rng) {
  if (m < 2) throw Error(ErrorKind::BadParams, "orthonormal pair needs dimension >= 2");
  Vec a = basis_vector(m, 0), b = basis_vector(m, 1);
  for (int k = 0; k < 2; ++k) {
    const Vec u = random_unit_vector(m, rng);
    a = reflect(u, a);
    b = reflect(u, b);
  }
  return {a, b};
}

SpinDatum::SpinDatum(std::map<int, int> multiplicities) {
  for (const auto& [i, mi] : multiplicities) {
    if (i < 1 || mi < 0) throw Error(ErrorKind::BadParams, "multiplicity " + std::to_string(i) + ":" + std::to_string(mi));
    if (mi == 0) continue;
    m_[i] = mi;
    N_ += i * mi;
    if (N_ > kMaxDim) throw Error(ErrorKind::SizeLimit, "dim V exceeds 14");
  }
  if (N_ == 0) throw Error(ErrorKind::BadParams, "empty spin datum");
}

SpinDatum SpinDatum::parse(const std::string& text) { return SpinDatum(parse_multiplicities(text)); }

std::vector<int> SpinDatum::I() const {
  std::vector<int> out;
  for (const auto& [i, mi] : m_) out.push_back(i);
  return out;
}

std::vector<int> SpinDatum::I_odd() const {
  std::vector<int> out;
  for (const auto& [i, mi] : m_)
    if (i % 2) out.push_back(i);
  return out;
}

std::vector<int> SpinDatum::I_even() const {
  std::vector<int> out;
  for (const auto& [i, mi] : m_)
    if (i % 2 == 0) out.push_back(i);
  return out;
}

std::vector<int> SpinDatum::I_odd_at_least(int t) const {
  std::vector<int> out;
  for (const auto& [i, mi] : m_)
    if (i % 2 && mi >= t) out.push_back(i);
  return out;
}

int SpinDatum::m(int i) const {
  auto it = m_.find(i);
  return it == m_.end() ? 0 : it->second;
}

int SpinDatum::offset(int i) const {
  if (!m_.count(i)) throw Error(ErrorKind::BadIndex, std::to_string(i) + " not in I");
  int off = 0;
  for (const auto& [j, mj] : m_) {
    if (j == i) break;
    off += j * mj;
  }
  return off;
}

Vec SpinDatum::tensor(int i, int a, const Vec& e) const {
  if (a < 1 || a > i) throw Error(ErrorKind::BadIndex, "w_" + std::to_string(i) + "^" + std::to_string(a));
  if (static_cast<int>(e.size()) != m(i)) throw Error(ErrorKind::BadIndex, "vector is not in E_" + std::to_string(i));
  Vec v(static_cast<std::size_t>(N_), Scalar(0));
  const int off = offset(i);
  for (int b = 0; b < m(i); ++b) v[static_cast<std::size_t>(off + b * i + a - 1)] = e[static_cast<std::size_t>(b)];
  return v;
}

Vec SpinDatum::e(int i) const {
  if (!m_.count(i)) throw Error(ErrorKind::BadIndex, std::to_string(i) + " not in I");
  return basis_vector(m(i), 0);
}

ScalarMat SpinDatum::y(int i) const {
  ScalarMat Y = ScalarMat::identity(static_cast<std::size_t>(N_)).scaled(Scalar(-1));
  const int off = offset(i);
  for (int a = 0; a < i; ++a) Y(static_cast<std::size_t>(off + a), static_cast<std::size_t>(off + a)) = 1;
  return Y;
}

namespace {

std::vector<Vec> y_factors(const SpinDatum& d, int i, const Vec& e) {
  std::vector<Vec> out;
  for (int a = 1; a <= i; ++a) out.push_back(d.tensor(i, a, e));
  return out;
}

void check_odd(const SpinDatum& d, int i) {
  if (i % 2 == 0 || d.m(i) == 0) throw Error(ErrorKind::BadIndex, std::to_string(i) + " not in I_odd");
}

Element y_inverse(const SpinDatum& d, int i) { return reversed_product(d.N(), y_factors(d, i, d.e(i))); }

}  // namespace

Element y_tilde(const SpinDatum& d, int i) {
  check_odd(d, i);
  return product(d.N(), y_factors(d, i, d.e(i)));
}

Element x_ief(const SpinDatum& d, int i, const Vec& e, const Vec& f) {
  check_odd(d, i);
  for (const auto* v : {&e, &f}) {
    if (static_cast<int>(v->size()) != d.m(i)) throw Error(ErrorKind::BadIndex, "vector is not in E_" + std::to_string(i));
    if (!dot(*v, *v).is_one()) throw Error(ErrorKind::BadIndex, "not a unit vector of E_" + std::to_string(i));
  }
  auto fs = y_factors(d, i, e);
  auto gs = y_factors(d, i, f);
  fs.insert(fs.end(), gs.begin(), gs.end());
  return product(d.N(), fs);
}

SpinGenerators spin_generators(const SpinDatum& d) {
  SpinGenerators out;
  for (int i : d.I_odd()) {
    out.y.emplace(i, y_tilde(d, i));
    out.beta_is_y[i] = beta_matrix(out.y.at(i), y_inverse(d, i)) == d.y(i);
  }
  return out;
}

DeltaReport delta_check(const SpinDatum& d) {
  const auto odd = d.I_odd();
  if (odd.empty()) throw Error(ErrorKind::BadParams, "I_odd is empty");
  const int N = d.N();
  const Element one = Element::scalar(N, 1);
  const Element c = Element::scalar(N, -1);
  DeltaReport rep;
  auto check = [&](const std::string& name, bool ok) {
    rep.relations.push_back(name);
    if (!ok) rep.failures.push_back(name);
  };
  check("c^2 = 1", c * c == one);
  std::map<int, Element> z;
  for (int i : odd) z.emplace(i, y_tilde(d, i));
  for (int i : odd) {
    const std::string zi = "z" + std::to_string(i);
    check("c " + zi + " = " + zi + " c", c * z.at(i) == z.at(i) * c);
    const Element sq = ((i * (i - 1) / 2) % 2) ? c : one;
    check(zi + "^2 = c^" + std::to_string(i * (i - 1) / 2), z.at(i) * z.at(i) == sq);
  }
  for (std::size_t a = 0; a < odd.size(); ++a) {
    for (std::size_t b = a + 1; b < odd.size(); ++b) {
      const Element& zi = z.at(odd[a]);
      const Element& zj = z.at(odd[b]);
      check("z" + std::to_string(odd[a]) + " z" + std::to_string(odd[b]) + " = c z" + std::to_string(odd[b]) + " z" +
                std::to_string(odd[a]),
            zi * zj == c * zj * zi);
    }
  }
  // closure: every element is a signed monomial
  std::vector<Element> gens{c};
  for (int i : odd) gens.push_back(z.at(i));
  std::set<Element> seen{one};
  std::vector<Element> frontier{one};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Element y = x * g;
        if (!y.is_monomial()) throw Error(ErrorKind::RelationFailure, "closure produced a non-monomial");
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (seen.size() > 4096) throw Error(ErrorKind::RelationFailure, "generated group too large");
    frontier = std::move(next);
  }
  rep.order = seen.size();
  rep.expected_order = std::size_t{1} << (odd.size() + 1);
  if (!rep.ok()) {
    std::string why = rep.failures.empty() ? "order " + std::to_string(rep.order) : rep.failures.front();
    throw Error(ErrorKind::RelationFailure, why);
  }
  return rep;
}

ConjReport conj_action_check(const SpinDatum& d, int i, const Vec& e, const Vec& f) {
  check_odd(d, i);
  ConjReport rep;
  rep.i = i;
  const Element Y = y_tilde(d, i);
  const Element Yi = y_inverse(d, i);
  if (d.m(i) == 1) {
    rep.trivial_case = true;
    const Element X = x_ief(d, i, d.e(i), d.e(i));
    rep.beta_equal = X == Y * Y && Y * X == X * Y;
    rep.sign = 1;
    if (!rep.beta_equal) throw Error(ErrorKind::RelationFailure, "y~ does not commute with x_{i;e_i,e_i}");
    return rep;
  }
  const Element X = x_ief(d, i, e, f);
  auto fs = y_factors(d, i, e);
  {
    auto back = y_factors(d, i, f);
    fs.insert(fs.end(), back.begin(), back.end());
  }
  const Element Xi = reversed_product(d.N(), fs);
  const Element L = Y * X * Yi;
  const ScalarMat lhs = beta_matrix(L, Y * Xi * Yi);
  const ScalarMat yi = d.y(i);
  rep.beta_equal = lhs == yi * beta_matrix(X, Xi) * yi;
  const Vec ei = d.e(i);
  const Element Xr = x_ief(d, i, reflect(ei, e), reflect(ei, f));
  if (L == Xr) rep.sign = 1;
  else if (L == -Xr) rep.sign = -1;
  if (!rep.beta_equal) throw Error(ErrorKind::RelationFailure, "conjugation by y~_" + std::to_string(i) + " disagrees with y_i");
  return rep;
}

KernelReport kernel_check(const SpinDatum& d) {
  const auto odd = d.I_odd();
  const int N = d.N();
  const Element one = Element::scalar(N, 1);
  const Element c = Element::scalar(N, -1);
  // c'_i is -1 in C(V_i); its image is u (-u) for a unit vector u of V_i
  std::map<int, Element> image;
  for (int i : odd) {
    const Vec u = d.tensor(i, 1, d.e(i));
    Vec mu = u;
    for (auto& x : mu) x = -x;
    image.emplace(i, product(N, {u, mu}));
  }
  KernelReport rep;
  rep.singles_central = true;
  for (int i : odd) rep.singles_central = rep.singles_central && image.at(i) == c && !(image.at(i) == one);
  rep.pairs_trivial = true;
  for (std::size_t a = 0; a < odd.size(); ++a) {
    for (std::size_t b = a + 1; b < odd.size(); ++b) {
      ++rep.generators;
      rep.pairs_trivial = rep.pairs_trivial && image.at(odd[a]) * image.at(odd[b]) == one;
    }
  }
  return rep;
}

ClassicalType parse_type(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (t == "sl" || t == "a") return ClassicalType::SL;
  if (t == "spin" || t == "so") return ClassicalType::Spin;
  if (t == "sp" || t == "symplectic") return ClassicalType::Symplectic;
  throw Error(ErrorKind::BadParams, "unknown classical type '" + s + "'");
}

bool simply_connected(ClassicalType type, const std::map<int, int>& m) {
  int count = 0;
  switch (type) {
    case ClassicalType::SL:
      return true;
    case ClassicalType::Spin:
      for (const auto& [i, mi] : m)
        if (i % 2 && mi >= 3) ++count;
      return count <= 1;
    case ClassicalType::Symplectic:
      for (const auto& [i, mi] : m)
        if (i % 2 == 0 && mi >= 3) ++count;
      return count == 0;
  }
  return false;
}

std::map<int, int> parse_multiplicities(const std::string& text) {
  std::map<int, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected i:m in '" + item + "'");
    const int i = to_int(trim(item.substr(0, colon)), item);
    const int mi = to_int(trim(item.substr(colon + 1)), item);
    if (i < 1 || mi < 0) throw Error(ErrorKind::Parse, "bad multiplicity '" + item + "'");
    if (out.count(i)) throw Error(ErrorKind::Parse, "repeated index " + std::to_string(i));
    out[i] = mi;
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty multiplicity list");
  return out;
}

const std::vector<ExceptionalRow>& exceptional_table() {
  static const std::vector<ExceptionalRow> rows = {
      {"G2", "*", "(H^0)_der simply connected", "", true},
      {"E6", "*", "(H^0)_der simply connected", "", true},
      {"F4", "A_1~A_1", "H = H^0 = PGL_2 x SL_2", "1", false},
      {"F4", "B_3", "H = H^0 = PGL_2", "1", false},
      {"F4", "*", "(H^0)_der simply connected", "", true},
      {"E7", "A_2A_1^2", "H = H^0 = SL_2^3/{+-1}, {+-1} diagonal in the centre", "1", false},
      {"E7", "*", "(H^0)_der simply connected", "", true},
      {"E8", "A_2A_1^2", "H = H^0 = (SL_2 x Spin_7)/{+-1}, {+-1} diagonal in the centre", "1", false},
      {"E8", "A_3A_2A_1", "H = H^0 = PGL_2 x SL_2", "1", false},
      {"E8", "A_4A_2", "H = H^0 = SL_2^2/{+-1}, {+-1} diagonal in the centre", "1", false},
      {"E8", "D_4(a_1)A_2", "H^0 = PGL_3, H = PGL_3 . Z/2 with Z/2 acting by an outer involution", "Z/2", false},
      {"E8", "D_5(a_1)A_1", "H = H^0 = PGL_2 x SL_2", "1", false},
      {"E8", "A_6", "H = H^0 = SL_2^2/{+-1}, {+-1} diagonal in the centre", "1", false},
      {"E8", "*", "(H^0)_der simply connected", "", true},
  };
  return rows;
}

namespace {

std::string normalize_label(const std::string& s) {
  std::string t;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.compare(k, 6, "\\tilde") == 0) {
      t += '~';
      k += 5;
      continue;
    }
    const char ch = s[k];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '{' || ch == '}') continue;
    t += ch;
  }
  return t;
}

}  // namespace

const ExceptionalRow& exceptional_lookup(const std::string& group, const std::string& label) {
  std::string g = trim(group);
  std::transform(g.begin(), g.end(), g.begin(), [](unsigned char ch) { return std::toupper(ch); });
  const std::string l = normalize_label(label);
  if (l.empty()) throw Error(ErrorKind::UnknownLabel, "empty class label");
  const ExceptionalRow* fallback = nullptr;
  for (const auto& row : exceptional_table()) {
    if (row.group != g) continue;
    if (row.label == "*") fallback = &row;
    else if (normalize_label(row.label) == l) return row;
  }
  if (!fallback) throw Error(ErrorKind::UnknownLabel, "unknown exceptional type '" + group + "'");
  return *fallback;
}

}  // namespace almost_fourier::clifford
