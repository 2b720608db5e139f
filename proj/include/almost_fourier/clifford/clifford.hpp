#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "almost_fourier/exact/matrix.hpp"

namespace almost_fourier::clifford {

using exact::Scalar;
using exact::ScalarMat;
using exact::Vec;

constexpr int kMaxDim = 14;

/// Element of C(V) for V with orthonormal basis e_1..e_N, as a sparse map
/// from subsets (bit k-1 for e_k) to coefficients.
class Element {
 public:
  Element() = default;
  /// Zero of C(V); throws SizeLimit unless 0 <= N <= 14.
  explicit Element(int N);
  static Element scalar(int N, const Scalar& s);
  static Element vector(const Vec& v);
  /// +-e_S for the subset mask S.
  static Element monomial(int N, std::uint32_t mask, const Scalar& c = 1);

  int dim() const { return N_; }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of e_S.
  Scalar coeff(std::uint32_t mask) const;
  /// Grade-1 coordinates, or nullopt if other grades occur.
  std::optional<Vec> as_vector() const;
  /// Single term c e_S.
  bool is_monomial() const { return terms_.size() == 1; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b) { return mul(a, b); }
  friend Element operator*(const Scalar& s, Element a);
  friend bool operator==(const Element& a, const Element& b) { return a.N_ == b.N_ && a.terms_ == b.terms_; }
  friend bool operator<(const Element& a, const Element& b);

  /// Throws AlgebraMismatch when the dimensions differ.
  static Element mul(const Element& a, const Element& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

 private:
  void add_term(std::uint32_t mask, const Scalar& c);
  int N_ = 0;
  std::map<std::uint32_t, Scalar> terms_;
};

/// Sign of e_S e_T = sign * e_{S xor T}.
int monomial_sign(std::uint32_t s, std::uint32_t t);

Scalar dot(const Vec& a, const Vec& b);
/// r_u(x) = x - 2 (u,x) u for (u,u) = 1.
Vec reflect(const Vec& u, const Vec& x);

/// v_1 ... v_n in C(V).
Element product(int N, const std::vector<Vec>& vs);

/// xi v xi^-1 for xi = v_1...v_n with unit v_k; checks that the result lies
/// in V and equals (-1)^n r_{v_1}...r_{v_n}(v). Throws NotInV.
Vec beta(const std::vector<Vec>& xi, const Vec& v);

/// Matrix of v -> g v g^-1 on the basis of V. Throws NotInV.
ScalarMat beta_matrix(const Element& g, const Element& g_inv);

/// Rational unit vector of R^N from a random point via inverse stereographic
/// projection.
Vec random_unit_vector(int N, std::mt19937_64& rng, int range = 3);
/// Orthogonal unit vectors (images of the first two basis vectors under two
/// random reflections). Throws BadParams for m < 2.
std::pair<Vec, Vec> random_orthonormal_pair(int m, std::mt19937_64& rng);

/// V = sum_i W_i (x) E_i with dim W_i = i, dim E_i = m_i. Basis vector
/// w_i^a (x) eps_b has index offset(i) + (b-1) i + (a-1).
class SpinDatum {
 public:
  /// Throws BadParams (negative or zero keys) or SizeLimit (N > 14).
  explicit SpinDatum(std::map<int, int> multiplicities);
  /// "1:1,3:1"; throws Parse.
  static SpinDatum parse(const std::string& text);

  const std::map<int, int>& multiplicities() const { return m_; }
  int N() const { return N_; }
  std::vector<int> I() const;
  std::vector<int> I_odd() const;
  std::vector<int> I_even() const;
  std::vector<int> I_odd_at_least(int t) const;
  int m(int i) const;
  int offset(int i) const;

  /// w_i^a (x) e in V for e in E_i.
  Vec tensor(int i, int a, const Vec& e) const;
  /// The chosen e_i (first basis vector of E_i).
  Vec e(int i) const;
  /// y_i: 1 on W_i (x) e_i, -1 on its perpendicular.
  ScalarMat y(int i) const;

 private:
  std::map<int, int> m_;
  int N_ = 0;
};

/// y~_i = (w_i^1 (x) e_i) ... (w_i^i (x) e_i). Throws BadIndex unless i is
/// in I_odd.
Element y_tilde(const SpinDatum& d, int i);
/// x_{i;e,f} = (w^1 e)...(w^i e)(w^1 f)...(w^i f), with x_{i;f,e} its inverse
/// and x_{i;f,e} = -x_{i;e,f} when e is orthogonal to f; throws BadIndex for a bad i
/// or e, f not unit vectors of E_i.
Element x_ief(const SpinDatum& d, int i, const Vec& e, const Vec& f);

struct SpinGenerators {
  std::map<int, Element> y;  // y~_i for i in I_odd
  std::map<int, bool> beta_is_y;
};
SpinGenerators spin_generators(const SpinDatum& d);

struct DeltaReport {
  std::vector<std::string> relations;  // relations checked
  std::vector<std::string> failures;
  std::size_t order = 0;
  std::size_t expected_order = 0;
  bool ok() const { return failures.empty() && order == expected_order; }
};
/// Relations of Delta on c = -1 and the y~_i, and the order of the group
/// they generate. Throws BadParams for empty I_odd, RelationFailure on failure.
DeltaReport delta_check(const SpinDatum& d);

struct ConjReport {
  int i = 0;
  bool trivial_case = false;  // m_i = 1
  bool beta_equal = false;
  int sign = 0;  // y~ x y~^-1 = sign * x_{i; r e, r f}; 0 if neither
  bool ok() const { return beta_equal && sign != 0; }
};
/// Throws RelationFailure.
ConjReport conj_action_check(const SpinDatum& d, int i, const Vec& e, const Vec& f);

struct KernelReport {
  std::size_t generators = 0;
  bool pairs_trivial = false;   // Phi'(c'_i c'_i') = 1
  bool singles_central = false; // Phi'(c'_i) = c, not 1
  bool ok() const { return pairs_trivial && singles_central; }
};
KernelReport kernel_check(const SpinDatum& d);

enum class ClassicalType { SL, Spin, Symplectic };
/// "SL", "Spin", "Sp"/"Symplectic"; throws BadParams.
ClassicalType parse_type(const std::string& s);
bool simply_connected(ClassicalType type, const std::map<int, int>& m);
/// "1:3,3:3"; throws Parse.
std::map<int, int> parse_multiplicities(const std::string& text);

struct ExceptionalRow {
  std::string group;
  std::string label;  // "*" for all other classes
  std::string h0;
  std::string component_group;
  bool simply_connected;
};
const std::vector<ExceptionalRow>& exceptional_table();
/// Exact row, else the catch-all row of that group. Throws UnknownLabel for
/// an unknown group or empty label.
const ExceptionalRow& exceptional_lookup(const std::string& group, const std::string& label);

}  // namespace almost_fourier::clifford
