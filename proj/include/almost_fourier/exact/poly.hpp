#pragma once

#include <string>
#include <vector>

#include "almost_fourier/exact/scalar.hpp"

namespace almost_fourier::exact {

/// Dense univariate polynomial in t over Scalar. Coefficients are stored
/// lowest degree first and never carry trailing zeros; the zero polynomial
/// has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(Scalar c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs);

  /// c * t^k
  static Poly monomial(Scalar c, std::size_t k);
  static Poly t() { return monomial(Scalar(1), 1); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  Scalar leading() const { return coeffs_.empty() ? Scalar() : coeffs_.back(); }

  Scalar evaluate(const Scalar& x) const;
  Poly conj() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division by (t - root); returns the quotient and sets remainder.
  Poly divide_linear(const Scalar& root, Scalar& remainder) const;
  /// Largest k with (t - root)^k dividing this polynomial.
  std::size_t root_multiplicity(const Scalar& root) const;

  /// Human-readable form, highest degree first, e.g. "t^2-2*t+1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

inline Poly conj(const Poly& p) { return p.conj(); }
inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline std::string to_string(const Poly& p) { return p.to_string(); }

}  // namespace almost_fourier::exact
