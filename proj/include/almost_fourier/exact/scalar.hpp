#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace almost_fourier::exact {

/// Arbitrary-precision rational; GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

std::string to_string(const Rational& q);
/// num/den in lowest terms.
Rational make_rational(long num, long den);
Rational parse_rational(std::string_view text);

/// Gaussian rational re + im*i.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q" when real, "p/q+r/s*i" (or "p/q-r/s*i") otherwise.
  std::string to_string() const;
  static Gaussian parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Element a + b*w of Q(i, w) = Q(zeta_12), w = exp(2*pi*i/3), a and b
/// Gaussian rationals. Holds every character value of groups whose exponent
/// divides 12. Values with b = 0 are the Gaussian rationals and serialize in
/// the plain Gaussian format.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : a_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Gaussian v) : a_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Gaussian a, Gaussian b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  static Scalar i() { return Scalar(Gaussian(0, 1)); }
  static Scalar omega() { return Scalar(Gaussian(0), Gaussian(1)); }
  /// exp(2*pi*i*k/m); m must divide 12.
  static Scalar root_of_unity(long k, long m);

  const Gaussian& gaussian_part() const { return a_; }
  const Gaussian& omega_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_gaussian() const { return b_.is_zero(); }
  bool is_rational() const { return b_.is_zero() && a_.is_real(); }
  /// Throws unless is_rational().
  const Rational& rational() const;
  bool is_one() const { return is_rational() && a_.re() == 1; }

  Scalar conj() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return {-a_, -b_}; }

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  Gaussian a_;
  Gaussian b_;
};

inline Scalar conj(const Scalar& s) { return s.conj(); }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline std::string to_string(const Scalar& s) { return s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }

}  // namespace almost_fourier::exact
