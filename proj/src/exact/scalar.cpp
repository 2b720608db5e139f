#include "almost_fourier/exact/scalar.hpp"

#include <array>
#include <cctype>

#include "almost_fourier/error.hpp"

namespace almost_fourier::exact {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool is_zero_q(const Rational& q) { return sgn(q) == 0; }

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  const std::size_t digits_start = (!s.empty() && s.front() == '-') ? 1 : 0;
  bool seen_slash = false;
  bool digit_since_sep = false;
  for (std::size_t k = digits_start; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (seen_slash || !digit_since_sep) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
      seen_slash = true;
      digit_since_sep = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      digit_since_sep = true;
    } else {
      throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    }
  }
  if (!digit_since_sep) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  Rational q(s, 10);
  if (sgn(q.get_den()) == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Gaussian

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return Gaussian(1 / re_);
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  if (!is_zero_q(o.im_)) im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  if (!is_zero_q(o.im_)) im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (is_zero_q(im_) && is_zero_q(o.im_)) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Gaussian::to_string() const {
  if (is_real()) return exact::to_string(re_);
  std::string out = exact::to_string(re_);
  if (sgn(im_) > 0) {
    out += "+" + exact::to_string(im_);
  } else {
    out += "-" + exact::to_string(Rational(-im_));
  }
  return out + "*i";
}

Gaussian Gaussian::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  if (s.back() != 'i') return Gaussian(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split "re(+|-)im" at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string part) -> Rational {
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return parse_rational(part);
  };
  if (split == std::string::npos) return {Rational(0), imag_of(s)};
  return {parse_rational(s.substr(0, split)), imag_of(s.substr(split))};
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::root_of_unity(long k, long m) {
  if (m <= 0 || 12 % m != 0) throw Error(ErrorKind::BadParams, "root of unity order must divide 12");
  // zeta_12 = -i*w has order 12.
  static const std::array<Scalar, 12> powers = [] {
    std::array<Scalar, 12> p;
    const Scalar zeta = -Scalar::i() * Scalar::omega();
    p[0] = Scalar(1);
    for (std::size_t j = 1; j < 12; ++j) p[j] = p[j - 1] * zeta;
    return p;
  }();
  long e = (k % m + m) % m * (12 / m);
  return powers[static_cast<std::size_t>(e % 12)];
}

const Rational& Scalar::rational() const {
  if (!is_rational()) throw Error(ErrorKind::NonRealCone, "scalar " + to_string() + " is not rational");
  return a_.re();
}

Scalar Scalar::conj() const {
  if (b_.is_zero()) return Scalar(a_.conj());
  // conj(w) = w^2 = -1 - w
  const Gaussian bc = b_.conj();
  return {a_.conj() - bc, -bc};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (b_.is_zero()) return Scalar(a_.inverse());
  // (a + b w)(a + b w^2) = a^2 - ab + b^2, and a + b w^2 = (a - b) - b w.
  const Gaussian n = a_ * a_ - a_ * b_ + b_ * b_;
  const Gaussian ninv = n.inverse();
  return {(a_ - b_) * ninv, -b_ * ninv};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
  const Gaussian bd = b_ * o.b_;
  Gaussian na = a_ * o.a_ - bd;
  Gaussian nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string Scalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  return "(" + a_.to_string() + ")+(" + b_.to_string() + ")*w";
}

Scalar Scalar::parse(std::string_view text) {
  std::string s = strip(text);
  const auto wpos = s.rfind(")*w");
  if (wpos == std::string::npos) return Scalar(Gaussian::parse(s));
  if (s.size() != wpos + 3 || s.front() != '(') throw Error(ErrorKind::Parse, "bad scalar '" + s + "'");
  const auto mid = s.find(")+(");
  if (mid == std::string::npos || mid > wpos) throw Error(ErrorKind::Parse, "bad scalar '" + s + "'");
  return {Gaussian::parse(s.substr(1, mid - 1)), Gaussian::parse(s.substr(mid + 3, wpos - mid - 3))};
}

}  // namespace almost_fourier::exact
