#include "almost_fourier/exact/poly.hpp"

#include <algorithm>

namespace almost_fourier::exact {

Poly::Poly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Scalar c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(k + 1);
  v[k] = std::move(c);
  Poly p;
  p.coeffs_ = std::move(v);
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::conj() const {
  Poly p;
  p.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) p.coeffs_.push_back(c.conj());
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly Poly::divide_linear(const Scalar& root, Scalar& remainder) const {
  if (coeffs_.empty()) {
    remainder = Scalar();
    return {};
  }
  // Synthetic division, highest degree first.
  std::vector<Scalar> q(coeffs_.size() - 1);
  Scalar carry;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  remainder = carry;
  return Poly(std::move(q));
}

std::size_t Poly::root_multiplicity(const Scalar& root) const {
  if (is_zero()) return 0;
  std::size_t k = 0;
  Poly p = *this;
  while (p.degree() > 0) {
    Scalar rem;
    Poly q = p.divide_linear(root, rem);
    if (!rem.is_zero()) break;
    p = std::move(q);
    ++k;
  }
  return k;
}

std::string Poly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = !c.is_rational();
    if (compound) cs = "(" + cs + ")";
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      const std::string power = k == 1 ? var : var + "^" + std::to_string(k);
      if (c.is_one()) {
        term = power;
      } else if (c.is_rational() && c.rational() == -1) {
        term = "-" + power;
      } else {
        term = cs + "*" + power;
      }
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace almost_fourier::exact
