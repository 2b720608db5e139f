#include "almost_fourier/exact/linalg.hpp"

#include <utility>

namespace almost_fourier::exact {

Echelon rref(const ScalarMat& m) {
  ScalarMat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

namespace {

// Bareiss elimination in place. Returns the rank and, for square input,
// leaves the determinant (up to sign) in the last pivot.
std::size_t bareiss(ScalarMat& a, int& sign) {
  sign = 1;
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = Scalar();
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const ScalarMat& m) {
  ScalarMat a = m;
  int sign = 1;
  return bareiss(a, sign);
}

Scalar det(const ScalarMat& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  ScalarMat a = m;
  int sign = 1;
  if (bareiss(a, sign) < n) return Scalar();
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::vector<Vec> kernel_basis(const ScalarMat& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const ScalarMat& m) {
  // The pivot columns of the echelon form are exactly the greedy choice.
  return rref(m).pivot_cols;
}

Poly char_poly(const ScalarMat& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "char_poly of non-square matrix");
  const std::size_t n = m.rows();
  ScalarMat h = m;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && h(p, k - 1).is_zero()) ++p;
    if (p == n) continue;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k));
    }
    const Scalar inv = h(k, k - 1).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (h(i, k - 1).is_zero()) continue;
      const Scalar f = h(i, k - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) {
        if (!h(k, j).is_zero()) h(i, j) -= f * h(k, j);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (!h(r, i).is_zero()) h(r, k) += f * h(r, i);
      }
    }
  }
  // p[k] = char poly of the leading k x k block.
  std::vector<Poly> p(n + 1);
  p[0] = Poly(1);
  const Poly t = Poly::t();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - Poly(h(k - 1, k - 1))) * p[k - 1];
    Scalar prod(1);
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (prod.is_zero()) break;
      const Scalar& hik = h(k - i - 1, k - 1);
      if (hik.is_zero()) continue;
      p[k] -= p[k - i - 1] * (hik * prod);
    }
  }
  return p[n];
}

std::optional<Vec> solve_exact(const ScalarMat& a, const Vec& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  ScalarMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.reduced(k, a.cols());
  return x;
}

ScalarMat evaluate_at(const Poly& p, const ScalarMat& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "evaluate_at");
  const std::size_t n = m.rows();
  ScalarMat acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

bool min_poly_divides(const ScalarMat& m, const std::vector<Scalar>& roots) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "min_poly_divides");
  ScalarMat acc = ScalarMat::identity(m.rows());
  for (const auto& r : roots) {
    ScalarMat shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= r;
    acc = acc * shifted;
  }
  return acc.is_zero();
}

std::string factor_over(const Poly& p, const std::vector<Scalar>& roots) {
  std::string out;
  Poly rest = p;
  for (const auto& r : roots) {
    std::size_t k = 0;
    Scalar rem;
    while (rest.degree() > 0) {
      Poly q = rest.divide_linear(r, rem);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++k;
    }
    if (k == 0) continue;
    out += "(t";
    if (!r.is_zero()) {
      const std::string s = (-r).to_string();
      if (s.front() != '-' && s.front() != '(') out += "+";
      out += s;
    }
    out += ")^" + std::to_string(k);
  }
  if (!(rest == Poly(1))) out += "[" + rest.to_string() + "]";
  return out;
}

Vec mat_vec(const ScalarMat& m, const Vec& v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "mat_vec");
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

}  // namespace almost_fourier::exact
