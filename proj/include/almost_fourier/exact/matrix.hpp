#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "almost_fourier/error.hpp"
#include "almost_fourier/exact/poly.hpp"
#include "almost_fourier/exact/scalar.hpp"

namespace almost_fourier::exact {

/// Dense row-major matrix over Scalar or Poly.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  /// Builds from nested rows; all rows must have equal length.
  static Mat from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(i * cols_),
                          data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!exact::is_zero(x)) return false;
    }
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Mat conj_transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = exact::conj((*this)(i, j));
    }
    return t;
  }

  bool is_hermitian() const { return is_square() && *this == conj_transpose(); }

  /// Rows and columns picked by index lists, in the given order.
  Mat submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Mat s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    }
    return s;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Mat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (exact::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (exact::is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  template <class S>
  Mat scaled(const S& s) const {
    Mat out = *this;
    for (auto& x : out.data_) x = x * s;
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Applies f entrywise, e.g. evaluating a Poly matrix at a point.
  template <class F>
  auto map(F&& f) const -> Mat<decltype(f(std::declval<const T&>()))> {
    Mat<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shape");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMat = Mat<Scalar>;
using PolyMat = Mat<Poly>;
using Vec = std::vector<Scalar>;

/// Trace of a square matrix.
template <class T>
T trace(const Mat<T>& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "trace");
  T acc{};
  for (std::size_t k = 0; k < m.rows(); ++k) acc += m(k, k);
  return acc;
}

/// m^k for square m.
template <class T>
Mat<T> power(const Mat<T>& m, unsigned k) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "power");
  Mat<T> out = Mat<T>::identity(m.rows());
  for (unsigned j = 0; j < k; ++j) out = out * m;
  return out;
}

}  // namespace almost_fourier::exact
