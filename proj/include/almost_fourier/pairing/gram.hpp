#pragma once

#include <optional>
#include <string>
#include <vector>

#include "almost_fourier/exact/linalg.hpp"

namespace almost_fourier::pairing {

using exact::Scalar;
using exact::ScalarMat;
using exact::Vec;

/// Pairing values between two labeled point lists. When both lists are the
/// same sector the matrix is square and Hermitian.
class GramSpace {
 public:
  GramSpace() = default;
  /// Square Gram matrix of one point list; throws InvalidDatum unless Hermitian.
  GramSpace(std::vector<std::string> labels, ScalarMat gram);
  /// Rectangular block between two sectors (no symmetry requirement).
  static GramSpace block(std::vector<std::string> rows, std::vector<std::string> cols, ScalarMat values);

  const std::vector<std::string>& labels() const { return rows_; }
  const std::vector<std::string>& col_labels() const { return cols_; }
  const ScalarMat& matrix() const { return m_; }
  std::size_t size() const { return rows_.size(); }
  /// Index of a row label; throws UnknownLabel.
  std::size_t index(const std::string& label) const;
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  ScalarMat m_;
};

/// Basis of {a : sum_i a_i (p_i, q) = 0 for every column point q}, i.e. the
/// kernel of the transposed pairing matrix.
std::vector<Vec> radical(const GramSpace& gs);
std::size_t quotient_dim(const GramSpace& gs);

struct ImageSet {
  /// Columns used as quotient coordinates (lexicographically first maximal
  /// independent set).
  std::vector<std::size_t> columns;
  /// One coordinate vector per distinct image.
  std::vector<Vec> coords;
  /// Point indices mapping to each image; the first member names the image.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::string> labels;
  std::size_t dim = 0;

  /// Image index of point i.
  std::size_t image_of(std::size_t point) const;
};

ImageSet image_set(const GramSpace& gs);

struct PositiveBasis {
  std::vector<std::size_t> members;  // image indices, ascending
  /// coefficients[k] expresses image k over the members.
  std::vector<Vec> coefficients;
};

/// The unique basis of the quotient among the images in whose cone every
/// image lies. Throws NonRealCone, NoPositiveBasis or NonUnique.
PositiveBasis positive_basis(const ImageSet& images);

struct StarVector {
  Vec coefficients;  // over the basis members
  Vec coords;        // in quotient coordinates
};

/// sum over b in the basis of (b, p) b, for the point with row index p.
StarVector star(std::size_t point, const PositiveBasis& basis, const ImageSet& images, const GramSpace& gs);

/// Coefficients expressing a combination of points (given as point weights)
/// in the basis, or nullopt if the vector is not in the span.
std::optional<Vec> express(const Vec& point_weights, const PositiveBasis& basis, const ImageSet& images,
                           const GramSpace& gs);

/// Matrix of pairings among the basis images.
ScalarMat reduced_gram(const PositiveBasis& basis, const ImageSet& images, const GramSpace& gs);

/// CSV with a header row of column labels and a label in front of each row.
std::string to_csv(const GramSpace& gs);

}  // namespace almost_fourier::pairing
