#pragma once

#include <optional>
#include <string>
#include <vector>

#include "almost_fourier/pairing/tabulated.hpp"

namespace almost_fourier::families {

using exact::Scalar;
using exact::ScalarMat;
using exact::Vec;

enum class FamilyId { F14, F15_rsq1, F15_rsqm1, F112 };

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId id);
/// Accepts the enum spelling or the short CLI names F14, F15a, F15b, F112.
/// Throws UnknownLabel.
FamilyId parse_family(const std::string& text);

/// Frozen, validated datum.
pairing::TabulatedDatum datum(FamilyId id);

/// sum_k coeff_k (row label_k) == 0 in the sector-1 quotient.
struct Relation {
  std::string text;
  std::vector<std::pair<std::string, Scalar>> terms;
  bool holds = false;
};

struct ValueCheck {
  std::string name;
  Scalar expected;
  Scalar actual;
  bool ok() const { return expected == actual; }
};

struct FamilyReport {
  FamilyId id;
  std::string name;
  pairing::GramSpace gram;  // sector 1
  ScalarMat golden;
  std::vector<Vec> radical;
  std::size_t quotient_dim = 0;
  pairing::ImageSet images;
  pairing::PositiveBasis basis;
  std::vector<std::string> basis_labels;
  std::vector<std::string> golden_basis;
  ScalarMat reduced;
  ScalarMat golden_reduced;
  std::size_t golden_radical_dim = 0;
  std::vector<pairing::StarVector> stars;  // one per row of gram
  std::vector<Relation> relations;
  std::vector<ValueCheck> values;
  /// More images than basis elements; the remaining images are positive
  /// combinations of the basis.
  bool extra_images = false;
  /// F15 only: both r^2 variants give the same sector-1 matrix.
  std::optional<bool> variants_coincide;

  bool golden_match() const { return gram.matrix() == golden; }
  bool reduced_match() const { return reduced == golden_reduced; }
  bool basis_match() const { return basis_labels == golden_basis; }
  bool ok() const;
};

FamilyReport family_report(FamilyId id);

}  // namespace almost_fourier::families
