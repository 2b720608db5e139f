#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "almost_fourier/groups/character.hpp"
#include "almost_fourier/pairing/gram.hpp"

namespace almost_fourier::pairing {

/// Irreducible representation of a point's component group D_x.
struct TabIrrep {
  std::string label;
  std::string sector;
  groups::ClassFunction character;
};

/// A point x of the family up to conjugacy.
struct TabPoint {
  std::string label;
  groups::FiniteGroup d;  // D_x = Z_H(x) / Z_H(x)^0
  /// Image in D_x of each element of Lambda, keyed by the Lambda label.
  std::map<std::string, groups::Elem> lambda_image;
  std::size_t zbar = 1;  // |Z_H(x) / (Z_H(x)^0 Lambda)|
  std::vector<TabIrrep> irreps;
};

/// One orbit representative z of A^h_{x,y}.
struct ZRecord {
  groups::Elem dy;  // image of z x z^-1 in D_y
  groups::Elem dx;  // image of z^-1 y z in D_x
  bool adapted = true;
};

struct Component {
  std::string label;
  std::string inverse;
};

using CellKey = std::tuple<std::string, std::string, std::string>;  // (x, y, component)

struct TabulatedDatum {
  std::string name;
  std::vector<Component> components;  // identity component first
  std::size_t prefactor = 1;          // |Lambda / (Lambda cap H^0)|
  std::vector<std::string> lambda;    // labels of Lambda, identity first
  /// Sector label -> value of the character on each Lambda label.
  std::vector<std::pair<std::string, std::map<std::string, Scalar>>> sectors;
  std::vector<TabPoint> points;
  std::map<CellKey, std::vector<ZRecord>> cells;

  const TabPoint& point(const std::string& label) const;
  std::size_t point_index(const std::string& label) const;
  const Component& component(const std::string& label) const;
};

/// Point x with irrep sigma.
struct TabSigma {
  std::string point;
  std::string irrep;
};

/// Checks |Z-bar| = |D_x|/|image of Lambda|, that irreps form a validated
/// character table with Lambda acting through the declared sector, that every
/// cell is present, and the cell symmetry (y,x,h^-1) = swap of (x,y,h).
/// Throws InvalidDatum with the first failure.
void validate(const TabulatedDatum& d);

/// kappa(x,y,h): 1/(number of adapted records) or 0 when none is adapted.
/// Throws MissingCell.
Scalar kappa(const TabulatedDatum& d, const std::string& x, const std::string& y, const std::string& h);

Scalar pair_tabulated(const TabulatedDatum& d, const TabSigma& p, const TabSigma& q);

/// ((l x, sigma), (l2 y, tau)) for Lambda-translates of tabulated points,
/// through the law chi_sigma(l2) conj(chi_tau(l)) ((x, sigma), (y, tau)).
Scalar pair_translated(const TabulatedDatum& d, const std::string& l, const TabSigma& p, const std::string& l2,
                       const TabSigma& q);

/// Points (x, sigma) with sigma in the given sector, in point then irrep order.
std::vector<TabSigma> sector_points(const TabulatedDatum& d, const std::string& sector);
std::string sigma_label(const TabSigma& s);

/// Pairing matrix between sector chi (rows) and sector chi2 (columns).
GramSpace pairing_matrix(const TabulatedDatum& d, const std::string& chi, const std::string& chi2);

nlohmann::json datum_to_json(const TabulatedDatum& d);
/// Throws Parse on malformed input; the result is validated.
TabulatedDatum datum_from_json(const nlohmann::json& j);

}  // namespace almost_fourier::pairing
