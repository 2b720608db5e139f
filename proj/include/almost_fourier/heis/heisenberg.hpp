#pragma once

#include <string>
#include <vector>

#include "almost_fourier/exact/linalg.hpp"
#include "almost_fourier/pairing/finite.hpp"

namespace almost_fourier::heis {

using exact::Scalar;
using exact::ScalarMat;
using groups::ClassFunction;
using groups::Elem;
using pairing::FinitePoint;
using pairing::GramSpace;

/// (x, ybar) with ybar the smaller of y, y+x.
struct ZEntry {
  unsigned x;
  unsigned y;
  friend bool operator==(const ZEntry& a, const ZEntry& b) { return a.x == b.x && a.y == b.y; }
};

/// Characters of Z_H(xdot) split by sector.
struct SectorCharacters {
  std::vector<unsigned> ys;           // representative y of each sector-1 character
  std::vector<ClassFunction> one;     // xi -> (-1)^<psi(xi), y>
  std::vector<ClassFunction> chi;     // rho (x = 0) or rho+, rho- (x != 0)
};

/// Central extension of E = F_2^{2n} by {1, c}. Element index eps * 4^n + x;
/// bit j-1 of x is the coordinate x_j.
class Heisenberg {
 public:
  /// Throws SizeLimit unless 1 <= n <= 3.
  explicit Heisenberg(int n);

  int n() const { return n_; }
  unsigned space_size() const { return 1u << (2 * n_); }
  const groups::FiniteGroup& group() const { return datum_.group(); }
  const pairing::FinitePairingDatum& datum() const { return datum_; }

  Elem lift(unsigned x, unsigned eps = 0) const { return eps * space_size() + x; }
  Elem c() const { return lift(0, 1); }
  unsigned psi(Elem e) const { return e % space_size(); }

  /// Symplectic form sum_k x_{2k-1} y_{2k} + x_{2k} y_{2k-1}.
  int form(unsigned x, unsigned y) const;
  /// Bilinear refinement with B(x,y) + B(y,x) = <x,y>.
  int bilinear(unsigned x, unsigned y) const;
  /// q(x) = B(x,x); Arf invariant 1.
  int q(unsigned x) const { return bilinear(x, x); }

  /// Canonical class of y in E/F_2 x.
  unsigned ybar(unsigned x, unsigned y) const { return x == 0 ? y : std::min(y, y ^ x); }
  /// Ordered by x, then ybar.
  std::vector<ZEntry> z_index() const;

  SectorCharacters sector_characters(unsigned x) const;

  /// (lift(x, eps), ybar) with its sector-1 character.
  FinitePoint point(const ZEntry& z, unsigned eps = 0) const;
  /// The chi-sector points at lift(x, eps). Both lifts share the same
  /// characters; rho is the one taking +2^{n-1} w_x at lift(x, 0).
  std::vector<FinitePoint> chi_points(unsigned x, unsigned eps = 0) const;

  std::string vec_name(unsigned x) const;
  std::string label(const ZEntry& z) const;

 private:
  int n_;
  pairing::FinitePairingDatum datum_;
};

/// 2^{2n} + (2^{2n}-1) 2^{2n-1}
std::size_t z_count(int n);

Scalar closed_form(const Heisenberg& h, const ZEntry& a, const ZEntry& b);

/// M by brute force through pair_finite, rows and columns in z_index order.
GramSpace matrix_M(const Heisenberg& h, unsigned lift_eps = 0);
ScalarMat closed_form_matrix(const Heisenberg& h);
/// delta_{x,x'} (2 - delta_{x,0}) (2 delta_{y,y'} - |E_x|^-1)
ScalarMat m2_block_formula(const Heisenberg& h);

struct SpectrumReport {
  std::string factorization;  // char_poly(M^2) over {1,2,4}
  bool min_poly_124 = false;
  bool min_poly_12 = false;
  Scalar det;
};

SpectrumReport spectrum_report(const GramSpace& m);

struct RuleCheck {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches
};

/// Mixed values ((xdot, ybar), (xdot', rho)) against the closed forms.
/// `required` covers x' = 0 or q(x') = 1; `other` the q(x') = 0 points.
struct SectorRules {
  RuleCheck mixed_required, mixed_other;
  RuleCheck chi_required, chi_other;
};

SectorRules check_sector_rules(const Heisenberg& h);

}  // namespace almost_fourier::heis
