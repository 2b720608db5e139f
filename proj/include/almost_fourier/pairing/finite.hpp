#pragma once

#include <string>
#include <vector>

#include "almost_fourier/groups/character.hpp"
#include "almost_fourier/pairing/gram.hpp"

namespace almost_fourier::pairing {

using groups::ClassFunction;
using groups::Elem;
using groups::FiniteGroup;

/// (x, sigma) with sigma an irreducible character of Z_H(x).
struct FinitePoint {
  std::string label;
  Elem x;
  ClassFunction sigma;
};

class FinitePairingDatum {
 public:
  FinitePairingDatum(FiniteGroup h, groups::CentralSubgroup lambda);
  /// Lambda = {1}.
  explicit FinitePairingDatum(FiniteGroup h);

  const FiniteGroup& group() const { return h_; }
  const groups::CentralSubgroup& lambda() const { return lambda_; }
  /// Characters of Lambda, trivial first.
  const std::vector<ClassFunction>& lambda_characters() const { return lambda_chars_; }

  /// Index into lambda_characters() of the character through which Lambda
  /// acts on sigma. Throws InvalidCharacter if sigma is not on Z_H(x) or
  /// Lambda does not act by scalars.
  std::size_t sector_of(const FinitePoint& p) const;

 private:
  FiniteGroup h_;
  groups::CentralSubgroup lambda_;
  std::vector<ClassFunction> lambda_chars_;
};

/// |L|^-1 |Z(x)/L|^-1 |Z(y)/L|^-1 sum_{z in A_{x,y}} conj(tau(z x z^-1)) sigma(z^-1 y z)
Scalar pair_finite(const FinitePairingDatum& d, const FinitePoint& p, const FinitePoint& q);

/// f.(x, sigma) = (f x f^-1, sigma o Ad(f^-1)).
FinitePoint conjugate_point(const FinitePairingDatum& d, Elem f, const FinitePoint& p);
/// (zeta x, sigma) for central zeta in Lambda.
FinitePoint translate_point(const FinitePairingDatum& d, Elem zeta, const FinitePoint& p);

/// Class representatives (minimal index) times irreducible characters of the
/// centralizer, restricted to one sector if given.
std::vector<FinitePoint> finite_points(const FinitePairingDatum& d, std::optional<std::size_t> sector = {});

/// Matrix of pair_finite between two point lists. When rows and cols are the
/// same list the result is a Hermitian GramSpace.
GramSpace finite_matrix(const FinitePairingDatum& d, const std::vector<FinitePoint>& rows,
                        const std::vector<FinitePoint>& cols);
GramSpace finite_matrix(const FinitePairingDatum& d, const std::vector<FinitePoint>& points);

/// Nonabelian Fourier matrix of g (Lambda trivial). Throws
/// CharacterTableMissing when some centralizer has no table.
GramSpace classical_fourier(const FiniteGroup& g);

}  // namespace almost_fourier::pairing
