#pragma once

#include <string>
#include <vector>

#include "almost_fourier/groups/group.hpp"

namespace almost_fourier::groups {

/// Scalar-valued function on a group, constant on conjugacy classes.
class ClassFunction {
 public:
  /// values[k] is the value at g.elements()[k]. Throws InvalidCharacter if not
  /// a class function, DimensionMismatch on length mismatch.
  ClassFunction(FiniteGroup g, std::vector<Scalar> values, std::string label = {});

  const FiniteGroup& group() const { return g_; }
  const Scalar& operator()(Elem e) const { return values_[g_.position(e)]; }
  const std::vector<Scalar>& values() const { return values_; }
  Scalar degree() const { return (*this)(g_.identity()); }
  const std::string& label() const { return label_; }

 private:
  FiniteGroup g_;
  std::vector<Scalar> values_;
  std::string label_;
};

/// (1/|G|) sum a(g) conj(b(g))
Scalar inner_product(const ClassFunction& a, const ClassFunction& b);

struct CharacterCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Orthonormality of all pairs plus sum of squared degrees equal to |G|.
CharacterCheck validate_characters(const FiniteGroup& g, const std::vector<ClassFunction>& chars);

/// All homomorphisms to 12th roots of unity of an abelian group, trivial
/// character first. Throws CharacterTableMissing if some element order does
/// not divide 12, InvalidDatum if g is not abelian.
std::vector<ClassFunction> abelian_characters(const FiniteGroup& g);

/// Irreducible characters of g: enumerated when g is abelian, otherwise the
/// table supplied with the ambient group (only when g is the whole group).
/// Throws CharacterTableMissing otherwise.
std::vector<ClassFunction> irreducible_characters(const FiniteGroup& g);

}  // namespace almost_fourier::groups
