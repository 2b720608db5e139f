#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "almost_fourier/exact/scalar.hpp"

namespace almost_fourier::groups {

using exact::Scalar;

/// Element of a finite group: an index into the ambient multiplication table.
/// Subgroups share the ambient table, so elements compare across them.
using Elem = std::uint32_t;

/// Ambient multiplication table plus optional supplied character values.
struct Table {
  std::size_t order = 0;
  std::vector<Elem> mul;  // row-major, mul[a * order + b] = a*b
  std::vector<Elem> inv;
  Elem identity = 0;
  std::vector<std::string> names;
  /// Irreducible characters of the whole ambient group as value lists over
  /// ambient indices; empty when no table was supplied.
  std::vector<std::vector<Scalar>> characters;
};

constexpr std::size_t kMaxOrder = 4096;

class FiniteGroup {
 public:
  /// Builds and validates a group from a row-major multiplication table.
  /// Throws NotAGroup (axiom failure) or SizeLimit (order > 4096).
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> mul,
                                std::vector<std::string> names = {},
                                std::vector<std::vector<Scalar>> characters = {});

  std::size_t order() const { return members_.size(); }
  const std::vector<Elem>& elements() const { return members_; }
  bool contains(Elem e) const { return e < pos_.size() && pos_[e] >= 0; }
  /// Position of e within elements(); throws ElementNotInGroup.
  std::size_t position(Elem e) const;

  Elem identity() const { return table_->identity; }
  Elem mul(Elem a, Elem b) const { return table_->mul[static_cast<std::size_t>(a) * table_->order + b]; }
  Elem inv(Elem a) const { return table_->inv[a]; }
  /// z x z^-1
  Elem conj(Elem z, Elem x) const { return mul(mul(z, x), inv(z)); }
  Elem power(Elem a, long k) const;
  std::size_t elem_order(Elem a) const;
  const std::string& name(Elem e) const { return table_->names[e]; }
  /// Looks an element up by name; throws ElementNotInGroup.
  Elem by_name(const std::string& name) const;

  bool is_abelian() const;
  bool is_whole() const { return members_.size() == table_->order; }
  bool is_central(Elem x) const;
  std::vector<Elem> center() const;

  /// Subgroup of all elements commuting with x. Throws ElementNotInGroup.
  FiniteGroup centralizer(Elem x) const;
  /// Subgroup generated by gens (all must lie in this group).
  FiniteGroup generated(const std::vector<Elem>& gens) const;

  /// Classes ordered by their minimal element index; elements sorted.
  std::vector<std::vector<Elem>> conjugacy_classes() const;

  /// Same ambient table and same member set.
  bool same_as(const FiniteGroup& o) const { return table_ == o.table_ && members_ == o.members_; }
  const std::shared_ptr<const Table>& table() const { return table_; }

 private:
  FiniteGroup(std::shared_ptr<const Table> table, std::vector<Elem> members);

  std::shared_ptr<const Table> table_;
  std::vector<Elem> members_;
  std::vector<int> pos_;
};

/// Central subgroup of a parent group.
class CentralSubgroup {
 public:
  /// Throws NotCentral if some member does not commute with the parent,
  /// NotAGroup if members are not closed.
  CentralSubgroup(FiniteGroup parent, const std::vector<Elem>& members);

  static CentralSubgroup trivial(const FiniteGroup& parent) { return {parent, {parent.identity()}}; }

  const FiniteGroup& parent() const { return parent_; }
  const FiniteGroup& group() const { return sub_; }
  std::size_t order() const { return sub_.order(); }
  const std::vector<Elem>& elements() const { return sub_.elements(); }
  bool contains(Elem e) const { return sub_.contains(e); }

 private:
  FiniteGroup parent_;
  FiniteGroup sub_;
};

/// |g| / |n|; n must be a subgroup of g central in g, else NotCentral.
std::size_t quotient_order(const FiniteGroup& g, const CentralSubgroup& n);

// Constructors. Element names follow the constructions in group.cpp.
FiniteGroup trivial_group();
FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n (dihedral(4) is the order-8 group D4).
FiniteGroup dihedral(std::size_t n);
FiniteGroup quaternion();
/// Symmetric group on n <= 4 letters.
FiniteGroup symmetric(std::size_t n);
FiniteGroup klein();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace almost_fourier::groups
