#pragma once

#include "stacky/bigint.hpp"
#include "stacky/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stacky {

/// Order of a group: a positive integer or infinite.
class GroupOrder {
 public:
  static GroupOrder infinite() { return GroupOrder(); }
  explicit GroupOrder(Integer value) : value_(std::move(value)) {}

  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Integer& value() const;
  std::string to_string() const;

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  GroupOrder() = default;
  std::optional<Integer> value_;
};

/// Z^rank + Z/q_1 + ... + Z/q_r with q_i >= 2 and q_i | q_{i+1}.
/// Elements are coordinate vectors of length rank + r, free coordinates
/// first; torsion coordinate i is read modulo q_i.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Throws std::invalid_argument unless the torsion list is canonical.
  FgAbGroup(std::size_t rank, std::vector<Integer> torsion);

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t dim() const { return rank_ + torsion_.size(); }

  bool is_trivial() const { return dim() == 0; }
  bool is_free() const { return torsion_.empty(); }
  GroupOrder order() const;

  /// dim x r matrix whose columns q_i * e_{rank+i} generate the relations.
  IntMatrix relation_matrix() const;

  /// Torsion coordinates reduced into [0, q_i).
  IntVector reduce(IntVector coords) const;
  IntMatrix reduce_columns(IntMatrix m) const;
  bool is_zero(const IntVector& coords) const;

  /// "Z^2 + Z/2 + Z/4"; the trivial group prints as "0".
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

class GroupElement {
 public:
  GroupElement(FgAbGroup parent, IntVector coords);

  const FgAbGroup& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const { return parent_.is_zero(coords_); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FgAbGroup parent_;
  IntVector coords_;
};

/// Homomorphism given by a target.dim() x source.dim() matrix acting on
/// coordinates. Well-definedness is checked on construction.
class GroupHom {
 public:
  /// Throws std::invalid_argument if the matrix has the wrong shape or some
  /// source relation q_i * g_i does not map into the target's relations.
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& coords) const;
  GroupElement operator()(const GroupElement& x) const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// Subgroup generated by the columns of a (possibly redundant) matrix.
class Subgroup {
 public:
  Subgroup(FgAbGroup parent, IntMatrix generators);

  static Subgroup trivial(const FgAbGroup& g);
  static Subgroup whole(const FgAbGroup& g);

  const FgAbGroup& parent() const { return parent_; }
  const IntMatrix& generators() const { return generators_; }

  bool contains(const IntVector& coords) const;
  bool contains(const Subgroup& other) const;

  /// Canonical (Hermite) basis of generators + parent relations in Z^dim.
  IntMatrix lifted_lattice() const;

 private:
  FgAbGroup parent_;
  IntMatrix generators_;
};

/// A canonical quotient: the group, the projection onto it, and lifts of
/// its canonical generators back into the source coordinates.
struct Quotient {
  FgAbGroup group;
  GroupHom projection;
  IntMatrix section;
};

/// A canonical group together with an injective map into a parent.
struct Embedding {
  FgAbGroup group;
  GroupHom inclusion;
};

/// Z^generators / im(relations) in invariant-factor form. The projection's
/// source is the free group of rank `generators`.
Quotient from_presentation(std::size_t generators, const IntMatrix& relations);

Quotient cokernel(const GroupHom& f);
Embedding torsion_subgroup(const FgAbGroup& g);
Quotient quotient_by(const Subgroup& h);
/// The abstract canonical group isomorphic to h, with its inclusion.
Embedding structure(const Subgroup& h);

bool subgroup_equal(const Subgroup& a, const Subgroup& b);

/// g after f. Throws std::invalid_argument unless f.target() == g.source().
GroupHom compose(const GroupHom& g, const GroupHom& f);
/// f restricted to h, with source the canonical group isomorphic to h.
GroupHom restrict_to(const GroupHom& f, const Subgroup& h);
Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);

GroupOrder order(const FgAbGroup& g);
GroupOrder order(const Subgroup& h);

}  // namespace stacky
