#pragma once

#include "stacky/bigint.hpp"
#include "stacky/matrix.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stacky {

/// A cone is a sorted set of 0-based ray indices.
using Cone = std::vector<std::size_t>;

std::string format_cone(const Cone& cone, bool one_based);

/// A single problem found while validating input data.
struct Violation {
  std::string kind;
  std::vector<Cone> cones;
  std::optional<std::size_t> ray;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Simplicial fan described combinatorially; geometry enters only through
/// the ray vectors.
class Fan {
 public:
  Fan() = default;
  /// Indices inside each cone are sorted and the cone list is sorted
  /// lexicographically; nothing else is checked here. Throws
  /// std::invalid_argument if a ray does not have `dimension` coordinates.
  Fan(std::size_t dimension, std::vector<IntVector> rays, std::vector<Cone> max_cones);

  std::size_t dimension() const { return dimension_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  /// Rays of the cone as the columns of a d x |cone| matrix.
  IntMatrix ray_matrix(const Cone& cone) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
};

/// All faces of all maximal cones, including the empty cone, in
/// lexicographic order.
std::set<Cone> face_closure(const Fan& fan);

/// Empty result means valid. With require_span the rays must also span R^d.
std::vector<Violation> validate_fan(const Fan& fan, bool require_span = false);

/// Minimal index sets contained in no cone.
std::vector<Cone> minimal_nonfaces(const Fan& fan);

/// Whether v lies in the (simplicial) cone spanned by the rays of `cone`.
bool ray_membership(const Fan& fan, const RatVector& v, const Cone& cone);

/// Every cone of codimension one lies in exactly two maximal cones and every
/// maximal cone is full-dimensional. Assumes a valid fan.
bool is_complete(const Fan& fan);

}  // namespace stacky
