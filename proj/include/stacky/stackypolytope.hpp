#pragma once

#include "stacky/stackyfan.hpp"

#include <stdexcept>
#include <vector>

namespace stacky {

class PolytopeError : public std::runtime_error {
 public:
  enum class Kind { unbounded, empty, not_simple, redundant_facet, not_full_dimensional, bad_input };

  PolytopeError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }
  /// "unbounded", "not-simple", ...
  std::string kind_name() const;

 private:
  Kind kind_;
};

/// Simple polytope {x : <x, normal_i> >= -offset_i} with its vertices and,
/// per vertex, the sorted indices of the facets through it.
struct Polytope {
  std::vector<RatVector> normals;
  std::vector<Rational> offsets;
  std::vector<RatVector> vertices;
  std::vector<std::vector<std::size_t>> vertex_facets;

  std::size_t dimension() const { return normals.empty() ? 0 : normals.front().size(); }
};

/// Brute-force vertex enumeration over d-subsets of facets. Throws
/// PolytopeError unless the polytope is bounded, nonempty, full-dimensional,
/// simple and every inequality defines a facet.
Polytope enumerate_vertices(std::vector<RatVector> normals, std::vector<Rational> offsets);

/// Euclidean volume in the given coordinates, by pulling triangulation:
/// cone a vertex over a triangulation of every facet missing it.
Rational lattice_volume(const Polytope& p);

/// Labelled polytope: primitive inward normals with positive labels.
struct LabelledPolytope {
  std::vector<IntVector> normals;
  std::vector<Integer> labels;
  std::vector<Rational> offsets;
};

/// (N, Delta, beta) with Delta = {x : <x, beta(e_i) (x) 1> >= -c_i}.
class StackyPolytope {
 public:
  /// Throws ValidationError if coker(beta) is infinite or beta is malformed,
  /// PolytopeError if the derived polytope is not a valid simple polytope.
  StackyPolytope(FgAbGroup group, IntMatrix beta, std::vector<Rational> offsets);

  const FgAbGroup& group() const { return beta_.target(); }
  const GroupHom& beta() const { return beta_; }
  const std::vector<Rational>& offsets() const { return offsets_; }
  const Polytope& polytope() const { return polytope_; }

 private:
  GroupHom beta_;
  std::vector<Rational> offsets_;
  Polytope polytope_;
};

/// N = Z^d and beta(e_i) = m_i * nu_i. Throws std::invalid_argument on a
/// non-primitive normal or a label < 1.
StackyPolytope from_labelled(const LabelledPolytope& lp);

/// Maximal cones are the facet sets of the vertices.
StackyFan normal_fan(const StackyPolytope& sp);

struct CoverPolytope {
  StackyPolytope cover;       // (N', Delta', beta') with the same offsets
  Rational volume;            // vol(Delta)
  Rational cover_volume;      // vol(Delta')
  Rational volume_ratio;      // vol(Delta') / vol(Delta)
  Integer lattice_index;      // index of the free image of N' in N / Tor(N)
  Rational stack_volume_ratio;  // volume_ratio * |Tor N| / |Tor N'|
  Integer coker_order;        // |coker beta| = |N / N'|
};

/// Builds Delta' from the universal cover and checks that the polytope volume
/// ratio equals the lattice index and the stack volume ratio equals
/// |coker beta|. Throws ConsistencyError otherwise.
CoverPolytope cover_polytope(const StackyPolytope& sp);

/// |coker beta|, cross-checked against the volume ratio of the cover.
Integer symplectic_volume_ratio(const StackyPolytope& sp);

}  // namespace stacky
