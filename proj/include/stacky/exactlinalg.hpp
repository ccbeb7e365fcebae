#pragma once

#include "stacky/bigint.hpp"
#include "stacky/matrix.hpp"

#include <optional>
#include <vector>

namespace stacky {

/// U * A * V = S with U, V unimodular and S diagonal. The diagonal entries
/// are nonnegative, each divides the next, and zeros come last.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Diagonal of S, length min(rows, cols).
  IntVector diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Column-style Hermite form: H = A * U with U unimodular. Pivot rows strictly
/// increase from left to right, pivots are positive, entries to the left of a
/// pivot in its row lie in [0, pivot), and zero columns are moved last.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;

  /// The leading `rank` columns of H: the canonical basis of the column lattice.
  IntMatrix basis() const { return H.column_block(0, rank); }
};

HermiteDecomposition hermite_normal_form(const IntMatrix& a);

/// Canonical basis (Hermite form) of the lattice spanned by the columns of a.
IntMatrix lattice_basis(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0}, as columns in Hermite form.
IntMatrix integer_kernel(const IntMatrix& a);

/// Some integer x with A x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Inverse of a unimodular matrix, or nullopt if a is not unimodular.
std::optional<IntMatrix> integer_inverse(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);

/// Fraction-free (Bareiss) determinant; a must be square.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

/// Some rational x with A x = b (free variables set to zero), or nullopt.
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);

/// Some x >= 0 with A x = b, or nullopt. Decided exactly by enumerating the
/// basic solutions (column subsets with independent columns), so it is meant
/// for the small systems that arise from cones and polytope facets.
std::optional<RatVector> nonnegative_solution(const RatMatrix& a, const RatVector& b);

}  // namespace stacky
