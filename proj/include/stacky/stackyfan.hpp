#pragma once

#include "stacky/abgroup.hpp"
#include "stacky/fan.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace stacky {

/// Raw stacky fan data as it appears on the wire: N, the columns beta(e_i)
/// in N's coordinates, and the maximal cones.
struct StackyFanData {
  FgAbGroup group;
  IntMatrix beta;
  std::vector<Cone> max_cones;

  friend bool operator==(const StackyFanData&, const StackyFanData&) = default;
};

/// Thrown when input data fails validation; carries every violation found.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Thrown when two independent computations that must agree do not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks beta's shape and well-definedness, nonzero free parts, the span
/// condition and fan validity. Empty result means valid.
std::vector<Violation> validate_stacky_fan(const StackyFanData& data);

/// A validated stacky fan (N, Sigma, beta). The fan's rays are the free
/// parts of the beta(e_i).
class StackyFan {
 public:
  /// Throws ValidationError.
  explicit StackyFan(StackyFanData data);

  const FgAbGroup& group() const { return beta_.target(); }
  const GroupHom& beta() const { return beta_; }
  const Fan& fan() const { return fan_; }
  std::size_t ray_count() const { return fan_.ray_count(); }
  std::size_t dimension() const { return fan_.dimension(); }

  StackyFanData data() const { return {group(), beta_.matrix(), fan_.max_cones()}; }

 private:
  GroupHom beta_;
  Fan fan_;
};

struct DualGroupData {
  std::size_t torsion_rank = 0;  // r
  IntMatrix lift;                // B, (d + r) x n
  IntMatrix resolution;          // Q, (d + r) x r
  FgAbGroup group;               // DG(beta)
  GroupHom beta_dual;            // Z^n -> DG(beta)
  bool rank_matches = false;     // rank(DG) == n - d
};

struct InertiaRecord {
  Cone cone;
  FgAbGroup isotropy;
  GroupHom omega;  // isotropy -> coker beta
  bool injective = false;
  Integer kernel_order;
};

/// Outcome of a yes/no test with the first failing cone (and ray) when false.
struct Decision {
  bool holds = true;
  std::optional<Cone> cone;
  std::optional<std::size_t> ray;

  friend bool operator==(const Decision&, const Decision&) = default;
};

Subgroup image_subgroup(const StackyFan& sf);
Subgroup n_sigma(const StackyFan& sf, const Cone& cone);
FgAbGroup fundamental_group(const StackyFan& sf);
DualGroupData dual_group(const StackyFan& sf);
FgAbGroup isotropy(const StackyFan& sf, const Cone& cone);
InertiaRecord inertia(const StackyFan& sf, const Cone& cone);

/// N = N_sigma for every maximal cone.
Decision is_smooth(const StackyFan& sf);
/// im(beta) = N_sigma for every maximal cone; the witness is the first
/// (cone, ray) with beta(e_ray) outside N_sigma.
Decision is_global_quotient(const StackyFan& sf);

/// (N', Sigma', beta') with N' = im(beta). The free coordinates of N' use the
/// Hermite basis of the image of beta's free part, so beta' has the same
/// rays rescaled into N'. Torsion coordinates come from the canonical form
/// of Z^n / ker(beta).
StackyFan universal_cover(const StackyFan& sf);

}  // namespace stacky
