#include "stacky/stackyfan.hpp"

#include "stacky/exactlinalg.hpp"

#include <algorithm>

namespace stacky {

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "invalid stacky fan:";
  for (const auto& v : violations) msg += " [" + v.kind + "] " + v.message + ";";
  return msg;
}

Fan fan_of(const StackyFanData& data) {
  const std::size_t d = data.group.rank();
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < data.beta.cols(); ++j) {
    IntVector c = data.beta.column(j);
    rays.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Fan(d, std::move(rays), data.max_cones);
}

GroupHom checked_beta(const StackyFanData& data) {
  auto violations = validate_stacky_fan(data);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return GroupHom(FgAbGroup::free(data.beta.cols()), data.group, data.beta);
}

void check_cone(const StackyFan& sf, const Cone& cone) {
  for (auto i : cone)
    if (i >= sf.ray_count()) throw std::invalid_argument("cone " + format_cone(cone, false) + " is out of range");
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate_stacky_fan(const StackyFanData& data) {
  if (data.beta.rows() != data.group.dim() && data.beta.cols() > 0) {
    return {{"beta-shape", {}, std::nullopt,
             "beta columns have " + std::to_string(data.beta.rows()) + " coordinates, N needs " +
                 std::to_string(data.group.dim())}};
  }
  // Z^n is free, so any matrix of the right shape defines a homomorphism.
  std::vector<Violation> out = validate_fan(fan_of(data), /*require_span=*/true);
  for (auto& v : out) {
    if (v.kind == "zero-ray") {
      v.kind = "ray-undefined";
      v.message = "beta(e_" + std::to_string(*v.ray + 1) + ") has zero free part, so it spans no ray";
    }
  }
  return out;
}

StackyFan::StackyFan(StackyFanData data) : beta_(checked_beta(data)), fan_(fan_of(data)) {}

Subgroup image_subgroup(const StackyFan& sf) { return Subgroup(sf.group(), sf.beta().matrix()); }

Subgroup n_sigma(const StackyFan& sf, const Cone& cone) {
  check_cone(sf, cone);
  return Subgroup(sf.group(), sf.beta().matrix().select_columns(cone));
}

FgAbGroup fundamental_group(const StackyFan& sf) { return cokernel(sf.beta()).group; }

DualGroupData dual_group(const StackyFan& sf) {
  const std::size_t n = sf.ray_count();
  const IntMatrix& lift = sf.beta().matrix();
  IntMatrix resolution = sf.group().relation_matrix();
  Quotient q = from_presentation(n + resolution.cols(), hstack(lift, resolution).transpose());
  GroupHom beta_dual(FgAbGroup::free(n), q.group, q.projection.matrix().column_block(0, n));
  const bool rank_ok = q.group.rank() + sf.dimension() == n;
  return DualGroupData{resolution.cols(), lift, resolution, q.group, beta_dual, rank_ok};
}

FgAbGroup isotropy(const StackyFan& sf, const Cone& cone) {
  return torsion_subgroup(quotient_by(n_sigma(sf, cone)).group).group;
}

InertiaRecord inertia(const StackyFan& sf, const Cone& cone) {
  Quotient by_cone = quotient_by(n_sigma(sf, cone));
  Embedding tors = torsion_subgroup(by_cone.group);
  Quotient coker = cokernel(sf.beta());
  // N / N_sigma -> N / im(beta), induced by the identity of N.
  GroupHom induced(by_cone.group, coker.group, coker.projection.matrix() * by_cone.section);
  GroupHom omega = compose(induced, tors.inclusion);

  const Integer iso_order = tors.group.order().value();
  const Integer image_order = order(image(omega)).value();
  const bool injective = is_injective(omega);
  return InertiaRecord{cone, tors.group, omega, injective, iso_order / image_order};
}

Decision is_smooth(const StackyFan& sf) {
  const Subgroup whole = Subgroup::whole(sf.group());
  for (const auto& cone : sf.fan().max_cones())
    if (!n_sigma(sf, cone).contains(whole)) return Decision{false, cone, std::nullopt};
  return Decision{};
}

Decision is_global_quotient(const StackyFan& sf) {
  const IntMatrix& beta = sf.beta().matrix();
  for (const auto& cone : sf.fan().max_cones()) {
    const Subgroup ns = n_sigma(sf, cone);
    for (std::size_t j = 0; j < sf.ray_count(); ++j)
      if (!ns.contains(beta.column(j))) return Decision{false, cone, j};
  }
  return Decision{};
}

StackyFan universal_cover(const StackyFan& sf) {
  const std::size_t n = sf.ray_count();
  const std::size_t d = sf.dimension();
  const IntMatrix& beta = sf.beta().matrix();

  // N' = im(beta) = Z^n / ker(beta). The kernel basis is put in Hermite form
  // first so that equal lattices always give the same canonical form.
  IntMatrix ker = lattice_basis(integer_kernel(hstack(beta, sf.group().relation_matrix())).row_block(0, n));
  Quotient image = from_presentation(n, ker);
  if (image.group.rank() != d) throw ConsistencyError("universal_cover: image of beta has the wrong rank");

  // Free coordinates: express the free parts of beta in the Hermite basis of
  // the lattice they generate.
  IntMatrix free_part = beta.row_block(0, d);
  IntMatrix basis = lattice_basis(free_part);
  IntMatrix free_coords(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve_integer(basis, free_part.column(j));
    if (!x) throw ConsistencyError("universal_cover: ray outside its own lattice");
    free_coords.set_column(j, *x);
  }

  const std::size_t r = image.group.torsion().size();
  IntMatrix cover_beta = vstack(free_coords, image.projection.matrix().row_block(d, r));
  return StackyFan(StackyFanData{image.group, cover_beta, sf.fan().max_cones()});
}

}  // namespace stacky
