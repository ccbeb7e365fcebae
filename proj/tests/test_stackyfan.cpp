#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace stacky;
using namespace stacky::testing;

namespace {

StackyFan gallery_fan(const char* name) { return stacky_fan_of(find_gallery_entry(name)->document); }

bool has_kind(const std::vector<Violation>& vs, const std::string& k) {
  for (const auto& v : vs)
    if (v.kind == k) return true;
  return false;
}

// |Tor(Z^m / L)| is the product of the nonzero invariant factors of L,
// i.e. the gcd of the rank-sized minors.
Integer torsion_order_oracle(const IntMatrix& lattice) {
  const std::size_t r = rank(lattice);
  return r == 0 ? Integer(1) : minor_gcd(lattice, r);
}

}  // namespace

TEST_CASE("validation of stacky fan data") {
  const FgAbGroup z = FgAbGroup::free(1);
  CHECK(has_kind(validate_stacky_fan({z, IntMatrix{{1, -1}, {0, 0}}, {{0}, {1}}}), "beta-shape"));
  const FgAbGroup zt(1, {2});
  CHECK(has_kind(validate_stacky_fan({zt, IntMatrix{{1, 0}, {0, 1}}, {{0}, {1}}}), "ray-undefined"));
  CHECK(has_kind(validate_stacky_fan({FgAbGroup::free(2), IntMatrix{{1, 2}, {0, 0}}, {{0, 1}}}), "simpliciality"));
  CHECK(has_kind(validate_stacky_fan({FgAbGroup::free(2), IntMatrix{{1, -1}, {0, 0}}, {{0}, {1}}}), "span"));
  CHECK_THROWS_AS(StackyFan({z, IntMatrix{{1, 1}}, {{0}, {1}}}), ValidationError);
}

TEST_CASE("P1 and P2 are smooth, simply connected manifolds") {
  for (const char* name : {"p1", "p2", "p1xp1"}) {
    const StackyFan sf = gallery_fan(name);
    CHECK(fundamental_group(sf).is_trivial());
    CHECK(is_smooth(sf).holds);
    CHECK(is_global_quotient(sf).holds);
    CHECK(universal_cover(sf).data() == sf.data());
  }
}

TEST_CASE("weighted projective line P(1,2)") {
  const StackyFan sf = gallery_fan("wps-1-2");
  const Decision smooth = is_smooth(sf);
  CHECK_FALSE(smooth.holds);
  CHECK(smooth.cone == Cone{1});
  CHECK(isotropy(sf, {1}) == FgAbGroup(0, {2}));
  CHECK(fundamental_group(sf).is_trivial());
  CHECK_FALSE(is_global_quotient(sf).holds);
  const InertiaRecord rec = inertia(sf, {1});
  CHECK_FALSE(rec.injective);
  CHECK(rec.kernel_order == 2);
}

TEST_CASE("P(2,2) on N = Z is a global quotient of P1 by Z/2") {
  const StackyFan sf = gallery_fan("wps-2-2");
  CHECK(fundamental_group(sf) == FgAbGroup(0, {2}));
  CHECK(is_global_quotient(sf).holds);
  CHECK(universal_cover(sf).beta().matrix() == IntMatrix{{1, -1}});
}

TEST_CASE("z2 example: quotient of P1 by Z/4") {
  const StackyFan sf = gallery_fan("z2-example");
  CHECK(fundamental_group(sf) == FgAbGroup(0, {4}));
  CHECK(isotropy(sf, {}) == FgAbGroup(0, {2}));
  CHECK(isotropy(sf, {0}) == FgAbGroup(0, {4}));
  CHECK(is_global_quotient(sf).holds);
  for (const auto& cone : face_closure(sf.fan())) CHECK(inertia(sf, cone).injective);
  const StackyFan cover = universal_cover(sf);
  CHECK(cover.group() == FgAbGroup::free(1));
  CHECK(cover.beta().matrix() == IntMatrix{{1, -1}});
}

TEST_CASE("z4 example is not a global quotient") {
  const StackyFan sf = gallery_fan("z4-example");
  CHECK(fundamental_group(sf) == FgAbGroup(0, {4}));
  const Decision d = is_global_quotient(sf);
  CHECK_FALSE(d.holds);
  CHECK(d.cone == Cone{1});
  CHECK(d.ray == 0u);
  CHECK(isotropy(sf, {1}) == FgAbGroup(0, {2, 4}));
  CHECK(inertia(sf, {1}).kernel_order == 2);
}

TEST_CASE("surjective beta with torsion") {
  const StackyFan sf = gallery_fan("surjective-torsion");
  CHECK(fundamental_group(sf).is_trivial());
  CHECK_FALSE(is_global_quotient(sf).holds);
  CHECK(isotropy(sf, {}) == FgAbGroup(0, {2}));
}

TEST_CASE("sheared simplex global quotient has CP^2 as universal cover") {
  const StackyFan sf = stacky_fan_of(sheared_simplex({1, 2}, {1, 1, 2}));
  CHECK(fundamental_group(sf) == FgAbGroup(0, {2}));
  const StackyFan cover = universal_cover(sf);
  CHECK(cover.group() == FgAbGroup::free(2));
  CHECK(cover.beta().matrix() == IntMatrix{{-1, 1, 0}, {-1, 0, 1}});
}

TEST_CASE("isotropy orders match the minor oracle") {
  for (const auto& d : fan_corpus(30)) {
    const StackyFan sf(d);
    for (const auto& cone : face_closure(sf.fan())) {
      const IntMatrix lattice = hstack(d.beta.select_columns(cone), d.group.relation_matrix());
      CHECK(isotropy(sf, cone).order().value() == torsion_order_oracle(lattice));
    }
    bool smooth_oracle = true;
    for (const auto& sigma : d.max_cones)
      smooth_oracle = smooth_oracle && cokernel_order_oracle(hstack(d.beta.select_columns(sigma),
                                                                     d.group.relation_matrix())) == 1;
    CHECK(is_smooth(sf).holds == smooth_oracle);
  }
}

TEST_CASE("dual group: torsion matches coker beta, rank n - d") {
  for (const auto& d : fan_corpus(30, 7)) {
    const StackyFan sf(d);
    const DualGroupData dg = dual_group(sf);
    CHECK(dg.rank_matches);
    CHECK(dg.group.rank() == sf.ray_count() - sf.dimension());
    CHECK(dg.group.torsion() == fundamental_group(sf).torsion());
    CHECK(dg.torsion_rank == d.group.torsion().size());
  }
}

TEST_CASE("universal cover keeps the combinatorics and the ray directions") {
  for (const auto& d : fan_corpus(30, 11)) {
    const StackyFan sf(d);
    const StackyFan cover = universal_cover(sf);
    CHECK(cover.fan().max_cones() == sf.fan().max_cones());
    CHECK(cover.dimension() == sf.dimension());
    CHECK(fundamental_group(cover).is_trivial());
    // Index of the image: |N / im beta| = |coker beta|.
    CHECK(order(quotient_by(image_subgroup(sf)).group).value() == fundamental_group(sf).order().value());
    // Free parts of beta' are the free parts of beta in a coarser basis: a
    // 2x2 (or dxd) minor relation det(beta_sigma) = det(beta'_sigma) * index.
    for (const auto& sigma : sf.fan().max_cones()) {
      const IntMatrix b = sf.beta().matrix().row_block(0, sf.dimension()).select_columns(sigma);
      const IntMatrix bc = cover.beta().matrix().row_block(0, sf.dimension()).select_columns(sigma);
      const Integer db = laplace_det(b), dc = laplace_det(bc);
      REQUIRE(dc != 0);
      CHECK(db % dc == 0);
      CHECK(sgn(db) * sgn(dc) > 0);
    }
  }
}
