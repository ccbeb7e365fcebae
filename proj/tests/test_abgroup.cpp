#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "stacky/abgroup.hpp"
#include "stacky/exactlinalg.hpp"

#include <map>
#include <set>

using namespace stacky;
using namespace stacky::testing;

namespace {

// Z^k / L by brute force, when L has full rank: L contains D Z^k for
// D = |det| of any nonsingular k x k block of the relations, so we can
// work inside (Z/D)^k and close the relation columns under addition.
struct CosetOracle {
  Integer order;
  Integer exponent;
};

std::vector<long> mod_vec(const IntVector& v, long D) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(mod_floor(x, D).get_si());
  return out;
}

CosetOracle coset_oracle(const IntMatrix& rel) {
  const std::size_t k = rel.rows();
  long D = 0;
  for_each_subset(rel.cols(), k, [&](const std::vector<std::size_t>& cols) {
    if (D == 0) D = Integer(abs(laplace_det(rel.select_columns(cols)))).get_si();
  });
  REQUIRE(D > 0);
  std::set<std::vector<long>> h{std::vector<long>(k, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(k, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier)
      for (std::size_t j = 0; j < rel.cols(); ++j) {
        std::vector<long> y(k);
        for (std::size_t i = 0; i < k; ++i) y[i] = (x[i] + mod_floor(rel(i, j), D).get_si()) % D;
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  Integer total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= D;
  // Exponent: least e with e * e_i in L for every i.
  long e = 1;
  for (;; ++e) {
    bool all = true;
    for (std::size_t i = 0; i < k && all; ++i) {
      IntVector v(k, 0);
      v[i] = e;
      all = h.count(mod_vec(v, D)) > 0;
    }
    if (all) break;
  }
  return {total / Integer(static_cast<long>(h.size())), e};
}

}  // namespace

TEST_CASE("canonical groups") {
  CHECK(FgAbGroup(2, {2, 4}).to_string() == "Z^2 + Z/2 + Z/4");
  CHECK(FgAbGroup(0, {}).to_string() == "0");
  CHECK(FgAbGroup(1, {}).to_string() == "Z");
  CHECK_THROWS_AS(FgAbGroup(0, {4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FgAbGroup(0, {1}), std::invalid_argument);
  CHECK(FgAbGroup(0, {2, 6}).order().value() == 12);
  CHECK_FALSE(FgAbGroup(1, {2}).order().is_finite());
}

TEST_CASE("from_presentation agrees with coset enumeration") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + t % 3;
    const IntMatrix rel = random_matrix(rng, k, k + t % 2, 4);
    if (rank(rel) < k) continue;
    const Quotient q = from_presentation(k, rel);
    const CosetOracle oracle = coset_oracle(rel);
    CHECK(q.group.rank() == 0);
    CHECK(q.group.order().value() == oracle.order);
    const Integer expo = q.group.torsion().empty() ? Integer(1) : q.group.torsion().back();
    CHECK(expo == oracle.exponent);
    // The projection kills the relations and the section splits it.
    for (std::size_t j = 0; j < rel.cols(); ++j) CHECK(q.group.is_zero(q.projection.apply(rel.column(j))));
    for (std::size_t j = 0; j < q.section.cols(); ++j) {
      IntVector e(q.group.dim(), 0);
      e[j] = 1;
      CHECK(q.projection.apply(q.section.column(j)) == e);
    }
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("presentations with free part") {
  const Quotient q = from_presentation(3, IntMatrix{{2, 0}, {0, 3}, {0, 0}});
  CHECK(q.group == FgAbGroup(1, {6}));
}

TEST_CASE("homomorphisms must respect torsion") {
  const FgAbGroup z2(0, {2}), z4(0, {4});
  CHECK_NOTHROW(GroupHom(z2, z4, IntMatrix{{2}}));
  CHECK_THROWS_AS(GroupHom(z2, z4, IntMatrix{{1}}), std::invalid_argument);
  CHECK_THROWS_AS(GroupHom(z2, z4, IntMatrix{{1, 0}}), std::invalid_argument);
}

TEST_CASE("kernel and image orders multiply to the source order") {
  std::mt19937 rng(29);
  const std::vector<FgAbGroup> groups{FgAbGroup(0, {2, 4}), FgAbGroup(0, {6}), FgAbGroup(0, {3, 3}),
                                      FgAbGroup(0, {12})};
  for (int t = 0; t < 200; ++t) {
    const FgAbGroup& src = groups[t % groups.size()];
    const FgAbGroup& dst = groups[(t / 4) % groups.size()];
    // Build a well-defined map by scaling columns until relations land in the target's.
    IntMatrix m = random_matrix(rng, dst.dim(), src.dim(), 5);
    const Integer e = dst.torsion().back();
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const Integer s = e / gcd(e, src.torsion()[j]);
      for (std::size_t i = 0; i < dst.dim(); ++i) m(i, j) *= s;
    }
    const GroupHom f(src, dst, m);
    const Integer ker = order(kernel(f)).value(), im = order(image(f)).value();
    CHECK(ker * im == src.order().value());
    // Lagrange.
    CHECK(dst.order().value() % im == 0);
    CHECK(is_injective(f) == (ker == 1));
    CHECK(is_surjective(f) == (im == dst.order().value()));
  }
}

TEST_CASE("subgroup membership and structure") {
  const FgAbGroup g(1, {4});
  const Subgroup h(g, IntMatrix{{1}, {1}});
  CHECK(h.contains(IntVector{4, 0}));
  CHECK(h.contains(IntVector{-2, 2}));
  CHECK_FALSE(h.contains(IntVector{0, 2}));
  CHECK(structure(h).group == FgAbGroup::free(1));
  CHECK(quotient_by(h).group == FgAbGroup(0, {4}));
  CHECK(torsion_subgroup(g).group == FgAbGroup(0, {4}));
  CHECK(subgroup_equal(Subgroup(g, IntMatrix{{2}, {2}}), Subgroup(g, IntMatrix{{-2}, {2}})));
  CHECK(Subgroup::whole(g).contains(h));
  CHECK_FALSE(h.contains(Subgroup::whole(g)));
}

TEST_CASE("cokernel of a map between free groups") {
  const FgAbGroup z2 = FgAbGroup::free(2);
  const GroupHom f(z2, z2, IntMatrix{{2, 0}, {0, 3}});
  CHECK(cokernel(f).group == FgAbGroup(0, {6}));
  const GroupHom g(z2, z2, IntMatrix{{1, 1}, {0, 0}});
  CHECK(cokernel(g).group == FgAbGroup::free(1));
  CHECK(compose(f, f).matrix() == IntMatrix{{4, 0}, {0, 9}});
}
