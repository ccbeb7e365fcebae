#include "stacky/stackypolytope.hpp"

#include "stacky/exactlinalg.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stacky {

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational factorial(std::size_t d) {
  Rational f = 1;
  for (std::size_t i = 2; i <= d; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

class Triangulator {
 public:
  explicit Triangulator(const Polytope& p) : p_(p), active_(p.vertices.size(), std::vector<bool>(p.normals.size())) {
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      for (auto f : p.vertex_facets[v]) active_[v][f] = true;
  }

  std::vector<std::vector<std::size_t>> run() {
    std::vector<bool> face(p_.normals.size(), false);
    std::vector<std::size_t> apexes;
    recurse(face, p_.dimension(), apexes);
    return std::move(simplices_);
  }

 private:
  // The face is cut out by the facets flagged in `face`; `apexes` holds the
  // cone points chosen on the way down.
  void recurse(std::vector<bool>& face, std::size_t dim, std::vector<std::size_t>& apexes) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < p_.vertices.size(); ++v) {
      bool on_face = true;
      for (std::size_t f = 0; f < face.size() && on_face; ++f)
        if (face[f] && !active_[v][f]) on_face = false;
      if (on_face) verts.push_back(v);
    }
    const std::size_t apex = verts.front();
    if (dim == 0) {
      auto simplex = apexes;
      simplex.push_back(apex);
      simplices_.push_back(std::move(simplex));
      return;
    }
    for (std::size_t f = 0; f < face.size(); ++f) {
      if (face[f] || active_[apex][f]) continue;
      bool meets = std::any_of(verts.begin(), verts.end(), [&](std::size_t v) { return active_[v][f]; });
      if (!meets) continue;
      face[f] = true;
      apexes.push_back(apex);
      recurse(face, dim - 1, apexes);
      apexes.pop_back();
      face[f] = false;
    }
  }

  const Polytope& p_;
  std::vector<std::vector<bool>> active_;
  std::vector<std::vector<std::size_t>> simplices_;
};

GroupHom polytope_beta(const FgAbGroup& group, const IntMatrix& beta, std::size_t offset_count) {
  std::vector<Violation> violations;
  if (beta.rows() != group.dim())
    violations.push_back({"beta-shape", {}, std::nullopt, "beta columns must have " + std::to_string(group.dim()) +
                                                              " coordinates"});
  else if (offset_count != beta.cols())
    violations.push_back({"offsets", {}, std::nullopt, "expected one offset per column of beta"});
  if (!violations.empty()) throw ValidationError(violations);

  GroupHom b(FgAbGroup::free(beta.cols()), group, beta);
  for (std::size_t j = 0; j < beta.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < group.rank(); ++i) zero = zero && beta(i, j) == 0;
    if (zero)
      violations.push_back({"ray-undefined", {}, j, "beta(e_" + std::to_string(j + 1) + ") has zero free part"});
  }
  if (cokernel(b).group.rank() != 0)
    violations.push_back({"cokernel-infinite", {}, std::nullopt, "the cokernel of beta must be finite"});
  if (!violations.empty()) throw ValidationError(violations);
  return b;
}

std::vector<RatVector> free_normals(const GroupHom& beta) {
  std::vector<RatVector> out;
  const std::size_t d = beta.target().rank();
  for (std::size_t j = 0; j < beta.matrix().cols(); ++j) {
    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = beta.matrix()(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

Integer torsion_order(const FgAbGroup& g) { return FgAbGroup(0, g.torsion()).order().value(); }

}  // namespace

std::string PolytopeError::kind_name() const {
  switch (kind_) {
    case Kind::unbounded: return "unbounded";
    case Kind::empty: return "empty";
    case Kind::not_simple: return "not-simple";
    case Kind::redundant_facet: return "redundant-facet";
    case Kind::not_full_dimensional: return "not-full-dimensional";
    case Kind::bad_input: return "bad-input";
  }
  return "unknown";
}

Polytope enumerate_vertices(std::vector<RatVector> normals, std::vector<Rational> offsets) {
  using K = PolytopeError::Kind;
  const std::size_t n = normals.size();
  if (n == 0 || offsets.size() != n) throw PolytopeError(K::bad_input, "need one offset per facet normal");
  const std::size_t d = normals.front().size();
  if (d == 0) throw PolytopeError(K::bad_input, "polytope must have positive dimension");
  for (const auto& v : normals)
    if (v.size() != d) throw PolytopeError(K::bad_input, "facet normals have inconsistent dimensions");

  // Bounded iff the normals positively span R^d: full rank and some strictly
  // positive combination vanishes. Substituting l = 1 + m turns the strict
  // condition into m >= 0 with sum m_i v_i = -sum v_i.
  RatMatrix nm(d, n);
  RatVector neg_sum(d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      nm(i, j) = normals[j][i];
      neg_sum[i] -= normals[j][i];
    }
  if (n < d + 1 || rank(nm) < d || !nonnegative_solution(nm, neg_sum))
    throw PolytopeError(K::unbounded, "facet normals do not positively span R^" + std::to_string(d));

  std::map<RatVector, std::size_t> seen;
  Polytope p{normals, offsets, {}, {}};
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      RatMatrix a(d, d);
      RatVector rhs(d);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) a(r, c) = normals[pick[r]][c];
        rhs[r] = -offsets[pick[r]];
      }
      if (determinant(a) == 0) return;
      RatVector x = *solve_rational(a, rhs);
      if (seen.count(x)) return;
      std::vector<std::size_t> active;
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = dot(x, normals[k]);
        if (s < -offsets[k]) return;
        if (s == -offsets[k]) active.push_back(k);
      }
      seen.emplace(x, p.vertices.size());
      p.vertices.push_back(std::move(x));
      p.vertex_facets.push_back(std::move(active));
      return;
    }
    for (std::size_t k = start; k < n; ++k) {
      pick[depth] = k;
      choose(k + 1, depth + 1);
    }
  };
  choose(0, 0);

  if (p.vertices.empty()) throw PolytopeError(K::empty, "the inequalities have no common solution");
  RatMatrix diffs(d, p.vertices.size() - 1);
  for (std::size_t v = 1; v < p.vertices.size(); ++v)
    for (std::size_t i = 0; i < d; ++i) diffs(i, v - 1) = p.vertices[v][i] - p.vertices[0][i];
  if (rank(diffs) < d) throw PolytopeError(K::not_full_dimensional, "polytope is not full-dimensional");
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    if (p.vertex_facets[v].size() > d)
      throw PolytopeError(K::not_simple, "vertex " + std::to_string(v) + " lies on " +
                                             std::to_string(p.vertex_facets[v].size()) + " facets");

  std::vector<bool> used(n, false);
  for (const auto& fs : p.vertex_facets)
    for (auto f : fs) used[f] = true;
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) throw PolytopeError(K::redundant_facet, "inequality " + std::to_string(k + 1) + " defines no facet");
  return p;
}

Rational lattice_volume(const Polytope& p) {
  const std::size_t d = p.dimension();
  Rational total = 0;
  for (const auto& simplex : Triangulator(p).run()) {
    RatMatrix edges(d, d);
    for (std::size_t j = 1; j <= d; ++j)
      for (std::size_t i = 0; i < d; ++i) edges(i, j - 1) = p.vertices[simplex[j]][i] - p.vertices[simplex[0]][i];
    total += abs(determinant(edges));
  }
  return total / factorial(d);
}

StackyPolytope::StackyPolytope(FgAbGroup group, IntMatrix beta, std::vector<Rational> offsets)
    : beta_(polytope_beta(group, beta, offsets.size())),
      offsets_(std::move(offsets)),
      polytope_(enumerate_vertices(free_normals(beta_), offsets_)) {}

StackyPolytope from_labelled(const LabelledPolytope& lp) {
  const std::size_t n = lp.normals.size();
  if (n == 0 || lp.labels.size() != n || lp.offsets.size() != n)
    throw std::invalid_argument("from_labelled: need matching normals, labels and offsets");
  const std::size_t d = lp.normals.front().size();
  IntMatrix beta(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.normals[j].size() != d) throw std::invalid_argument("from_labelled: normals have inconsistent dimensions");
    Integer g = 0;
    for (const auto& x : lp.normals[j]) g = gcd(g, x);
    if (g != 1) throw std::invalid_argument("from_labelled: normal " + std::to_string(j + 1) + " is not primitive");
    if (lp.labels[j] < 1) throw std::invalid_argument("from_labelled: labels must be positive");
    for (std::size_t i = 0; i < d; ++i) beta(i, j) = lp.labels[j] * lp.normals[j][i];
  }
  return StackyPolytope(FgAbGroup::free(d), beta, lp.offsets);
}

StackyFan normal_fan(const StackyPolytope& sp) {
  return StackyFan(StackyFanData{sp.group(), sp.beta().matrix(), sp.polytope().vertex_facets});
}

CoverPolytope cover_polytope(const StackyPolytope& sp) {
  const StackyFan fan = normal_fan(sp);
  const StackyFan cover_fan = universal_cover(fan);
  StackyPolytope cover(cover_fan.group(), cover_fan.beta().matrix(), sp.offsets());

  const Rational volume = lattice_volume(sp.polytope());
  const Rational cover_volume = lattice_volume(cover.polytope());
  const Rational ratio = cover_volume / volume;

  const std::size_t d = fan.dimension();
  const Integer index = from_presentation(d, sp.beta().matrix().row_block(0, d)).group.order().value();
  const Rational stack_ratio = ratio * torsion_order(sp.group()) / torsion_order(cover.group());
  const Integer coker_order = fundamental_group(fan).order().value();

  if (ratio != Rational(index))
    throw ConsistencyError("cover polytope volume ratio " + to_string(ratio) + " differs from lattice index " +
                           to_string(index));
  if (stack_ratio != Rational(coker_order))
    throw ConsistencyError("stack volume ratio " + to_string(stack_ratio) + " differs from |coker beta| = " +
                           to_string(coker_order));
  return CoverPolytope{std::move(cover), volume, cover_volume, ratio, index, stack_ratio, coker_order};
}

Integer symplectic_volume_ratio(const StackyPolytope& sp) { return cover_polytope(sp).coker_order; }

}  // namespace stacky
