#include "stacky/fan.hpp"

#include "stacky/exactlinalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace stacky {

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const Cone&)>& f) {
  if (k > n) return;
  Cone s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

bool is_subset(const Cone& a, const Cone& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Cone difference(const Cone& a, const Cone& b) {
  Cone out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// True if the geometric intersection of the two simplicial cones is larger
// than the cone on their common rays: some x = sum l_i u_i (i in a) =
// sum m_j u_j (j in b) with l, m >= 0 puts positive weight outside b.
bool overlaps_improperly(const Fan& fan, const Cone& a, const Cone& b) {
  const Cone only_a = difference(a, b);
  if (only_a.empty()) return false;
  const std::size_t d = fan.dimension();
  RatMatrix sys(d + 1, a.size() + b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) sys(i, j) = fan.rays()[a[j]][i];
    if (std::binary_search(only_a.begin(), only_a.end(), a[j])) sys(d, j) = 1;
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) sys(i, a.size() + j) = -Rational(fan.rays()[b[j]][i]);
  RatVector rhs(d + 1);
  rhs[d] = 1;
  return nonnegative_solution(sys, rhs).has_value();
}

}  // namespace

std::string format_cone(const Cone& cone, bool one_based) {
  std::string out = "{";
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cone[i] + (one_based ? 1 : 0));
  }
  return out + "}";
}

Fan::Fan(std::size_t dimension, std::vector<IntVector> rays, std::vector<Cone> max_cones)
    : dimension_(dimension), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  for (const auto& r : rays_)
    if (r.size() != dimension_) throw std::invalid_argument("Fan: ray vector has wrong dimension");
  for (auto& c : max_cones_) std::sort(c.begin(), c.end());
  std::sort(max_cones_.begin(), max_cones_.end());
}

IntMatrix Fan::ray_matrix(const Cone& cone) const {
  IntMatrix m(dimension_, cone.size());
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (std::size_t i = 0; i < dimension_; ++i) m(i, j) = rays_.at(cone[j])[i];
  return m;
}

std::set<Cone> face_closure(const Fan& fan) {
  std::set<Cone> faces;
  faces.insert(Cone{});
  for (const auto& c : fan.max_cones()) {
    for (std::size_t k = 1; k <= c.size(); ++k)
      for_each_subset(c.size(), k, [&](const Cone& pick) {
        Cone face;
        for (auto i : pick) face.push_back(c[i]);
        faces.insert(face);
      });
  }
  return faces;
}

std::vector<Violation> validate_fan(const Fan& fan, bool require_span) {
  std::vector<Violation> out;
  const std::size_t n = fan.ray_count();
  const auto& cones = fan.max_cones();

  for (std::size_t i = 0; i < n; ++i) {
    if (std::all_of(fan.rays()[i].begin(), fan.rays()[i].end(), [](const Integer& x) { return x == 0; }))
      out.push_back({"zero-ray", {}, i, "ray " + std::to_string(i + 1) + " is the zero vector"});
  }
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const Cone& c = cones[k];
    if (std::any_of(c.begin(), c.end(), [n](std::size_t i) { return i >= n; }))
      out.push_back({"index-out-of-range", {c}, std::nullopt, "cone refers to a ray index >= " + std::to_string(n)});
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      out.push_back({"duplicate-index", {c}, std::nullopt, "cone lists a ray twice"});
    if (k > 0 && cones[k - 1] == c) out.push_back({"duplicate-cone", {c}, std::nullopt, "maximal cone listed twice"});
  }
  if (!out.empty()) return out;

  std::vector<bool> covered(n, false);
  for (const auto& c : cones)
    for (auto i : c) covered[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!covered[i]) out.push_back({"uncovered-ray", {}, i, "ray " + std::to_string(i + 1) + " lies in no cone"});

  std::vector<bool> simplicial(cones.size(), true);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    if (rank(fan.ray_matrix(cones[k])) < cones[k].size()) {
      simplicial[k] = false;
      out.push_back({"simpliciality", {cones[k]}, std::nullopt,
                     "rays of cone " + format_cone(cones[k], true) + " are linearly dependent"});
    }
  }

  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = 0; b < cones.size(); ++b) {
      if (a == b) continue;
      if (is_subset(cones[a], cones[b])) {
        out.push_back({"not-maximal", {cones[a], cones[b]}, std::nullopt,
                       "cone " + format_cone(cones[a], true) + " is contained in " + format_cone(cones[b], true)});
      } else if (a < b && simplicial[a] && simplicial[b] && overlaps_improperly(fan, cones[a], cones[b])) {
        out.push_back({"compatibility", {cones[a], cones[b]}, std::nullopt,
                       "cones " + format_cone(cones[a], true) + " and " + format_cone(cones[b], true) +
                           " do not meet along a common face"});
      }
    }

  if (require_span) {
    IntMatrix all(fan.dimension(), n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < fan.dimension(); ++i) all(i, j) = fan.rays()[j][i];
    if (rank(all) < fan.dimension())
      out.push_back({"span", {}, std::nullopt, "rays do not span R^" + std::to_string(fan.dimension())});
  }
  return out;
}

std::vector<Cone> minimal_nonfaces(const Fan& fan) {
  const std::set<Cone> faces = face_closure(fan);
  std::size_t largest = 0;
  for (const auto& c : fan.max_cones()) largest = std::max(largest, c.size());

  std::vector<Cone> out;
  const std::size_t n = fan.ray_count();
  for (std::size_t k = 1; k <= std::min(n, largest + 1); ++k) {
    for_each_subset(n, k, [&](const Cone& s) {
      if (faces.count(s)) return;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Cone sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!faces.count(sub)) return;
      }
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ray_membership(const Fan& fan, const RatVector& v, const Cone& cone) {
  if (v.size() != fan.dimension()) throw std::invalid_argument("ray_membership: vector has wrong dimension");
  return nonnegative_solution(to_rational(fan.ray_matrix(cone)), v).has_value();
}

bool is_complete(const Fan& fan) {
  const std::size_t d = fan.dimension();
  std::map<Cone, int> walls;
  for (const auto& c : fan.max_cones()) {
    if (c.size() != d) return false;
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      Cone w = c;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(drop));
      ++walls[w];
    }
  }
  if (fan.max_cones().empty()) return d == 0;
  return std::all_of(walls.begin(), walls.end(), [](const auto& kv) { return kv.second == 2; });
}

}  // namespace stacky
