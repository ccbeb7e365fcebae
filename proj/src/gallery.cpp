#include "stacky/gallery.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stacky {

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

StackyFanDocument fan_document(FgAbGroup group, IntMatrix beta, std::vector<Cone> cones,
                               std::optional<std::vector<Rational>> offsets = std::nullopt) {
  std::sort(cones.begin(), cones.end());
  return StackyFanDocument{std::move(group), std::move(beta), std::move(cones), std::move(offsets)};
}

void require_primitive_positive(const IntVector& a) {
  if (a.empty()) throw std::invalid_argument("a must be nonempty");
  Integer g = 0;
  for (const auto& x : a) {
    if (x < 1) throw std::invalid_argument("entries of a must be >= 1");
    g = gcd(g, x);
  }
  if (g != 1) throw std::invalid_argument("a must be primitive (gcd of entries 1)");
}

void require_positive(const IntVector& m, std::size_t count) {
  if (m.size() != count) throw std::invalid_argument("expected " + std::to_string(count) + " labels");
  for (const auto& x : m)
    if (x < 1) throw std::invalid_argument("labels must be >= 1");
}

bool is_primitive(const IntVector& a) {
  Integer g = 0;
  for (const auto& x : a) g = gcd(g, x);
  return g == 1;
}

// Every vector in {1..max}^len, lexicographically.
void for_each_tuple(std::size_t len, long max, const std::function<void(const IntVector&)>& f) {
  IntVector t(len, 1);
  for (;;) {
    f(t);
    std::size_t i = len;
    while (i > 0 && t[i - 1] == max) t[--i] = 1;
    if (i == 0) return;
    ++t[i - 1];
  }
}

void check_range(long a_max, long m_max) {
  if (a_max < 1 || m_max < 1) throw std::invalid_argument("parameter ranges must be >= 1");
  if (a_max > 50 || m_max > 50) throw std::invalid_argument("parameter ranges above 50 are not supported");
}

SweepRow classify(const IntVector& a, const IntVector& m, const StackyFanDocument& doc) {
  StackyFan sf(StackyFanData{doc.group, doc.beta, *doc.max_cones});
  return SweepRow{a, m, is_global_quotient(sf).holds, fundamental_group(sf).order().value()};
}

}  // namespace

StackyFanDocument sheared_simplex(const IntVector& a, const IntVector& m) {
  require_primitive_positive(a);
  const std::size_t d = a.size();
  require_positive(m, d + 1);
  IntMatrix beta(d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    beta(i, 0) = -m[0] * a[i];
    beta(i, i + 1) = m[i + 1];
  }
  // Complete simplex fan: every d-subset of the d + 1 rays.
  std::vector<Cone> cones;
  for (std::size_t skip = d + 1; skip-- > 0;) {
    Cone c;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  std::vector<Rational> offsets(d + 1, Rational(0));
  offsets[0] = 1;
  return fan_document(FgAbGroup::free(d), beta, cones, offsets);
}

StackyFanDocument trapezoid(const IntVector& a, const IntVector& m) {
  if (a.size() != 2) throw std::invalid_argument("trapezoid: a must have two entries");
  require_primitive_positive(a);
  require_positive(m, 4);
  IntMatrix beta{{-m[0] * a[0], 0, m[2], 0}, {-m[0] * a[1], m[1], 0, -m[3]}};
  // x >= 0, 0 <= y <= 1, a.x <= a_1 + a_2, scaled by the labels.
  Integer slant = a[0] + a[1];
  std::vector<Rational> offsets{Rational(m[0] * slant), Rational(0), Rational(0), Rational(m[3])};
  return fan_document(FgAbGroup::free(2), beta, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, offsets);
}

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = [] {
    std::vector<GalleryEntry> g;
    g.push_back({"p1", "complex projective line CP^1",
                 fan_document(FgAbGroup::free(1), IntMatrix{{1, -1}}, {{0}, {1}}, rationals({1, 1}))});
    g.push_back({"p2", "complex projective plane CP^2 (standard simplex)",
                 fan_document(FgAbGroup::free(2), IntMatrix{{1, 0, -1}, {0, 1, -1}}, {{0, 1}, {1, 2}, {0, 2}},
                              rationals({0, 0, 1}))});
    g.push_back({"p1xp1", "CP^1 x CP^1 (unit square)",
                 fan_document(FgAbGroup::free(2), IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}},
                              {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, rationals({0, 0, 1, 1}))});
    g.push_back({"wps-1-2", "weighted projective line P(1,2)",
                 fan_document(FgAbGroup::free(1), IntMatrix{{1, -2}}, {{0}, {1}}, rationals({0, 2}))});
    g.push_back({"wps-2-2",
                 "P(2,2) presented on N = Z with beta = (2,-2); the cone test reports a global quotient",
                 fan_document(FgAbGroup::free(1), IntMatrix{{2, -2}}, {{0}, {1}}, rationals({0, 2}))});
    g.push_back({"c2", "affine plane C^2 (one maximal cone, not complete)",
                 fan_document(FgAbGroup::free(2), IntMatrix{{1, 0}, {0, 1}}, {{0, 1}})});
    g.push_back({"sheared-a1-2-m112", "labelled sheared simplex, a = (1,2), labels (1,1,2)",
                 sheared_simplex({1, 2}, {1, 1, 2})});
    g.push_back({"trapezoid", "labelled right trapezoid, a = (1,2), labels (1,1,1,1)",
                 trapezoid({1, 2}, {1, 1, 1, 1})});
    g.push_back({"z2-example", "N = Z + Z/2, beta(a,b) = (2a-2b, a+b mod 2): global quotient of CP^1 by Z/4",
                 fan_document(FgAbGroup(1, {2}), IntMatrix{{2, -2}, {1, 1}}, {{0}, {1}}, rationals({1, 1}))});
    g.push_back({"z4-example", "N = Z + Z/4, beta(a,b) = (a-2b, a+2b mod 4): not a global quotient",
                 fan_document(FgAbGroup(1, {4}), IntMatrix{{1, -2}, {1, 2}}, {{0}, {1}}, rationals({1, 1}))});
    g.push_back({"surjective-torsion", "N = Z + Z/2 with beta surjective: torsion in im(beta), not a global quotient",
                 fan_document(FgAbGroup(1, {2}), IntMatrix{{1, -1}, {0, 1}}, {{0}, {1}}, rationals({1, 1}))});
    return g;
  }();
  return entries;
}

const GalleryEntry* find_gallery_entry(std::string_view name) {
  for (const auto& e : gallery())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<SweepRow> sweep_sheared_simplex(std::size_t dim, long a_max, long m_max) {
  check_range(a_max, m_max);
  if (dim < 1 || dim > 4) throw std::invalid_argument("sheared-simplex dimension must be between 1 and 4");
  std::vector<SweepRow> rows;
  for_each_tuple(dim, a_max, [&](const IntVector& a) {
    if (!is_primitive(a)) return;
    for_each_tuple(dim + 1, m_max, [&](const IntVector& m) { rows.push_back(classify(a, m, sheared_simplex(a, m))); });
  });
  return rows;
}

std::vector<SweepRow> sweep_trapezoid(long a_max, long m_max) {
  check_range(a_max, m_max);
  std::vector<SweepRow> rows;
  for_each_tuple(2, a_max, [&](const IntVector& a) {
    if (!is_primitive(a)) return;
    for_each_tuple(4, m_max, [&](const IntVector& m) { rows.push_back(classify(a, m, trapezoid(a, m))); });
  });
  return rows;
}

}  // namespace stacky
