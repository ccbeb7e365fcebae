#pragma once

// Shared helpers for the test binaries: random inputs and brute-force
// oracles that do not go through the library's normal-form code.

#include "stacky/analysis.hpp"
#include "stacky/exactlinalg.hpp"
#include "stacky/gallery.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace stacky::testing {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Cofactor expansion; only for tiny matrices.
inline Integer laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    Integer term = a(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k x k minors (0 if they all vanish).
inline Integer minor_gcd(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
      g = gcd(g, laplace_det(a.select_rows(rows).select_columns(cols)));
    });
  });
  return g;
}

// Order of Z^m / (column lattice of a) when that lattice has full rank:
// the gcd of the maximal minors. Zero means infinite.
inline Integer cokernel_order_oracle(const IntMatrix& a) { return minor_gcd(a, a.rows()); }

// [beta | relations of N]: its column lattice is im(beta) + relations.
inline IntMatrix presentation_of_image(const StackyFanData& d) {
  return hstack(d.beta, d.group.relation_matrix());
}

// Complete simplicial fan: a unimodular image of the standard simplex fan,
// refined by random star subdivisions, with random labels and torsion parts.
inline StackyFanData random_stacky_fan(std::mt19937& rng) {
  static const std::vector<std::vector<long>> torsion_choices{{},  {2}, {3}, {4}, {5}, {6},
                                                              {7}, {8}, {2, 2}, {2, 4}};
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  const std::size_t d = static_cast<std::size_t>(pick(1, 3));
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(d, -1));

  // A few elementary column operations keep the fan unimodular.
  for (int step = 0; step < 3 && d > 1; ++step) {
    std::size_t i = static_cast<std::size_t>(pick(0, static_cast<long>(d) - 1));
    std::size_t j = static_cast<std::size_t>(pick(0, static_cast<long>(d) - 2));
    if (j >= i) ++j;
    long c = pick(-1, 1);
    for (auto& r : rays) r[i] += c * r[j];
  }

  std::vector<Cone> cones;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }

  const std::size_t n = static_cast<std::size_t>(pick(static_cast<long>(d) + 1, 6));
  while (d > 1 && rays.size() < n) {
    const Cone sigma = cones[static_cast<std::size_t>(pick(0, static_cast<long>(cones.size()) - 1))];
    Cone tau;
    while (tau.size() < 2) {
      tau.clear();
      for (auto i : sigma)
        if (pick(0, 1)) tau.push_back(i);
    }
    IntVector r(d, 0);
    for (auto i : tau)
      for (std::size_t k = 0; k < d; ++k) r[k] += rays[i][k];
    Integer g = 0;
    for (const auto& x : r) g = gcd(g, x);
    for (auto& x : r) x /= g;
    const std::size_t new_ray = rays.size();
    rays.push_back(r);

    std::vector<Cone> next;
    for (const auto& c : cones) {
      if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) {
        next.push_back(c);
        continue;
      }
      for (auto drop : tau) {
        Cone s;
        for (auto i : c)
          if (i != drop) s.push_back(i);
        s.push_back(new_ray);
        std::sort(s.begin(), s.end());
        next.push_back(s);
      }
    }
    cones = std::move(next);
  }

  const auto& tor = torsion_choices[static_cast<std::size_t>(pick(0, static_cast<long>(torsion_choices.size()) - 1))];
  std::vector<Integer> torsion(tor.begin(), tor.end());
  FgAbGroup group(d, torsion);
  IntMatrix beta(group.dim(), rays.size());
  for (std::size_t j = 0; j < rays.size(); ++j) {
    const long label = pick(1, 3);
    for (std::size_t k = 0; k < d; ++k) beta(k, j) = label * rays[j][k];
    for (std::size_t t = 0; t < torsion.size(); ++t) beta(d + t, j) = pick(0, tor[t] - 1);
  }
  std::sort(cones.begin(), cones.end());
  return StackyFanData{group, beta, cones};
}

// Gallery fans plus `count` random ones drawn with a fixed seed.
inline std::vector<StackyFanData> fan_corpus(std::size_t count, unsigned seed = 20261016) {
  std::vector<StackyFanData> out;
  for (const auto& e : gallery()) out.push_back(stacky_fan_of(e.document).data());
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_stacky_fan(rng));
  return out;
}

// Closed forms for the two labelled families.
inline bool sheared_simplex_predicate(const IntVector& a, const IntVector& m) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (m[j + 1] != m[0] * a[j]) return false;
  return true;
}

inline bool trapezoid_predicate(const IntVector& a, const IntVector& m) {
  return m[0] * a[0] == m[2] && m[1] == m[3] && mpz_divisible_p(Integer(m[0] * a[1]).get_mpz_t(), m[1].get_mpz_t());
}

}  // namespace stacky::testing
