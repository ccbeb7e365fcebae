#include "stacky/exactlinalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace stacky {

namespace {

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <class T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += c * row[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += c * m(source, j);
}

// col[target] += c * col[source]
void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += c * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// (col_a, col_b) <- (s col_a + t col_b, u col_a + v col_b)
void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = m(i, a);
    Integer y = m(i, b);
    m(i, a) = s * x + t * y;
    m(i, b) = u * x + v * y;
  }
}

bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntVector SmithDecomposition::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& S = out.S;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot on the smallest nonzero entry of the trailing block; each pass
      // either finishes the pivot or strictly shrinks it.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          Integer x = abs(S(i, j));
          if (pi == m || x < best) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return out;  // trailing block is zero

      swap_rows(S, t, pi);
      swap_rows(U, t, pi);
      swap_cols(S, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        add_row_multiple(S, i, t, -q);
        add_row_multiple(U, i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        add_col_multiple(S, j, t, -q);
        add_col_multiple(V, j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull an offending row into row t.
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < m && chain_ok; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(S(t, t), S(i, j))) {
            add_row_multiple(S, t, i, 1);
            add_row_multiple(U, t, i, 1);
            chain_ok = false;
            break;
          }
      if (!chain_ok) continue;

      if (S(t, t) < 0) {
        negate_row(S, t);
        negate_row(U, t);
      }
      break;
    }
  }
  return out;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteDecomposition out{a, IntMatrix::identity(n), 0};
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;

  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (H(i, j) == 0) continue;
      if (H(i, c) == 0) {
        swap_cols(H, c, j);
        swap_cols(U, c, j);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(i, c).get_mpz_t(), H(i, j).get_mpz_t());
      Integer ag = H(i, c) / g;
      Integer bg = H(i, j) / g;
      Integer nbg = -bg;
      combine_cols(H, c, j, s, t, nbg, ag);
      combine_cols(U, c, j, s, t, nbg, ag);
    }
    if (H(i, c) == 0) continue;
    if (H(i, c) < 0) {
      negate_col(H, c);
      negate_col(U, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q = floor_div(H(i, j), H(i, c));
      if (q == 0) continue;
      Integer nq = -q;
      add_col_multiple(H, j, c, nq);
      add_col_multiple(U, j, c, nq);
    }
    ++c;
  }
  out.rank = c;
  return out;
}

IntMatrix lattice_basis(const IntMatrix& a) { return hermite_normal_form(a).basis(); }

IntMatrix integer_kernel(const IntMatrix& a) {
  HermiteDecomposition h = hermite_normal_form(a);
  IntMatrix gens = h.U.column_block(h.rank, a.cols() - h.rank);
  return lattice_basis(gens);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  SmithDecomposition sd = smith_normal_form(a);
  IntVector c = sd.U * b;
  const std::size_t r = sd.rank();
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!divides(sd.S(i, i), c[i])) return std::nullopt;
      y[i] = c[i] / sd.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return sd.V * y;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  SmithDecomposition sd = smith_normal_form(a);
  for (const auto& d : sd.diagonal())
    if (d != 1) return std::nullopt;
  // U A V = I  =>  A^{-1} = V U
  return sd.V * sd.U;
}

std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return row_reduce(m, m.cols()).size();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(m, k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
  const std::size_t n = a.cols();
  RatMatrix m = hstack(a, RatMatrix::column_vector(b));
  std::vector<std::size_t> pivots = row_reduce(m, n);
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (m(i, n) != 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m(k, n);
  return x;
}

std::optional<RatVector> nonnegative_solution(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("nonnegative_solution: dimension mismatch");
  const std::size_t n = a.cols();
  if (std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; })) return RatVector(n);
  if (n > 24) throw std::invalid_argument("nonnegative_solution: too many columns for exhaustive search");
  const std::size_t r = rank(a);
  // A feasible system has a basic solution whose support columns are
  // independent, so trying every support of size <= rank is exhaustive.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > r) continue;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::uint32_t{1} << j)) support.push_back(j);
    auto z = solve_rational(a.select_columns(support), b);
    if (!z) continue;
    if (std::any_of(z->begin(), z->end(), [](const Rational& x) { return x < 0; })) continue;
    RatVector x(n);
    for (std::size_t k = 0; k < support.size(); ++k) x[support[k]] = (*z)[k];
    return x;
  }
  return std::nullopt;
}

}  // namespace stacky
