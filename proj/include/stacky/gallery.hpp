#pragma once

#include "stacky/analysis.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace stacky {

struct GalleryEntry {
  std::string name;
  std::string description;
  StackyFanDocument document;
};

/// Built-in examples, in a fixed order.
const std::vector<GalleryEntry>& gallery();
/// nullptr when no entry has that name.
const GalleryEntry* find_gallery_entry(std::string_view name);

/// Labelled sheared simplex: rays -a, e_1, ..., e_d with beta(f_0) = -m_0 a
/// and beta(f_j) = m_j e_j; offsets (1, 0, ..., 0). `a` must be primitive
/// with positive entries and `m` must have d + 1 positive entries.
StackyFanDocument sheared_simplex(const IntVector& a, const IntVector& m);

/// Labelled right trapezoid: rays -a, e_2, e_1, -e_2 with labels m_1..m_4
/// and maximal cones {1,2}, {2,3}, {3,4}, {4,1}.
StackyFanDocument trapezoid(const IntVector& a, const IntVector& m);

struct SweepRow {
  IntVector a;
  IntVector m;
  bool global_quotient = false;
  Integer pi1_order;
};

/// All primitive a in {1..a_max}^dim and m in {1..m_max}^(dim+1).
std::vector<SweepRow> sweep_sheared_simplex(std::size_t dim, long a_max, long m_max);
/// All primitive a in {1..a_max}^2 and m in {1..m_max}^4.
std::vector<SweepRow> sweep_trapezoid(long a_max, long m_max);

}  // namespace stacky
