#pragma once

#include "stacky/stackyfan.hpp"
#include "stacky/stackypolytope.hpp"

#include <optional>
#include <vector>

namespace stacky {

/// Input document: a stacky fan, or a stacky polytope when offsets are
/// present. In polytope mode the cones may be omitted and are then taken
/// from the normal fan.
struct StackyFanDocument {
  FgAbGroup group;
  IntMatrix beta;
  std::optional<std::vector<Cone>> max_cones;
  std::optional<std::vector<Rational>> offsets;

  bool is_polytope() const { return offsets.has_value(); }

  friend bool operator==(const StackyFanDocument&, const StackyFanDocument&) = default;
};

struct ConeRecord {
  Cone cone;
  FgAbGroup isotropy;
  bool injective = true;
  Integer kernel_order;

  friend bool operator==(const ConeRecord&, const ConeRecord&) = default;
};

struct PolytopeSummary {
  std::vector<RatVector> vertices;
  Rational volume;
  Rational cover_volume;
  Rational volume_ratio;
  Integer lattice_index;
  Rational stack_volume_ratio;
  Integer coker_order;

  friend bool operator==(const PolytopeSummary&, const PolytopeSummary&) = default;
};

struct AnalysisReport {
  StackyFanData input;
  FgAbGroup fundamental_group;
  FgAbGroup dual_group;
  bool dual_rank_matches = true;
  bool tor_duality = true;
  FgAbGroup global_stabilizer;
  std::vector<ConeRecord> cones;  // whole face closure, lexicographic
  std::vector<Cone> minimal_nonfaces;
  bool complete = false;
  Decision smooth;
  Decision global_quotient;
  StackyFanData universal_cover;
  std::optional<PolytopeSummary> polytope;

  /// A smooth toric DM stack is a manifold.
  bool manifold() const { return smooth.holds; }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Throws ConsistencyError if Tor-duality, the rank of DG(beta) or the
/// inertia criterion disagree with the direct computations.
AnalysisReport analysis_report(const StackyFan& sf);
AnalysisReport analysis_report(const StackyPolytope& sp);

/// Empty result means the document is valid. Polytope problems are reported
/// with the PolytopeError kind name.
std::vector<Violation> validate_document(const StackyFanDocument& doc);

/// Throws ValidationError on an invalid document.
AnalysisReport analyze(const StackyFanDocument& doc);

/// The universal cover as a document; offsets carry over unchanged.
StackyFanDocument cover_document(const StackyFanDocument& doc);

/// Throws ValidationError.
StackyFan stacky_fan_of(const StackyFanDocument& doc);
/// Throws ValidationError or PolytopeError; doc must carry offsets.
StackyPolytope stacky_polytope_of(const StackyFanDocument& doc);

}  // namespace stacky
