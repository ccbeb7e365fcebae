#include "stacky/analysis.hpp"

#include <algorithm>

namespace stacky {

AnalysisReport analysis_report(const StackyFan& sf) {
  AnalysisReport r;
  r.input = sf.data();
  r.fundamental_group = fundamental_group(sf);

  const DualGroupData dg = dual_group(sf);
  r.dual_group = dg.group;
  r.dual_rank_matches = dg.rank_matches;
  r.tor_duality = r.fundamental_group.rank() == 0 && dg.group.torsion() == r.fundamental_group.torsion();
  if (!r.dual_rank_matches) throw ConsistencyError("rank of DG(beta) differs from n - d");
  if (!r.tor_duality)
    throw ConsistencyError("Tor(DG(beta)) = " + dg.group.to_string() + " does not match coker beta = " +
                           r.fundamental_group.to_string());

  r.global_stabilizer = isotropy(sf, Cone{});
  bool all_injective = true;
  for (const auto& cone : face_closure(sf.fan())) {
    InertiaRecord rec = inertia(sf, cone);
    all_injective = all_injective && rec.injective;
    r.cones.push_back(ConeRecord{rec.cone, rec.isotropy, rec.injective, rec.kernel_order});
  }
  r.minimal_nonfaces = minimal_nonfaces(sf.fan());
  r.complete = is_complete(sf.fan());
  r.smooth = is_smooth(sf);
  r.global_quotient = is_global_quotient(sf);
  if (r.global_quotient.holds != all_injective)
    throw ConsistencyError("inertia homomorphisms disagree with the maximal-cone global quotient test");
  r.universal_cover = universal_cover(sf).data();
  return r;
}

AnalysisReport analysis_report(const StackyPolytope& sp) {
  AnalysisReport r = analysis_report(normal_fan(sp));
  const CoverPolytope cp = cover_polytope(sp);
  r.polytope = PolytopeSummary{sp.polytope().vertices, cp.volume,         cp.cover_volume, cp.volume_ratio,
                               cp.lattice_index,       cp.stack_volume_ratio, cp.coker_order};
  return r;
}

StackyFan stacky_fan_of(const StackyFanDocument& doc) {
  if (doc.is_polytope()) return normal_fan(stacky_polytope_of(doc));
  return StackyFan(StackyFanData{doc.group, doc.beta, doc.max_cones.value_or(std::vector<Cone>{})});
}

StackyPolytope stacky_polytope_of(const StackyFanDocument& doc) {
  StackyPolytope sp(doc.group, doc.beta, doc.offsets.value());
  if (doc.max_cones) {
    std::vector<Cone> given = *doc.max_cones;
    for (auto& c : given) std::sort(c.begin(), c.end());
    std::sort(given.begin(), given.end());
    std::vector<Cone> derived = sp.polytope().vertex_facets;
    std::sort(derived.begin(), derived.end());
    if (given != derived)
      throw ValidationError({{"cones-mismatch", given, std::nullopt,
                              "max_cones do not match the normal fan of the polytope"}});
  }
  return sp;
}

std::vector<Violation> validate_document(const StackyFanDocument& doc) {
  try {
    if (doc.is_polytope()) {
      StackyPolytope sp = stacky_polytope_of(doc);
      return validate_stacky_fan(StackyFanData{sp.group(), sp.beta().matrix(), sp.polytope().vertex_facets});
    }
    return validate_stacky_fan(StackyFanData{doc.group, doc.beta, doc.max_cones.value_or(std::vector<Cone>{})});
  } catch (const ValidationError& e) {
    return e.violations();
  } catch (const PolytopeError& e) {
    return {{e.kind_name(), {}, std::nullopt, e.what()}};
  }
}

AnalysisReport analyze(const StackyFanDocument& doc) {
  auto violations = validate_document(doc);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  if (doc.is_polytope()) return analysis_report(stacky_polytope_of(doc));
  return analysis_report(stacky_fan_of(doc));
}

StackyFanDocument cover_document(const StackyFanDocument& doc) {
  auto violations = validate_document(doc);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  const StackyFan cover = universal_cover(stacky_fan_of(doc));
  StackyFanDocument out{cover.group(), cover.beta().matrix(), cover.fan().max_cones(), doc.offsets};
  if (out.offsets) {
    try {
      stacky_polytope_of(out);
    } catch (const std::exception& e) {
      throw ConsistencyError(std::string("cover polytope is invalid: ") + e.what());
    }
  }
  return out;
}

}  // namespace stacky
