#include "stacky/document.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace stacky {

using nlohmann::json;

namespace {

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(where + ": " + e.what());
    }
  }
  throw DocumentError(where + ": expected an integer");
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(where + ": " + e.what());
    }
  }
  throw DocumentError(where + ": expected a rational string like \"p/q\"");
}

std::size_t index_from(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    throw DocumentError(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw DocumentError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

const json& array_member(const json& j, const char* key, const std::string& where) {
  const json& a = member(j, key, where);
  if (!a.is_array()) throw DocumentError(where + "." + key + ": expected an array");
  return a;
}

FgAbGroup group_from(const json& j, const std::string& where) {
  if (!j.is_object()) throw DocumentError(where + ": expected an object");
  std::size_t rank = index_from(member(j, "rank", where), where + ".rank");
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    const json& t = array_member(j, "torsion", where);
    for (std::size_t i = 0; i < t.size(); ++i)
      torsion.push_back(integer_from(t[i], where + ".torsion[" + std::to_string(i) + "]"));
  }
  try {
    return FgAbGroup(rank, torsion);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

std::vector<Cone> cones_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array of cones");
  std::vector<Cone> cones;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string w = where + "[" + std::to_string(k) + "]";
    if (!j[k].is_array()) throw DocumentError(w + ": expected an array of ray indices");
    Cone c;
    for (std::size_t i = 0; i < j[k].size(); ++i) c.push_back(index_from(j[k][i], w));
    cones.push_back(std::move(c));
  }
  return cones;
}

json cones_json(const std::vector<Cone>& cones) {
  json a = json::array();
  for (const auto& c : cones) a.push_back(c);
  return a;
}

json matrix_columns_json(const IntMatrix& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    json col = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(integer_json(m(i, j)));
    cols.push_back(std::move(col));
  }
  return cols;
}

IntMatrix matrix_columns_from(const json& j, std::size_t rows, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array of columns");
  IntMatrix m(rows, j.size());
  for (std::size_t c = 0; c < j.size(); ++c) {
    const std::string w = where + "[" + std::to_string(c) + "]";
    if (!j[c].is_array() || j[c].size() != rows)
      throw DocumentError(w + ": expected a column of " + std::to_string(rows) + " integers");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = integer_from(j[c][r], w);
  }
  return m;
}

json fan_data_json(const StackyFanData& d) {
  return json{{"group", to_json(d.group)}, {"beta", matrix_columns_json(d.beta)}, {"max_cones", cones_json(d.max_cones)}};
}

StackyFanData fan_data_from(const json& j, const std::string& where) {
  FgAbGroup g = group_from(member(j, "group", where), where + ".group");
  IntMatrix beta = matrix_columns_from(member(j, "beta", where), g.dim(), where + ".beta");
  return StackyFanData{g, beta, cones_from(member(j, "max_cones", where), where + ".max_cones")};
}

json rational_vector_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

RatVector rational_vector_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

json decision_witness(const Decision& d) {
  if (d.holds) return nullptr;
  json w = json::object();
  if (d.cone) w["cone"] = *d.cone;
  if (d.ray) w["ray"] = *d.ray;
  return w;
}

Decision decision_from(const json& j, const char* flag, const char* witness) {
  Decision d;
  d.holds = member(j, flag, "report").get<bool>();
  if (j.contains(witness) && !j.at(witness).is_null()) {
    const json& w = j.at(witness);
    if (w.contains("cone")) d.cone = w.at("cone").get<Cone>();
    if (w.contains("ray")) d.ray = w.at("ray").get<std::size_t>();
  }
  return d;
}

class Painter {
 public:
  explicit Painter(bool color) : color_(color) {}
  std::string yes_no(bool v) const {
    if (!color_) return v ? "yes" : "no";
    return v ? "\033[32myes\033[0m" : "\033[31mno\033[0m";
  }
  std::string bold(const std::string& s) const { return color_ ? "\033[1m" + s + "\033[0m" : s; }

 private:
  bool color_;
};

std::string point_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string cone_list(const std::vector<Cone>& cones) {
  if (cones.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < cones.size(); ++i) s += (i ? " " : "") + format_cone(cones[i], true);
  return s;
}

}  // namespace

json to_json(const FgAbGroup& g) {
  json t = json::array();
  for (const auto& q : g.torsion()) t.push_back(integer_json(q));
  return json{{"rank", g.rank()}, {"torsion", t}};
}

json to_json(const StackyFanDocument& doc) {
  json j{{"group", to_json(doc.group)}, {"beta", matrix_columns_json(doc.beta)}};
  if (doc.max_cones) j["max_cones"] = cones_json(*doc.max_cones);
  if (doc.offsets) j["offsets"] = rational_vector_json(*doc.offsets);
  return j;
}

json to_json(const std::vector<Violation>& violations) {
  json a = json::array();
  for (const auto& v : violations) {
    json e{{"kind", v.kind}, {"message", v.message}, {"cones", cones_json(v.cones)}};
    if (v.ray) e["ray"] = *v.ray;
    a.push_back(std::move(e));
  }
  return a;
}

ParsedDocument parse_document(const json& j) {
  if (!j.is_object()) throw DocumentError("document: expected a JSON object");
  ParsedDocument out;
  StackyFanDocument& doc = out.document;

  const json& g = member(j, "group", "document");
  if (!g.is_object()) throw DocumentError("document.group: expected an object");
  const std::size_t rank = index_from(member(g, "rank", "document.group"), "document.group.rank");
  std::vector<Integer> torsion;
  if (g.contains("torsion")) {
    const json& t = array_member(g, "torsion", "document.group");
    for (std::size_t i = 0; i < t.size(); ++i) {
      Integer q = integer_from(t[i], "document.group.torsion[" + std::to_string(i) + "]");
      if (q < 1) throw DocumentError("document.group.torsion: entries must be positive");
      torsion.push_back(q);
    }
  }
  IntMatrix beta = matrix_columns_from(member(j, "beta", "document"), rank + torsion.size(), "document.beta");

  try {
    doc.group = FgAbGroup(rank, torsion);
    doc.beta = doc.group.reduce_columns(beta);
  } catch (const std::invalid_argument&) {
    // Canonicalize only the finite part so the free coordinates (and with
    // them the fan) are left untouched.
    IntMatrix rel(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
    Quotient q = from_presentation(torsion.size(), rel);
    doc.group = FgAbGroup(rank, q.group.torsion());
    doc.beta = doc.group.reduce_columns(
        vstack(beta.row_block(0, rank), q.projection.matrix() * beta.row_block(rank, torsion.size())));
    std::string was, now;
    for (const auto& t : torsion) was += (was.empty() ? "" : ",") + t.get_str();
    for (const auto& t : q.group.torsion()) now += (now.empty() ? "" : ",") + t.get_str();
    out.warnings.push_back("torsion (" + was + ") canonicalized to (" + now + "); beta rewritten accordingly");
  }

  if (j.contains("max_cones")) doc.max_cones = cones_from(j.at("max_cones"), "document.max_cones");
  if (j.contains("offsets")) {
    doc.offsets = rational_vector_from(j.at("offsets"), "document.offsets");
    if (doc.offsets->size() != doc.beta.cols())
      throw DocumentError("document.offsets: expected " + std::to_string(doc.beta.cols()) + " entries");
  }
  if (!doc.max_cones && !doc.offsets) throw DocumentError("document: need \"max_cones\" or \"offsets\"");
  return out;
}

ParsedDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("JSON parse error: ") + e.what());
  }
  return parse_document(j);
}

json report_to_json(const AnalysisReport& r) {
  json cones = json::array();
  for (const auto& c : r.cones) {
    cones.push_back(json{{"cone", c.cone},
                         {"isotropy", to_json(c.isotropy)},
                         {"isotropy_order", integer_json(c.isotropy.order().value())},
                         {"inertia_injective", c.injective},
                         {"kernel_order", integer_json(c.kernel_order)}});
  }
  json j{{"valid", true},
         {"input", fan_data_json(r.input)},
         {"rays", r.input.beta.cols()},
         {"dimension", r.input.group.rank()},
         {"pi1", to_json(r.fundamental_group)},
         {"pi1_order", r.fundamental_group.order().to_string()},
         {"dual_group", to_json(r.dual_group)},
         {"dual_rank_matches", r.dual_rank_matches},
         {"tor_duality", r.tor_duality},
         {"global_stabilizer", to_json(r.global_stabilizer)},
         {"cones", cones},
         {"minimal_nonfaces", cones_json(r.minimal_nonfaces)},
         {"complete", r.complete},
         {"is_smooth", r.smooth.holds},
         {"smooth_witness", decision_witness(r.smooth)},
         {"is_manifold", r.manifold()},
         {"is_global_quotient", r.global_quotient.holds},
         {"global_quotient_witness", decision_witness(r.global_quotient)},
         {"universal_cover", fan_data_json(r.universal_cover)}};
  if (r.polytope) {
    const PolytopeSummary& p = *r.polytope;
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(rational_vector_json(v));
    j["polytope"] = json{{"vertices", verts},
                         {"volume", to_string(p.volume)},
                         {"cover_volume", to_string(p.cover_volume)},
                         {"volume_ratio", to_string(p.volume_ratio)},
                         {"lattice_index", integer_json(p.lattice_index)},
                         {"stack_volume_ratio", to_string(p.stack_volume_ratio)},
                         {"coker_order", integer_json(p.coker_order)}};
  }
  return j;
}

AnalysisReport report_from_json(const json& j) {
  try {
    AnalysisReport r;
    r.input = fan_data_from(member(j, "input", "report"), "report.input");
    r.fundamental_group = group_from(member(j, "pi1", "report"), "report.pi1");
    r.dual_group = group_from(member(j, "dual_group", "report"), "report.dual_group");
    r.dual_rank_matches = member(j, "dual_rank_matches", "report").get<bool>();
    r.tor_duality = member(j, "tor_duality", "report").get<bool>();
    r.global_stabilizer = group_from(member(j, "global_stabilizer", "report"), "report.global_stabilizer");
    for (const auto& c : array_member(j, "cones", "report")) {
      r.cones.push_back(ConeRecord{member(c, "cone", "report.cones").get<Cone>(),
                                   group_from(member(c, "isotropy", "report.cones"), "report.cones.isotropy"),
                                   member(c, "inertia_injective", "report.cones").get<bool>(),
                                   integer_from(member(c, "kernel_order", "report.cones"), "report.cones")});
    }
    r.minimal_nonfaces = cones_from(member(j, "minimal_nonfaces", "report"), "report.minimal_nonfaces");
    r.complete = member(j, "complete", "report").get<bool>();
    r.smooth = decision_from(j, "is_smooth", "smooth_witness");
    r.global_quotient = decision_from(j, "is_global_quotient", "global_quotient_witness");
    r.universal_cover = fan_data_from(member(j, "universal_cover", "report"), "report.universal_cover");
    if (j.contains("polytope")) {
      const json& p = j.at("polytope");
      PolytopeSummary s;
      for (const auto& v : array_member(p, "vertices", "report.polytope"))
        s.vertices.push_back(rational_vector_from(v, "report.polytope.vertices"));
      s.volume = rational_from(member(p, "volume", "report.polytope"), "volume");
      s.cover_volume = rational_from(member(p, "cover_volume", "report.polytope"), "cover_volume");
      s.volume_ratio = rational_from(member(p, "volume_ratio", "report.polytope"), "volume_ratio");
      s.lattice_index = integer_from(member(p, "lattice_index", "report.polytope"), "lattice_index");
      s.stack_volume_ratio = rational_from(member(p, "stack_volume_ratio", "report.polytope"), "stack_volume_ratio");
      s.coker_order = integer_from(member(p, "coker_order", "report.polytope"), "coker_order");
      r.polytope = std::move(s);
    }
    return r;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("report: ") + e.what());
  }
}

std::string pretty_report(const AnalysisReport& r, bool color) {
  const Painter paint(color);
  std::ostringstream os;
  auto field = [&os](const std::string& label) -> std::ostream& {
    os << "  " << std::left << std::setw(22) << label;
    return os;
  };

  os << paint.bold("Stacky fan") << ": N = " << r.input.group.to_string() << ", " << r.input.beta.cols()
     << " rays, d = " << r.input.group.rank() << "\n";
  field("beta") << to_string(r.input.beta) << "\n";
  field("maximal cones") << cone_list(r.input.max_cones) << "\n";
  field("fundamental group") << r.fundamental_group.to_string() << "  (order " << r.fundamental_group.order().to_string()
                             << ")\n";
  field("dual group DG(beta)") << r.dual_group.to_string() << "  (rank n-d: " << paint.yes_no(r.dual_rank_matches)
                               << ", Tor(DG) = coker beta: " << paint.yes_no(r.tor_duality) << ")\n";
  field("global stabilizer") << r.global_stabilizer.to_string() << "\n";
  field("complete fan") << paint.yes_no(r.complete) << "\n";
  field("minimal non-faces") << cone_list(r.minimal_nonfaces) << "\n";
  field("smooth (manifold)") << paint.yes_no(r.smooth.holds);
  if (!r.smooth.holds && r.smooth.cone) os << "  (N != N_sigma at cone " << format_cone(*r.smooth.cone, true) << ")";
  os << "\n";
  field("global quotient") << paint.yes_no(r.global_quotient.holds);
  if (!r.global_quotient.holds && r.global_quotient.cone && r.global_quotient.ray)
    os << "  (beta(e_" << *r.global_quotient.ray + 1 << ") not in N_sigma for cone "
       << format_cone(*r.global_quotient.cone, true) << ")";
  os << "\n";

  os << paint.bold("Cones") << " (1-based ray indices)\n";
  std::size_t cone_w = 6, iso_w = 10;
  for (const auto& c : r.cones) {
    cone_w = std::max(cone_w, format_cone(c.cone, true).size() + 2);
    iso_w = std::max(iso_w, c.isotropy.to_string().size() + 2);
  }
  os << "  " << std::left << std::setw(static_cast<int>(cone_w)) << "cone" << std::setw(static_cast<int>(iso_w))
     << "isotropy"
     << "omega injective   |ker omega|\n";
  for (const auto& c : r.cones) {
    os << "  " << std::left << std::setw(static_cast<int>(cone_w)) << format_cone(c.cone, true)
       << std::setw(static_cast<int>(iso_w)) << c.isotropy.to_string();
    const std::string yn = c.injective ? "yes" : "no";
    os << paint.yes_no(c.injective) << std::string(18 - yn.size(), ' ') << c.kernel_order.get_str() << "\n";
  }

  os << paint.bold("Universal cover") << "\n";
  field("N'") << r.universal_cover.group.to_string() << "\n";
  field("beta'") << to_string(r.universal_cover.beta) << "\n";

  if (r.polytope) {
    const PolytopeSummary& p = *r.polytope;
    os << paint.bold("Polytope") << "\n";
    std::string verts;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) verts += (i ? " " : "") + point_string(p.vertices[i]);
    field("vertices") << verts << "\n";
    field("vol(Delta)") << to_string(p.volume) << "\n";
    field("vol(Delta')") << to_string(p.cover_volume) << "\n";
    field("volume ratio") << to_string(p.volume_ratio) << "  (lattice index " << p.lattice_index.get_str() << ")\n";
    field("stack volume ratio") << to_string(p.stack_volume_ratio) << "  (|coker beta| = " << p.coker_order.get_str()
                                << ")\n";
  }
  return os.str();
}

}  // namespace stacky
