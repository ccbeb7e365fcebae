#include "stacky/cli.hpp"

#include "stacky/document.hpp"
#include "stacky/gallery.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace stacky {

using nlohmann::json;

namespace {

bool color_enabled(bool fallback) {
  const char* env = std::getenv("STACKY_COLOR");
  if (!env) return fallback;
  std::string v(env);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "0" || v == "never" || v == "off" || v == "no" || v == "false") return false;
  if (v == "1" || v == "always" || v == "on" || v == "yes" || v == "true") return true;
  return fallback;
}

// Thrown for unreadable files; maps to exit_io.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

ParsedDocument load(const std::string& path, std::ostream& err) {
  ParsedDocument p = parse_document_text(read_input(path));
  for (const auto& w : p.warnings) err << "warning: " << w << "\n";
  return p;
}

IntVector parse_vector(const std::string& text, const char* what) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_integer(item));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (v.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  return v;
}

std::string join(const IntVector& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

void print_violations(const std::vector<Violation>& violations, std::ostream& err) {
  for (const auto& v : violations) err << "invalid (" << v.kind << "): " << v.message << "\n";
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  ParsedDocument p = load(path, err);
  const auto violations = validate_document(p.document);
  json j{{"valid", violations.empty()}, {"violations", to_json(violations)}, {"warnings", p.warnings}};
  out << j.dump(2) << "\n";
  return violations.empty() ? exit_ok : exit_invalid;
}

int cmd_report(const std::string& path, bool as_json, bool color, std::ostream& out, std::ostream& err) {
  ParsedDocument p = load(path, err);
  const AnalysisReport r = analyze(p.document);
  if (as_json)
    out << report_to_json(r).dump(2) << "\n";
  else
    out << pretty_report(r, color);
  return exit_ok;
}

int cmd_cover(const std::string& path, std::ostream& out, std::ostream& err) {
  ParsedDocument p = load(path, err);
  out << to_json(cover_document(p.document)).dump(2) << "\n";
  return exit_ok;
}

int cmd_gallery(const std::string& name, const std::string& a, const std::string& m, std::ostream& out,
                std::ostream& err) {
  if (name.empty()) {
    std::size_t w = 0;
    for (const auto& e : gallery()) w = std::max(w, e.name.size());
    for (const auto& e : gallery())
      out << std::left << std::setw(static_cast<int>(w + 2)) << e.name << e.description << "\n";
    out << std::left << std::setw(static_cast<int>(w + 2)) << "sheared-simplex"
        << "family: --a a_1,...,a_d --m m_0,...,m_d\n";
    out << std::left << std::setw(static_cast<int>(w + 2)) << "trapezoid"
        << "family: --a a_1,a_2 --m m_1,...,m_4\n";
    return exit_ok;
  }
  const bool parametrized = !a.empty() || !m.empty();
  if (parametrized) {
    if (a.empty() || m.empty()) throw std::invalid_argument("--a and --m must be given together");
    if (name == "sheared-simplex") {
      out << to_json(sheared_simplex(parse_vector(a, "a"), parse_vector(m, "m"))).dump(2) << "\n";
      return exit_ok;
    }
    if (name == "trapezoid") {
      out << to_json(trapezoid(parse_vector(a, "a"), parse_vector(m, "m"))).dump(2) << "\n";
      return exit_ok;
    }
    throw std::invalid_argument("only sheared-simplex and trapezoid take --a/--m");
  }
  if (const GalleryEntry* e = find_gallery_entry(name)) {
    out << to_json(e->document).dump(2) << "\n";
    return exit_ok;
  }
  err << "error: unknown gallery entry '" << name << "'; available:";
  for (const auto& e : gallery()) err << " " << e.name;
  err << "\n";
  return exit_io;
}

int cmd_sweep(const std::string& family, std::size_t dim, long a_max, long m_max, bool csv, std::ostream& out) {
  std::vector<SweepRow> rows;
  if (family == "sheared-simplex")
    rows = sweep_sheared_simplex(dim, a_max, m_max);
  else if (family == "trapezoid")
    rows = sweep_trapezoid(a_max, m_max);
  else
    throw std::invalid_argument("unknown family '" + family + "' (sheared-simplex, trapezoid)");

  if (csv) {
    out << "a,m,global_quotient,pi1_order\n";
    for (const auto& r : rows)
      out << '"' << join(r.a, " ") << "\",\"" << join(r.m, " ") << "\"," << (r.global_quotient ? "true" : "false")
          << "," << r.pi1_order.get_str() << "\n";
    return exit_ok;
  }
  std::size_t count = 0;
  out << std::left << std::setw(14) << "a" << std::setw(18) << "m" << std::setw(17) << "global quotient"
      << "|pi1|\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(14) << "(" + join(r.a, ",") + ")" << std::setw(18) << "(" + join(r.m, ",") + ")"
        << std::setw(17) << (r.global_quotient ? "yes" : "no") << r.pi1_order.get_str() << "\n";
    count += r.global_quotient;
  }
  out << rows.size() << " cases, " << count << " global quotients\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool default_color) {
  CLI::App app{"Global-quotient and universal-cover analysis of toric DM stacks", "stacky"};
  app.require_subcommand(1);

  std::string path, name, family, a_list, m_list;
  bool as_json = false, csv = false;
  std::size_t dim = 2;
  long a_max = 3, m_max = 4;

  auto* validate = app.add_subcommand("validate", "check a stacky fan or polytope document");
  validate->add_option("file", path, "input JSON, '-' for stdin")->required();
  auto* report = app.add_subcommand("report", "full analysis report");
  report->add_option("file", path, "input JSON, '-' for stdin")->required();
  report->add_flag("--json", as_json, "emit JSON instead of text");
  auto* cover = app.add_subcommand("cover", "universal cover document");
  cover->add_option("file", path, "input JSON, '-' for stdin")->required();
  auto* gal = app.add_subcommand("gallery", "list built-in examples or print one");
  gal->add_option("name", name, "example or family name");
  gal->add_option("--a", a_list, "family parameter a, comma separated");
  gal->add_option("--m", m_list, "family labels m, comma separated");
  auto* sweep = app.add_subcommand("sweep", "classify a family over a parameter grid");
  sweep->add_option("family", family, "sheared-simplex or trapezoid")->required();
  sweep->add_option("--dim", dim, "sheared-simplex dimension")->capture_default_str();
  auto* a_opt = sweep->add_option("--a-max", a_max, "largest entry of a")->capture_default_str();
  auto* m_opt = sweep->add_option("--m-max", m_max, "largest label")->capture_default_str();
  sweep->add_flag("--csv", csv, "emit CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_io;
  }

  const bool color = color_enabled(default_color);
  try {
    if (*validate) return cmd_validate(path, out, err);
    if (*report) return cmd_report(path, as_json, color, out, err);
    if (*cover) return cmd_cover(path, out, err);
    if (*gal) return cmd_gallery(name, a_list, m_list, out, err);
    if (*sweep) {
      // Trapezoid grids default to the smaller label range.
      if (family == "trapezoid") {
        if (a_opt->count() == 0) a_max = 2;
        if (m_opt->count() == 0) m_max = 3;
      }
      return cmd_sweep(family, dim, a_max, m_max, csv, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  } catch (const ValidationError& e) {
    print_violations(e.violations(), err);
    return exit_invalid;
  } catch (const PolytopeError& e) {
    err << "invalid (" << e.kind_name() << "): " << e.what() << "\n";
    return exit_invalid;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  }
  return exit_io;
}

}  // namespace stacky
