#include "curveres/io.hpp"

#include <cstdio>
#include <fstream>

#include "curveres/error.hpp"

namespace curveres {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw CurveError(ErrorKind::InvalidBranch, what); }

int require_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) malformed(where + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) malformed(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_field(const json& term, const char* key, const std::string& where, bool required) {
  if (!term.contains(key)) {
    if (required) malformed(where + ": missing \"" + key + "\"");
    return 0;
  }
  const json& v = term.at(key);
  if (!v.is_string()) malformed(where + ": \"" + key + "\" must be a rational string such as \"3/4\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    malformed(where + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

BranchFile parse_branch_file(const json& j) {
  if (!j.is_object()) malformed("branch file must be a JSON object");
  BranchFile f;
  f.dim = require_int(j, "dim", "branch");
  f.precision = require_int(j, "precision", "branch");
  if (f.dim < 2) malformed("branch: dim must be >= 2");
  if (!j.contains("coordinates") || !j.at("coordinates").is_array()) malformed("branch: \"coordinates\" must be an array");
  const json& coords = j.at("coordinates");
  if (static_cast<int>(coords.size()) != f.dim) {
    malformed("branch: expected " + std::to_string(f.dim) + " coordinates, found " + std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string where = "coordinate " + std::to_string(i + 1);
    if (!coords[i].is_array()) malformed(where + ": must be an array of terms");
    std::vector<Term> terms;
    for (const json& t : coords[i]) {
      if (!t.is_object()) malformed(where + ": terms must be objects");
      const int exp = require_int(t, "exp", where);
      const std::string at = where + ", exponent " + std::to_string(exp);
      terms.push_back({exp, ExactComplex(rational_field(t, "re", at, true), rational_field(t, "im", at, false))});
    }
    f.coordinates.push_back(std::move(terms));
  }
  return f;
}

BranchFile read_branch_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
  return parse_branch_file(j);
}

json to_json(const BranchFile& f) {
  json coords = json::array();
  for (const auto& terms : f.coordinates) {
    json arr = json::array();
    for (const Term& t : terms) {
      arr.push_back({{"exp", t.exp}, {"re", to_string(t.coeff.re())}, {"im", to_string(t.coeff.im())}});
    }
    coords.push_back(std::move(arr));
  }
  return {{"dim", f.dim}, {"precision", f.precision}, {"coordinates", std::move(coords)}};
}

Branch to_branch(const BranchFile& f) { return Branch::from_polynomials(f.precision, f.coordinates); }

json to_json(const ExactComplex& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

json to_json(const Series& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
  return arr;
}

json to_json(const ChartRecord& c) {
  json translation = json::array();
  for (const auto& z : c.translation) translation.push_back(to_json(z));
  return {{"pivot", c.pivot + 1}, {"translation", std::move(translation)}};
}

json to_json(const TangencySignature& sig) {
  json arr = json::array();
  for (const auto& [id, contact] : sig) arr.push_back({{"component", id}, {"relation", to_string(contact)}});
  return arr;
}

json to_json(const ResolutionReport& report) {
  json tangency = json::array();
  for (const auto& sig : report.tangency) tangency.push_back(to_json(sig));
  json charts = json::array();
  for (const auto& c : report.charts) charts.push_back(to_json(c));
  json j = {{"r", report.r},
            {"graph", to_json(report.graph)},
            {"multiplicities", report.multiplicities},
            {"tangency", std::move(tangency)},
            {"charts", std::move(charts)},
            {"status", to_string(report.status)}};
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

json to_json(const CompareReport& report) {
  return {{"sameGraph", report.same_graph},
          {"sharedPrefix", report.shared_prefix},
          {"r1", report.r1},
          {"r2", report.r2},
          {"signaturesMatch", report.signatures_match},
          {"status1", to_string(report.status1)},
          {"status2", to_string(report.status2)},
          {"graph1", to_json(report.graph1)},
          {"graph2", to_json(report.graph2)}};
}

json to_json(const FieldSpec& f) {
  json comps = json::array();
  for (const auto& c : f.components) {
    if (std::holds_alternative<ZeroComponent>(c)) {
      comps.push_back({{"kind", "zero"}});
    } else if (const auto* a = std::get_if<Additive>(&c)) {
      comps.push_back({{"kind", "additive"}, {"series", to_json(a->shift)}});
    } else if (const auto* l = std::get_if<LinearConstant>(&c)) {
      comps.push_back({{"kind", "linearConstant"}, {"factor", to_json(l->factor)}});
    } else if (const auto* v = std::get_if<LinearVariable>(&c)) {
      comps.push_back({{"kind", "linearVariable"}, {"series", to_json(v->unit)}});
    }
  }
  json j = {{"mode", to_string(f.mode)}, {"pivot", f.pivot + 1}, {"components", std::move(comps)}};
  if (f.anchor_component > 0) j["anchorComponent"] = f.anchor_component;
  return j;
}

json to_json(const IsotopySchedule& schedule) {
  json steps = json::array();
  for (const auto& s : schedule.steps) {
    json charts = json::array();
    for (const auto& c : s.charts) charts.push_back(to_json(c));
    steps.push_back({{"level", s.level},
                     {"eps", s.eps},
                     {"charts", std::move(charts)},
                     {"field", to_json(s.field)},
                     {"contactBefore", s.contact_before},
                     {"contactAfter", s.contact_after}});
  }
  return {{"r", schedule.r}, {"steps", std::move(steps)}};
}

std::string trajectory_csv_header(int dim) {
  std::string h = "t";
  for (int i = 1; i <= dim; ++i) {
    h += ",coord_" + std::to_string(i) + "_re,coord_" + std::to_string(i) + "_im";
  }
  return h;
}

std::string trajectory_csv_row(double t, const Point& p) {
  std::string row = format_double(t);
  for (const auto& c : p) row += "," + format_double(c.real()) + "," + format_double(c.imag());
  return row;
}

}  // namespace curveres
