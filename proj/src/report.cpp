#include "subord/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "subord/errors.hpp"

namespace subord {

Json ReportDocument::to_json() const {
  Json j;
  j["schema_version"] = schema_version;
  j["metadata"] = metadata;
  j["config"] = config;
  j["results"] = results;
  j["verdict"] = verdict;
  return j;
}

ReportDocument ReportDocument::from_json(const Json& j) {
  try {
    ReportDocument d;
    d.schema_version = j.at("schema_version").get<std::string>();
    d.metadata = j.at("metadata");
    d.config = j.at("config");
    d.results = j.at("results");
    d.verdict = j.at("verdict").get<std::string>();
    return d;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("malformed report: ") + e.what());
  }
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

std::string ReportDocument::data_section() const {
  Json j = to_json();
  j.erase("metadata");
  return j.dump(2) + "\n";
}

Json annotated(double value, double tolerance) {
  return Json{{"value", value}, {"tolerance", tolerance}};
}

Json params_json(const LemmaParams& p) {
  return Json{{"A", p.A}, {"B", p.B}, {"D", p.D}, {"E", p.E}, {"k", p.k}, {"beta", p.beta}};
}

Json margin_json(const MarginProfile& m, const Tolerances& tol) {
  return Json{
      {"min_margin", annotated(m.min_margin, tol.verdict)},
      {"argmin_t", annotated(m.argmin_t, tol.refine_resolution)},
      {"principal_min_margin", annotated(m.principal_min_margin, tol.verdict)},
      {"samples", m.t_samples.size()},
      {"refined", m.refined},
      {"punctures", m.punctures},
      {"puncture_radius", tol.puncture},
      {"denominator_zeros", m.denominator_zeros},
  };
}

Json admissibility_json(const AdmissibilityMin& a, const Tolerances& tol) {
  return Json{
      {"quantity", std::string(to_string(a.quantity))},
      {"radius", a.radius},
      {"min", annotated(a.value, tol.fd_agreement)},
      {"argmin_t", annotated(a.argmin_t, tol.refine_resolution)},
      {"fd_max_error", a.fd_max_error},
  };
}

Json verification_json(const VerificationReport& r, const Tolerances& tol) {
  Json j;
  j["lemma"] = std::string(short_name(r.lemma));
  j["feasible"] = r.feasible;
  Json th;
  th["status"] = std::string(to_string(r.threshold.status));
  if (r.threshold.status == ThresholdResult::Status::Feasible) {
    th["beta_star"] = annotated(r.threshold.beta_star, 0.0);
  }
  th["binding_constraint"] = r.threshold.binding_constraint;
  j["threshold"] = th;
  j["margin"] = r.margin ? margin_json(*r.margin, tol) : Json(nullptr);
  Json adm = Json::array();
  for (const auto& a : r.admissibility) adm.push_back(admissibility_json(a, tol));
  j["admissibility"] = adm;
  j["diagnostics"] = r.diagnostics;
  return j;
}

Json trial_json(const TrialReport& t, const Tolerances& tol) {
  return Json{
      {"schwarz", t.schwarz},
      {"feasible", t.feasible},
      {"order", t.order},
      {"premise_residual", annotated(t.premise_residual, tol.premise_residual)},
      {"conclusion_margin", annotated(t.conclusion.min_margin, tol.verdict)},
      {"argmin_radius", t.conclusion.argmin_radius},
      {"argmin_t", t.conclusion.argmin_t},
      {"tail_bounds", t.conclusion.tail_bounds},
      {"tail_certified", t.conclusion.tail_certified},
      {"passed", t.passed},
  };
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

ThresholdRow threshold_row(LemmaId id, const LemmaParams& params, std::size_t grid_size,
                           const Tolerances& tol) {
  ThresholdRow row;
  row.lemma = id;
  row.params = params;
  const ThresholdResult closed = closed_form_threshold(id, params);
  row.status = std::string(to_string(closed.status));
  row.note = closed.binding_constraint;
  if (closed.status != ThresholdResult::Status::Feasible) return row;
  row.beta_star_closed = closed.beta_star;
  if (!lemma_info(id).has_margin_criterion) return row;
  try {
    row.beta_numeric = numeric_threshold(id, params, grid_size, tol).beta;
  } catch (const Error& e) {
    row.status = std::string(to_string(e.kind()));
    row.note = e.what();
  }
  return row;
}

std::string_view csv_header() {
  return "lemma,A,B,D,E,k,beta_star_closed,beta_numeric,gap,status";
}

std::string csv_row(const ThresholdRow& row) {
  const auto& p = row.params;
  std::string s(short_name(row.lemma));
  for (double v : {p.A, p.B, p.D, p.E, p.k}) s += "," + format_sig(v);
  s += ",";
  if (row.beta_star_closed) s += format_sig(*row.beta_star_closed);
  s += ",";
  if (row.beta_numeric) s += format_sig(*row.beta_numeric);
  s += ",";
  if (row.beta_star_closed && row.beta_numeric) {
    s += format_sig(*row.beta_star_closed - *row.beta_numeric);
  }
  s += "," + row.status;
  return s;
}

Json threshold_row_json(const ThresholdRow& row, const Tolerances& tol) {
  Json j;
  j["lemma"] = std::string(short_name(row.lemma));
  Json p = params_json(row.params);
  p.erase("beta");
  j["params"] = p;
  j["beta_star_closed"] =
      row.beta_star_closed ? annotated(*row.beta_star_closed, 0.0) : Json(nullptr);
  j["beta_numeric"] =
      row.beta_numeric
          ? annotated(*row.beta_numeric, tol.verdict * std::max(1.0, *row.beta_numeric))
          : Json(nullptr);
  j["gap"] = row.beta_star_closed && row.beta_numeric
                 ? Json(*row.beta_star_closed - *row.beta_numeric)
                 : Json(nullptr);
  j["status"] = row.status;
  j["note"] = row.note;
  return j;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.close();
  if (!f) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace subord
