#pragma once

// Report artifacts: the JSON ReportDocument, threshold CSV rows and the
// shared number formatting. Layouts are documented in docs/formats.md.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subord/catalog.hpp"
#include "subord/verifier.hpp"

namespace subord {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct ReportDocument {
  std::string schema_version{kSchemaVersion};
  Json metadata = Json::object();  // timestamp and output paths; not data
  Json config = Json::object();
  Json results = Json::object();
  std::string verdict;

  Json to_json() const;
  static ReportDocument from_json(const Json& j);
  /// Pretty-printed document with a trailing newline.
  std::string dump() const;
  /// Everything except metadata; identical runs give identical bytes.
  std::string data_section() const;
  bool operator==(const ReportDocument&) const = default;
};

/// {"value": v, "tolerance": tol}
Json annotated(double value, double tolerance);

Json params_json(const LemmaParams& p);
Json margin_json(const MarginProfile& m, const Tolerances& tol);
Json admissibility_json(const AdmissibilityMin& a, const Tolerances& tol);
Json verification_json(const VerificationReport& r, const Tolerances& tol);
Json trial_json(const TrialReport& t, const Tolerances& tol);

/// ISO 8601 UTC, second resolution.
std::string utc_timestamp();

/// %.{digits}g in the C locale.
std::string format_sig(double v, int digits = 9);

struct ThresholdRow {
  LemmaId lemma = LemmaId::L1_kFamily;
  LemmaParams params;
  std::optional<double> beta_star_closed;
  std::optional<double> beta_numeric;
  std::string status;  // closed-form status, or the numeric failure kind
  std::string note;
};

/// Closed form plus numeric threshold; numeric failures become the status
/// instead of aborting.
ThresholdRow threshold_row(LemmaId id, const LemmaParams& params,
                           std::size_t grid_size = kDefaultMarginGrid,
                           const Tolerances& tol = kTolerances);

std::string_view csv_header();  // no newline
std::string csv_row(const ThresholdRow& row);
Json threshold_row_json(const ThresholdRow& row, const Tolerances& tol);

/// Writes the whole file; Io error naming the path on failure.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace subord
