#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rtc/henon.hpp"
#include "rtc/invariants.hpp"
#include "rtc/modular.hpp"

namespace rtc {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "rtc-report-1";
inline constexpr const char* kRecordSchema = "rtc-record-1";

struct PipelineConfig {
  ParameterPath path{};
  int max_doublings = 4;
  std::vector<std::uint64_t> moduli = {2};
  std::vector<std::uint64_t> primes = {2};
  std::vector<std::complex<double>> trace_points = {
      {-1.0, 0.0}, {0.0, 1.0},
      {std::cos(2.0 * 3.14159265358979323846 / 5.0),
       std::sin(2.0 * 3.14159265358979323846 / 5.0)}};
  int depth = 8;
  OrbitSolverConfig solver{};
  double param_tol = 1e-10;
  std::uint64_t closure_cap = kDefaultClosureCap;
  ProjectionConfig projection{};
  std::uint64_t seed = 0;
  std::string out_path;
  std::string cache_path;

  void validate() const;
};

PipelineConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const PipelineConfig& cfg);

/// Full invariant report; `json` is the canonical serialized form and two
/// runs with identical config produce byte-identical text.
struct InvariantReport {
  nlohmann::ordered_json json;
};

InvariantReport run_pipeline(const PipelineConfig& cfg);

enum class ReportVerdict { Indistinguishable, Distinct };

struct ReportDiff {
  ReportVerdict verdict;
  std::vector<std::string> differences;  // empty iff Indistinguishable
};

/// Sound only in one direction: a difference certifies distinct bifurcation
/// classes; equality certifies nothing.
ReportDiff compare_reports(const InvariantReport& r1, const InvariantReport& r2);

/// Versioned cascade-record persistence; wrong schema fails loudly.
nlohmann::ordered_json cascade_record_to_json(const CascadeRecord& rec);
CascadeRecord cascade_record_from_json(const nlohmann::json& j);

}  // namespace rtc
