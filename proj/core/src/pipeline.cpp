#include "rtc/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "rtc/burau.hpp"
#include "rtc/order.hpp"

namespace rtc {

namespace {

nlohmann::ordered_json complex_to_json(std::complex<double> z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

nlohmann::ordered_json orbit_to_json(const MapOrbit& o) {
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point& q : o.points) pts.push_back({q.x, q.y});
  return nlohmann::ordered_json{
      {"period", o.period},
      {"points", pts},
      {"residual", o.residual},
      {"multipliers",
       {complex_to_json(o.multipliers[0]), complex_to_json(o.multipliers[1])}}};
}

MapOrbit orbit_from_json(const nlohmann::json& j) {
  MapOrbit o;
  o.period = j.at("period").get<int>();
  for (const auto& q : j.at("points"))
    o.points.push_back({q.at(0).get<double>(), q.at(1).get<double>()});
  o.residual = j.at("residual").get<double>();
  o.multipliers[0] = complex_from_json(j.at("multipliers").at(0));
  o.multipliers[1] = complex_from_json(j.at("multipliers").at(1));
  return o;
}

}  // namespace

void PipelineConfig::validate() const {
  if (path.b <= 0.0) throw InputError("config: b must be > 0");
  if (path.a_end <= path.a_start) throw InputError("config: a range is empty");
  if (max_doublings < 0) throw InputError("config: max_doublings must be >= 0");
  if (depth < 1) throw InputError("config: depth must be >= 1");
  if (moduli.empty()) throw InputError("config: need at least one modulus");
  for (std::uint64_t n : moduli)
    if (n < 2) throw InputError("config: moduli must be >= 2");
  for (std::uint64_t p : primes)
    if (!is_prime(p)) throw InputError("config: p-adic bases must be prime");
  for (const auto& t : trace_points)
    if (t == std::complex<double>(0.0, 0.0))
      throw InputError("config: trace points must be nonzero");
}

PipelineConfig config_from_json(const nlohmann::json& j) {
  PipelineConfig cfg;
  if (j.contains("b")) cfg.path.b = j["b"].get<double>();
  if (j.contains("a_min")) cfg.path.a_start = j["a_min"].get<double>();
  if (j.contains("a_max")) cfg.path.a_end = j["a_max"].get<double>();
  if (j.contains("max_doublings")) cfg.max_doublings = j["max_doublings"].get<int>();
  if (j.contains("moduli")) cfg.moduli = j["moduli"].get<std::vector<std::uint64_t>>();
  if (j.contains("primes")) cfg.primes = j["primes"].get<std::vector<std::uint64_t>>();
  if (j.contains("trace_points")) {
    cfg.trace_points.clear();
    for (const auto& t : j["trace_points"]) cfg.trace_points.push_back(complex_from_json(t));
  }
  if (j.contains("depth")) cfg.depth = j["depth"].get<int>();
  if (j.contains("newton_tol")) cfg.solver.tolerance = j["newton_tol"].get<double>();
  if (j.contains("param_tol")) cfg.param_tol = j["param_tol"].get<double>();
  if (j.contains("closure_cap")) cfg.closure_cap = j["closure_cap"].get<std::uint64_t>();
  if (j.contains("interp_steps")) cfg.projection.steps = j["interp_steps"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
  if (j.contains("cache")) cfg.cache_path = j["cache"].get<std::string>();
  return cfg;
}

nlohmann::ordered_json config_to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json tps = nlohmann::ordered_json::array();
  for (const auto& t : cfg.trace_points) tps.push_back(complex_to_json(t));
  return nlohmann::ordered_json{
      {"b", cfg.path.b},
      {"a_min", cfg.path.a_start},
      {"a_max", cfg.path.a_end},
      {"max_doublings", cfg.max_doublings},
      {"moduli", cfg.moduli},
      {"primes", cfg.primes},
      {"trace_points", tps},
      {"depth", cfg.depth},
      {"newton_tol", cfg.solver.tolerance},
      {"param_tol", cfg.param_tol},
      {"closure_cap", cfg.closure_cap},
      {"interp_steps", cfg.projection.steps},
      {"seed", cfg.seed}};
}

nlohmann::ordered_json cascade_record_to_json(const CascadeRecord& rec) {
  nlohmann::ordered_json families = nlohmann::ordered_json::array();
  for (const auto& fam : rec.orbit_families) {
    nlohmann::ordered_json f = nlohmann::ordered_json::array();
    for (const MapOrbit& o : fam) f.push_back(orbit_to_json(o));
    families.push_back(std::move(f));
  }
  return nlohmann::ordered_json{
      {"schema_version", kRecordSchema},
      {"b", rec.path.b},
      {"a_start", rec.path.a_start},
      {"a_end", rec.path.a_end},
      {"initial_orbit", orbit_to_json(rec.initial_orbit)},
      {"doubling_params", rec.doubling_params},
      {"sample_params", rec.sample_params},
      {"orbit_families", families}};
}

CascadeRecord cascade_record_from_json(const nlohmann::json& j) {
  const std::string schema = j.value("schema_version", "");
  if (schema != kRecordSchema)
    throw CacheError("cascade record: schema '" + schema + "' is not '" +
                     kRecordSchema + "'; regenerate the record");
  CascadeRecord rec;
  rec.path.b = j.at("b").get<double>();
  rec.path.a_start = j.at("a_start").get<double>();
  rec.path.a_end = j.at("a_end").get<double>();
  rec.initial_orbit = orbit_from_json(j.at("initial_orbit"));
  rec.doubling_params = j.at("doubling_params").get<std::vector<double>>();
  rec.sample_params = j.at("sample_params").get<std::vector<double>>();
  for (const auto& fam : j.at("orbit_families")) {
    std::vector<MapOrbit> f;
    for (const auto& o : fam) f.push_back(orbit_from_json(o));
    rec.orbit_families.push_back(std::move(f));
  }
  return rec;
}

InvariantReport run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  auto record_error = [&](const std::string& stage, const std::string& message) {
    errors.push_back({{"stage", stage}, {"message", message}});
  };

  // Initial fixed point from the quadratic formula, polished by Newton.
  const double b = cfg.path.b;
  const double disc = (1.0 + b) * (1.0 + b) + 4.0 * cfg.path.a_start;
  if (disc < 0.0)
    throw InputError("run_pipeline: no fixed point at a_start (discriminant < 0)");
  const double x0 = (-(1.0 + b) + std::sqrt(disc)) / 2.0;
  MapOrbit initial = find_periodic_orbit({cfg.path.a_start, b}, 1, {x0, x0}, cfg.solver);

  CascadeConfig ccfg;
  ccfg.max_doublings = cfg.max_doublings;
  ccfg.solver = cfg.solver;
  ccfg.param_tol = cfg.param_tol;
  CascadeRecord rec = continue_cascade(cfg.path, initial, ccfg);
  const int doublings = static_cast<int>(rec.doubling_params.size());

  // Stage braids (union-braid convention) and per-orbit cable checks.
  std::vector<BraidWord> gammas;          // gamma_braid for stages 1..S
  nlohmann::ordered_json stage_braids = nlohmann::ordered_json::array();
  nlohmann::ordered_json cable_checks = nlohmann::ordered_json::array();
  const int want = std::min(cfg.depth, doublings);
  for (int n = 1; n <= want; ++n) {
    try {
      BraidWord g = gamma_braid(rec, n, cfg.projection);
      const HenonParams sample{rec.sample_params[n], b};
      BraidWord before = extract_braid({rec.orbit_families[n][n - 1]}, sample, cfg.projection);
      BraidWord after = extract_braid({rec.orbit_families[n][n]}, sample, cfg.projection);
      cable_checks.push_back(pd_cable_check(before, after));
      stage_braids.push_back({{"stage", n},
                              {"strands", g.strands()},
                              {"word", to_text(g)},
                              {"orbit_braid_before", to_text(before)},
                              {"orbit_braid_after", to_text(after)}});
      gammas.push_back(std::move(g));
    } catch (const std::exception& e) {
      record_error("gamma_braid stage " + std::to_string(n), e.what());
      break;
    }
  }

  // Relative indices per modulus; each modulus keeps its successful prefix.
  ImageOrderCache cache;
  if (!cfg.cache_path.empty()) cache.load(cfg.cache_path);
  std::vector<std::vector<mpz_class>> terms_per_modulus(cfg.moduli.size());
  for (std::size_t mi = 0; mi < cfg.moduli.size(); ++mi) {
    const std::uint64_t N = cfg.moduli[mi];
    for (std::size_t n = 0; n < gammas.size(); ++n) {
      try {
        std::uint64_t c = relative_index(gammas[n], N, &cache, cfg.closure_cap);
        terms_per_modulus[mi].push_back(mpz_class(static_cast<unsigned long>(c)));
      } catch (const std::exception& e) {
        record_error("relative_index stage " + std::to_string(n + 1) + " mod " +
                         std::to_string(N),
                     e.what());
        break;
      }
    }
  }
  if (!cfg.cache_path.empty()) cache.save(cfg.cache_path);

  // Effective truncation depth: every reported series uses the same d.
  std::size_t effective = gammas.size();
  for (const auto& terms : terms_per_modulus)
    effective = std::min(effective, terms.size());

  nlohmann::ordered_json per_modulus = nlohmann::ordered_json::array();
  for (std::size_t mi = 0; mi < cfg.moduli.size(); ++mi) {
    nlohmann::ordered_json entry;
    entry["N"] = cfg.moduli[mi];
    nlohmann::ordered_json index_terms = nlohmann::ordered_json::array();
    IndexSequence seq;
    for (std::size_t n = 0; n < effective; ++n) {
      seq.terms.push_back(terms_per_modulus[mi][n]);
      index_terms.push_back(terms_per_modulus[mi][n].get_str());
    }
    entry["index_terms"] = index_terms;
    if (effective > 0) {
      Convergents conv = continued_fraction(seq);
      nlohmann::ordered_json cj = convergents_to_json(conv);
      entry["convergents"] = cj["convergents"];
      entry["decimal"] = cj["decimal"];
      nlohmann::ordered_json padics = nlohmann::ordered_json::array();
      for (std::uint64_t p : cfg.primes) padics.push_back(padic_to_json(padic_expand(seq, p)));
      entry["padic"] = padics;
    } else {
      entry["convergents"] = nlohmann::ordered_json::array();
      entry["padic"] = nlohmann::ordered_json::array();
    }
    per_modulus.push_back(std::move(entry));
  }

  std::vector<BraidWord> kept(gammas.begin(), gammas.begin() + effective);
  nlohmann::ordered_json traces = nlohmann::ordered_json::array();
  for (const auto& t : cfg.trace_points) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& v : trace_invariant(kept, t)) values.push_back(complex_to_json(v));
    traces.push_back({{"t", complex_to_json(t)}, {"values", values}});
  }
  nlohmann::ordered_json spectral = nlohmann::ordered_json::array();
  for (const BraidWord& g : kept) spectral.push_back(spectral_log(g));

  nlohmann::ordered_json report{
      {"schema_version", kReportSchema},
      {"tool_version", kToolVersion},
      {"config", config_to_json(cfg)},
      {"conventions",
       {"union-braid convention (direct extraction, not train-track gluing)",
        "lowest-index sigma-positive braid ordering",
        "projection: x-axis order, front strand has larger complementary coordinate"}},
      {"cascade", cascade_record_to_json(rec)},
      {"stage_braids", stage_braids},
      {"cable_checks", cable_checks},
      {"invariants",
       {{"depth", effective},
        {"per_modulus", per_modulus},
        {"traces", traces},
        {"spectral_logs", spectral}}},
      {"errors", errors}};
  if (effective == 0)
    report["note"] = "no doubling stages completed; invariant sections are empty";
  return InvariantReport{std::move(report)};
}

ReportDiff compare_reports(const InvariantReport& r1, const InvariantReport& r2) {
  const auto& a = r1.json.at("invariants");
  const auto& b = r2.json.at("invariants");
  if (a.at("depth") != b.at("depth"))
    throw InputError("compare_reports: depth mismatch");
  auto menu = [](const nlohmann::json& inv) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& e : inv.at("per_modulus")) m.push_back(e.at("N"));
    for (const auto& t : inv.at("traces")) m.push_back(t.at("t"));
    return m;
  };
  if (menu(a) != menu(b))
    throw InputError("compare_reports: (N, p, t) menus differ");

  ReportDiff diff{ReportVerdict::Indistinguishable, {}};
  for (std::size_t i = 0; i < a.at("per_modulus").size(); ++i) {
    const auto& ma = a.at("per_modulus").at(i);
    const auto& mb = b.at("per_modulus").at(i);
    if (ma.at("index_terms") != mb.at("index_terms"))
      diff.differences.push_back("index_terms differ at N=" + ma.at("N").dump());
    if (ma.at("padic") != mb.at("padic"))
      diff.differences.push_back("padic digits differ at N=" + ma.at("N").dump());
  }
  for (std::size_t i = 0; i < a.at("traces").size(); ++i)
    if (a.at("traces").at(i).at("values") != b.at("traces").at(i).at("values"))
      diff.differences.push_back("trace values differ at t=" +
                                 a.at("traces").at(i).at("t").dump());
  if (!diff.differences.empty()) diff.verdict = ReportVerdict::Distinct;
  return diff;
}

}  // namespace rtc
