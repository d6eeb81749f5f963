// rtc: braid-theoretic invariants of period-doubling routes to chaos.
//
// Subcommands: burau, order, index, cascade, invariant, compare.
// Exit codes: 0 success, 2 config/input error, 3 numerical failure,
// 4 resource cap exceeded.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>

#include "rtc/burau.hpp"
#include "rtc/henon.hpp"
#include "rtc/modular.hpp"
#include "rtc/order.hpp"
#include "rtc/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rtc::InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw rtc::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid invariants of period-doubling routes to chaos"};
  app.require_subcommand(1);

  // burau
  auto* burau_cmd = app.add_subcommand("burau", "Burau matrix of a braid word");
  int bu_strands = 3;
  std::string bu_word;
  double bu_re = 0.0, bu_im = 0.0;
  bool bu_eval = false;
  burau_cmd->add_option("--strands", bu_strands, "strand count")->required();
  burau_cmd->add_option("--word", bu_word, "braid word, e.g. \"-1 2\"");
  auto* tre = burau_cmd->add_option("--t-re", bu_re, "evaluate at t (real part)");
  burau_cmd->add_option("--t-im", bu_im, "evaluate at t (imag part)");
  tre->trigger_on_parse();

  // order
  auto* order_cmd = app.add_subcommand("order", "Dehornoy comparison of two braid files");
  int or_strands = 3;
  std::string or_a, or_b;
  order_cmd->add_option("--strands", or_strands)->required();
  order_cmd->add_option("a", or_a, "file with first braid word")->required();
  order_cmd->add_option("b", or_b, "file with second braid word")->required();

  // index
  auto* index_cmd = app.add_subcommand("index", "relative index of a braid mod N");
  int ix_strands = 2;
  std::string ix_word, ix_cache;
  std::uint64_t ix_mod = 2, ix_cap = rtc::kDefaultClosureCap;
  index_cmd->add_option("--braid", ix_word, "braid word")->required();
  index_cmd->add_option("--strands", ix_strands)->required();
  index_cmd->add_option("--mod", ix_mod)->required();
  index_cmd->add_option("--cache", ix_cache, "image-order cache file");
  index_cmd->add_option("--cap", ix_cap, "closure element cap");

  // cascade
  auto* cascade_cmd = app.add_subcommand("cascade", "Henon period-doubling cascade record");
  rtc::PipelineConfig ca_cfg;
  std::string ca_out = "record.json";
  cascade_cmd->add_option("--b", ca_cfg.path.b);
  cascade_cmd->add_option("--a-min", ca_cfg.path.a_start);
  cascade_cmd->add_option("--a-max", ca_cfg.path.a_end);
  cascade_cmd->add_option("--max-doublings", ca_cfg.max_doublings);
  cascade_cmd->add_option("--seed", ca_cfg.seed);
  cascade_cmd->add_option("--out", ca_out);

  // invariant
  auto* inv_cmd = app.add_subcommand("invariant", "full pipeline: cascade -> report");
  rtc::PipelineConfig in_cfg;
  std::string in_config_file, in_out = "report.json";
  std::vector<std::uint64_t> in_moduli, in_primes;
  inv_cmd->add_option("--config", in_config_file, "JSON config file");
  inv_cmd->add_option("--b", in_cfg.path.b);
  inv_cmd->add_option("--a-min", in_cfg.path.a_start);
  inv_cmd->add_option("--a-max", in_cfg.path.a_end);
  inv_cmd->add_option("--max-doublings", in_cfg.max_doublings);
  inv_cmd->add_option("--mod", in_moduli, "moduli N (repeatable)");
  inv_cmd->add_option("--prime", in_primes, "p-adic bases (repeatable)");
  inv_cmd->add_option("--depth", in_cfg.depth);
  inv_cmd->add_option("--seed", in_cfg.seed);
  inv_cmd->add_option("--cache", in_cfg.cache_path);
  inv_cmd->add_option("--out", in_out);

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "compare two invariant reports");
  std::string cm_a, cm_b;
  cmp_cmd->add_option("r1", cm_a)->required();
  cmp_cmd->add_option("r2", cm_b)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (burau_cmd->parsed()) {
      rtc::BraidWord w = rtc::parse_braid(bu_word, bu_strands);
      rtc::LaurentMatrix m = rtc::burau(w);
      if (!tre->empty()) {
        auto e = rtc::evaluate(m, {bu_re, bu_im});
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : e) {
          nlohmann::ordered_json r = nlohmann::ordered_json::array();
          for (const auto& v : row) r.push_back({v.real(), v.imag()});
          rows.push_back(std::move(r));
        }
        std::cout << rows.dump(2) << "\n";
      } else {
        std::cout << rtc::laurent_matrix_to_json(m).dump(2) << "\n";
      }
    } else if (order_cmd->parsed()) {
      rtc::BraidWord a = rtc::parse_braid(read_file(or_a), or_strands);
      rtc::BraidWord b = rtc::parse_braid(read_file(or_b), or_strands);
      switch (rtc::compare(a, b)) {
        case rtc::ComparisonResult::Less: std::cout << "LESS\n"; break;
        case rtc::ComparisonResult::Equal: std::cout << "EQUAL\n"; break;
        case rtc::ComparisonResult::Greater: std::cout << "GREATER\n"; break;
      }
    } else if (index_cmd->parsed()) {
      rtc::BraidWord g = rtc::parse_braid(ix_word, ix_strands);
      rtc::ImageOrderCache cache;
      if (!ix_cache.empty()) cache.load(ix_cache);
      std::cout << rtc::relative_index(g, ix_mod, &cache, ix_cap) << "\n";
      if (!ix_cache.empty()) cache.save(ix_cache);
    } else if (cascade_cmd->parsed()) {
      const double b = ca_cfg.path.b;
      const double disc = (1.0 + b) * (1.0 + b) + 4.0 * ca_cfg.path.a_start;
      if (disc < 0.0) throw rtc::InputError("no fixed point at a-min");
      const double x0 = (-(1.0 + b) + std::sqrt(disc)) / 2.0;
      rtc::MapOrbit initial =
          rtc::find_periodic_orbit({ca_cfg.path.a_start, b}, 1, {x0, x0});
      rtc::CascadeConfig cc;
      cc.max_doublings = ca_cfg.max_doublings;
      rtc::CascadeRecord rec = rtc::continue_cascade(ca_cfg.path, initial, cc);
      write_file(ca_out, rtc::cascade_record_to_json(rec).dump(2) + "\n");
      std::cout << "doublings: " << rec.doubling_params.size() << "\n";
      for (double t : rec.doubling_params) std::cout << "  t = " << t << "\n";
    } else if (inv_cmd->parsed()) {
      rtc::PipelineConfig cfg = in_cfg;
      if (!in_config_file.empty())
        cfg = rtc::config_from_json(nlohmann::json::parse(read_file(in_config_file)));
      if (!in_moduli.empty()) cfg.moduli = in_moduli;
      if (!in_primes.empty()) cfg.primes = in_primes;
      cfg.out_path = in_out;
      rtc::InvariantReport report = rtc::run_pipeline(cfg);
      write_file(in_out, report.json.dump(2) + "\n");
      const auto& inv = report.json["invariants"];
      std::cout << "depth: " << inv["depth"] << "\n";
      if (inv["depth"].get<int>() == 0 && report.json["cascade"]["doubling_params"].empty()
          && cfg.max_doublings > 0)
        return 3;
    } else if (cmp_cmd->parsed()) {
      rtc::InvariantReport r1{nlohmann::ordered_json::parse(read_file(cm_a))};
      rtc::InvariantReport r2{nlohmann::ordered_json::parse(read_file(cm_b))};
      rtc::ReportDiff diff = rtc::compare_reports(r1, r2);
      if (diff.verdict == rtc::ReportVerdict::Distinct) {
        std::cout << "DISTINCT\n";
        for (const std::string& d : diff.differences) std::cout << "  " << d << "\n";
      } else {
        std::cout << "INDISTINGUISHABLE\n";
      }
    }
  } catch (const rtc::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 4;
  } catch (const rtc::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
