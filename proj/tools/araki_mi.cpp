// araki-mi: command-line driver for the mutual-information, audit and lattice tools.
//
// Exit codes: 0 success, 1 audited inequality violated, 2 usage or configuration
// error, 3 numerical failure. Errors are reported on stderr as one JSON object.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "araki/audit.hpp"
#include "araki/errors.hpp"
#include "araki/fermion.hpp"
#include "araki/lattice.hpp"
#include "araki/report.hpp"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int report_error(const std::string& kind, const std::string& message, int code) {
  json err = {{"error", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << err.dump() << "\n";
  return code;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("cannot parse " + what + " as JSON: " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read input file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::vector<araki::Interval> intervals_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("intervals must be a JSON array of [left, right] pairs");
  std::vector<araki::Interval> out;
  for (const auto& iv : j) {
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      throw UsageError("each interval must be a pair of numbers");
    out.push_back({iv[0].get<double>(), iv[1].get<double>()});
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    T v{};
    if (!(is >> v) || !(is >> std::ws).eof()) throw UsageError("bad entry '" + item + "' in " + what);
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

struct FermionArgs {
  std::string intervals;
  std::string input;
  int resolution = 0;
  std::string regions;
  int multiplicity = 0;
};

araki::IntervalConfig build_config(const FermionArgs& a) {
  araki::IntervalConfig cfg;
  if (!a.input.empty()) {
    const json j = read_json_file(a.input);
    if (!j.contains("intervals")) throw UsageError("input file lacks \"intervals\"");
    cfg.intervals = intervals_from_json(j["intervals"]);
    if (j.contains("resolution")) cfg.resolution = j["resolution"].get<int>();
    if (j.contains("regions")) cfg.regions = j["regions"].get<std::vector<int>>();
    if (j.contains("multiplicity")) cfg.multiplicity = j["multiplicity"].get<int>();
  }
  if (!a.intervals.empty()) cfg.intervals = intervals_from_json(parse_json_text(a.intervals, "--intervals"));
  if (cfg.intervals.empty()) throw UsageError("no intervals given (use --intervals or --input)");
  if (a.resolution > 0) cfg.resolution = a.resolution;
  if (!a.regions.empty()) cfg.regions = parse_list<int>(a.regions, "--regions");
  if (a.multiplicity > 0) cfg.multiplicity = a.multiplicity;
  cfg.validate();
  return cfg;
}

struct Output {
  std::string path = "-";
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--output,-o", out.path, "Output file, '-' for stdout");
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

int emit_audit(const araki::AuditReport& report, const Output& out) {
  araki::write_output(out.path, out.format == "csv" ? araki::audit_csv(report)
                                                    : araki::canonical_json(araki::to_json(report)));
  if (report.violations > 0) {
    json err = {{"error", "violation"},
                {"suite", report.suite},
                {"violations", report.violations},
                {"worst_margin", araki::json_number(report.worst_margin)},
                {"exit_code", kViolation}};
    std::cerr << err.dump() << "\n";
    return kViolation;
  }
  return kOk;
}

std::vector<std::vector<long long>> gram_rows(const json& j) {
  if (!j.is_array()) throw UsageError("Gram matrix must be a JSON array of rows");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError("Gram matrix rows must be arrays");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw UsageError("Gram matrix entries must be integers");
      r.push_back(v.get<long long>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual information, inequality audits and lattice embeddings"};
  app.require_subcommand(1);

  FermionArgs fermion;
  Output out;
  araki::AuditOptions audit;
  std::string fractions = "0.25,0.5,0.75,1";
  std::string resolutions = "32,64,128,256";
  std::string gram;
  std::string lattice;
  std::string input;
  long long max_dense = 4096;
  bool with_key = false;
  int index_k = 2;

  auto add_fermion_flags = [&](CLI::App* cmd) {
    cmd->add_option("--intervals", fermion.intervals, "JSON list of [left, right] intervals");
    cmd->add_option("--input,-i", fermion.input, "JSON file {\"intervals\": ..., \"resolution\": n}");
    cmd->add_option("--regions", fermion.regions, "Comma-separated region label (1 or 2) per interval");
    cmd->add_option("--multiplicity", fermion.multiplicity, "Number of fermion components");
    add_output_flags(cmd, out);
  };
  auto add_audit_flags = [&](CLI::App* cmd, std::uint64_t default_trials) {
    audit.trials = default_trials;
    cmd->add_option("--trials", audit.trials, "Number of random trials");
    cmd->add_option("--seed", audit.seed, "Seed for the trial generator");
    cmd->add_option("--tol", audit.tolerance, "Violation tolerance");
    cmd->add_option("--max-dim", audit.max_dim, "Largest random dimension");
    add_output_flags(cmd, out);
  };

  auto* mi = app.add_subcommand("mi", "Mutual information of two regions for the free chiral fermion");
  add_fermion_flags(mi);
  mi->add_option("--resolution", fermion.resolution, "Lattice sites per unit length");
  mi->add_option("--fractions", fractions, "Increasing window fractions ending at 1");

  auto* converge = app.add_subcommand("converge", "Resolution study with Richardson extrapolation");
  add_fermion_flags(converge);
  converge->add_option("--resolutions", resolutions, "Comma-separated increasing resolutions");

  auto* tau = app.add_subcommand("tau-audit", "Randomized audit of the tau inequalities");
  add_audit_flags(tau, 500);
  tau->add_flag("--with-key", with_key, "Also audit the uniform D_eps trace bound");

  auto* fan = app.add_subcommand("fan-audit", "Randomized audit of the singular-value inequalities");
  add_audit_flags(fan, 500);

  auto* index = app.add_subcommand("index-analog", "Randomized audit of the entropy-index inequalities");
  add_audit_flags(index, 500);
  index->add_option("--k", index_k, "Factor dimension k")->check(CLI::Range(2, 4));

  auto* embed = app.add_subcommand("embed", "Exact embedding of a positive lattice into Z^r");
  embed->add_option("--gram", gram, "Gram matrix as JSON rows");
  embed->add_option("--lattice", lattice, "Named root lattice (A1, A2, A3, D4, E8, ...)");
  embed->add_option("--input,-i", input, "JSON file {\"gram\": [[...]]}");
  embed->add_option("--max-dense", max_dense, "Largest r for which dense vectors are emitted");
  embed->add_option("--output,-o", out.path, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kUsage);
  }

  try {
    if (mi->parsed()) {
      const araki::IntervalConfig cfg = build_config(fermion);
      const auto series = araki::mi_convergence(cfg, parse_list<double>(fractions, "--fractions"));
      const auto paths = araki::sigma_trace_paths(araki::build_covariance(cfg));
      if (out.format == "csv") {
        araki::write_output(out.path, araki::series_csv(series));
      } else {
        json j = araki::to_json(series);
        j["mi_nats"] = araki::json_number(series.values.back());
        j["resolution"] = cfg.resolution;
        j["entropies"] = {{"s1", araki::json_number(paths.s1)},
                          {"s2", araki::json_number(paths.s2)},
                          {"s12", araki::json_number(paths.s12)},
                          {"block_path", araki::json_number(paths.block_path)}};
        araki::write_output(out.path, araki::canonical_json(j));
      }
    } else if (converge->parsed()) {
      const araki::IntervalConfig cfg = build_config(fermion);
      const auto series = araki::resolution_convergence(cfg, parse_list<int>(resolutions, "--resolutions"));
      if (out.format == "csv") {
        araki::write_output(out.path, araki::series_csv(series));
      } else {
        json j = araki::to_json(series);
        j["mi_nats"] = araki::json_number(series.values.back());
        araki::write_output(out.path, araki::canonical_json(j));
      }
    } else if (tau->parsed()) {
      araki::AuditReport report = araki::tau_audit(audit);
      if (with_key) {
        const araki::AuditReport key = araki::key_audit(audit);
        report.rows.insert(report.rows.end(), key.rows.begin(), key.rows.end());
        report.finalize();
      }
      return emit_audit(report, out);
    } else if (fan->parsed()) {
      return emit_audit(araki::fan_audit(audit), out);
    } else if (index->parsed()) {
      return emit_audit(araki::index_audit(audit, index_k), out);
    } else if (embed->parsed()) {
      const int sources = !gram.empty() + !lattice.empty() + !input.empty();
      if (sources != 1) throw UsageError("give exactly one of --gram, --lattice, --input");
      araki::GramMatrix g = [&] {
        if (!lattice.empty()) return araki::root_lattice_gram(lattice);
        const json j = gram.empty() ? read_json_file(input) : parse_json_text(gram, "--gram");
        return araki::GramMatrix::from_rows(gram_rows(j.is_object() ? j.at("gram") : j));
      }();
      const araki::RationalEmbedding e = araki::embed_rational(g);
      json j = araki::to_json(e, araki::integralize(e), max_dense);
      j["even"] = araki::is_even(g);
      j["index_kL"] = araki::big_to_json(araki::sublattice_index(g, e.k));
      araki::write_output(out.path, araki::canonical_json(j));
    }
  } catch (const UsageError& e) {
    return report_error("usage", e.what(), kUsage);
  } catch (const araki::ConfigError& e) {
    return report_error("config", e.what(), kUsage);
  } catch (const araki::DomainError& e) {
    return report_error("domain", e.what(), kUsage);
  } catch (const araki::ShapeError& e) {
    return report_error("shape", e.what(), kUsage);
  } catch (const araki::InequalityViolation& e) {
    return report_error("violation", e.what(), kViolation);
  } catch (const araki::ConvergenceError& e) {
    return report_error("convergence", e.what(), kNumerical);
  } catch (const araki::Error& e) {
    return report_error("numerical", e.what(), kNumerical);
  } catch (const json::exception& e) {
    return report_error("usage", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), kNumerical);
  }
  return kOk;
}
