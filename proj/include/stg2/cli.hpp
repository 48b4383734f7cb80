#pragma once

// Command-line surface. run_cli takes argv (program name stripped) plus the
// two output streams and returns the process exit status: 0 on success, 1 on
// configuration errors, 2 on internal invariant violations. All heavy work
// lives in the library headers; this file only parses flags, resolves curve
// and group names, and serializes results (CSV on stdout, JSON for
// classification reports).

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stg2/cache.hpp"
#include "stg2/catalog.hpp"
#include "stg2/corpus.hpp"
#include "stg2/counting.hpp"
#include "stg2/curve.hpp"
#include "stg2/irreps.hpp"
#include "stg2/moments.hpp"
#include "stg2/sample.hpp"
#include "stg2/stats.hpp"

namespace stg2 {

struct RunConfig {
  std::string target;
  u32 pmin = 3;
  u32 pmax = 2048;
  std::vector<long long> base_d;
  int degree = 6;
  long long n = 10000;
  u64 seed = 12345;
  unsigned threads = 1;
  std::optional<std::string> cache_dir;

  void validate() const {
    if (pmin < 3 || pmin > pmax) throw ConfigError("prime range requires 3 <= pmin <= pmax");
    if (n < 1) throw ConfigError("sample count must be at least 1");
    if (degree < 2 || degree > 8) throw ConfigError("moment degree must lie in [2, 8]");
    if (threads < 1) throw ConfigError("thread count must be at least 1");
  }
};

namespace detail {

inline std::vector<long long> parse_d_list(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    long long d = 0;
    try {
      d = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ConfigError("base field entry is not an integer: " + token);
    }
    if (used != token.size())
      throw ConfigError("base field entry is not an integer: " + token);
    out.push_back(d);
  }
  return out;
}

// Bare corpus names resolve first; anything else is read as a curve file
// holding exactly one record.
inline CurveSpec resolve_curve(const std::string& target) {
  if (const CorpusEntry* entry = find_corpus_entry(target)) return entry->curve;
  std::ifstream in(target);
  if (!in) throw ConfigError("unknown curve: " + target +
                             " (not a corpus name, and no such file)");
  std::ostringstream text;
  text << in.rdbuf();
  const std::vector<CurveSpec> curves = parse_curve_file(text.str());
  if (curves.size() != 1)
    throw ConfigError("curve file " + target + " holds " +
                      std::to_string(curves.size()) + " records; keep exactly one");
  return curves.front();
}

inline std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const std::string& lab : labels) {
    if (!out.empty()) out += '|';
    out += lab;
  }
  return out;
}

inline int cmd_groups_list(std::ostream& out) {
  out << "name,components,galois_types\n";
  for (const STGroupDescriptor& g : catalog())
    out << g.name << ',' << g.components.size() << ',' << join_labels(g.galois_types) << '\n';
  return 0;
}

inline int cmd_groups_moments(const RunConfig& config, std::ostream& out) {
  config.validate();
  const MomentTable table = moment_table(get_group(config.target), config.degree);
  out << "i,j,value\n";
  for (const auto& [key, value] : table.values)
    out << key.first << ',' << key.second << ',' << format_double(value) << '\n';
  return 0;
}

inline int cmd_groups_sample(const RunConfig& config, bool use_matrix, std::ostream& out) {
  config.validate();
  const STGroupDescriptor& group = get_group(config.target);
  Rng rng(config.seed);
  out << "a1,a2\n";
  for (long long i = 0; i < config.n; ++i) {
    const ClassInvariants inv =
        use_matrix ? matrix_invariants(sample_matrix(group, rng)) : sample_class(group, rng);
    out << format_double(inv.a1) << ',' << format_double(inv.a2) << '\n';
  }
  return 0;
}

inline int cmd_groups_verify(const std::string& target, int kmax, std::ostream& out) {
  std::vector<const STGroupDescriptor*> groups;
  if (target == "all")
    for (const STGroupDescriptor& g : catalog()) groups.push_back(&g);
  else
    groups.push_back(&get_group(target));
  bool all_pass = true;
  for (const STGroupDescriptor* g : groups) {
    const IrrepReport report = verify_irrep_axioms(*g, kmax);
    out << report.summary() << '\n';
    all_pass = all_pass && report.pass();
  }
  return all_pass ? 0 : 2;
}

inline int cmd_curve_count(const RunConfig& config, std::ostream& out) {
  config.validate();
  const CurveSpec curve = resolve_curve(config.target);
  const std::vector<CacheEntry> rows =
      ensure_cache(curve, config.pmax, config.threads, config.cache_dir);
  out << "p,a1,a2\n";
  for (const CacheEntry& e : rows)
    if (e.p >= config.pmin) out << e.p << ',' << e.a1 << ',' << e.a2 << '\n';
  return 0;
}

inline SampleCollection collect_for(const CurveSpec& curve, const RunConfig& config) {
  const std::vector<CacheEntry> rows =
      ensure_cache(curve, config.pmax, config.threads, config.cache_dir);
  return collect_samples(curve, config.base_d, config.pmin, config.pmax,
                         cached_lpoly_source(rows));
}

inline int cmd_curve_classify(const RunConfig& config, std::ostream& out) {
  config.validate();
  const CurveSpec curve = resolve_curve(config.target);
  const SampleCollection collection = collect_for(curve, config);
  const EmpiricalStats stats = empirical_moments(collection.samples, config.degree);
  const ClassificationReport report = classify(stats, config.degree);

  std::map<std::string, int> skipped;
  for (const SkippedPrime& s : collection.skipped) ++skipped[s.reason];

  nlohmann::ordered_json doc;
  doc["curve"] = curve.name;
  doc["base_field"] = config.base_d;
  doc["pmin"] = config.pmin;
  doc["pmax"] = config.pmax;
  doc["degree"] = report.degree;
  doc["places"] = report.n;
  doc["skipped"] = skipped;
  doc["atom_count"] = stats.atom_count;
  doc["atom_freq"] = stats.atom_freq;
  doc["ranking"] = nlohmann::ordered_json::array();
  for (const GroupDistance& g : report.ranking) {
    nlohmann::ordered_json row;
    row["group"] = g.group;
    row["distance"] = g.distance;
    row["atom_flag"] = g.atom_flag;
    doc["ranking"].push_back(row);
  }
  out << doc.dump(2) << '\n';
  return 0;
}

inline int cmd_curve_hist(const RunConfig& config, const std::string& coordinate, int bins,
                          std::ostream& out) {
  config.validate();
  const CurveSpec curve = resolve_curve(config.target);
  const SampleCollection collection = collect_for(curve, config);
  out << emit_histogram(collection.samples, coordinate, bins);
  return 0;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sato-Tate distributions for abelian surfaces"};
  app.require_subcommand(1);

  RunConfig config;
  bool use_matrix = false;
  int kmax = 4;
  int bins = kStatsHistogramBins;
  std::string coordinate;
  std::string field_text;
  std::string verify_target = "all";

  CLI::App* groups = app.add_subcommand("groups", "exact catalog operations");
  groups->require_subcommand(1);
  CLI::App* g_list = groups->add_subcommand("list", "catalog names and component counts");
  CLI::App* g_moments = groups->add_subcommand("moments", "exact moment table as CSV");
  g_moments->add_option("group", config.target, "catalog group name")->required();
  g_moments->add_option("--degree", config.degree, "max i+j of table entries");
  CLI::App* g_sample = groups->add_subcommand("sample", "Haar samples of (a1, a2) as CSV");
  g_sample->add_option("group", config.target, "catalog group name")->required();
  g_sample->add_option("-n,--samples", config.n, "number of draws");
  g_sample->add_option("--seed", config.seed, "RNG seed");
  g_sample->add_flag("--matrix", use_matrix, "draw explicit USp(4) matrices instead of angles");
  CLI::App* g_verify = groups->add_subcommand("verify", "irreducible character axioms");
  g_verify->add_option("group", verify_target, "catalog group name or 'all'");
  g_verify->add_option("--kmax", kmax, "largest Sym parameter");

  CLI::App* curve = app.add_subcommand("curve", "point-counting operations");
  curve->require_subcommand(1);
  const auto add_sweep_flags = [&](CLI::App* cmd) {
    cmd->add_option("curve", config.target, "corpus name or curve file")->required();
    cmd->add_option("--pmin", config.pmin, "lowest rational prime");
    cmd->add_option("--pmax", config.pmax, "highest place norm");
    cmd->add_option("--threads", config.threads, "worker threads for the sweep");
    cmd->add_option_function<std::string>(
        "--cache-dir", [&](const std::string& dir) { config.cache_dir = dir; },
        "L-polynomial cache directory (default $ST_CACHE_DIR or st-cache)");
  };
  CLI::App* c_count = curve->add_subcommand("count", "L-polynomial coefficients per good prime");
  add_sweep_flags(c_count);
  CLI::App* c_classify = curve->add_subcommand("classify", "rank catalog groups by moment distance");
  add_sweep_flags(c_classify);
  c_classify->add_option("--field", field_text, "base field square generators d1[,d2]");
  c_classify->add_option("--degree", config.degree, "moment degree for the distance");
  CLI::App* c_hist = curve->add_subcommand("hist", "histogram of normalized a1 or a2");
  add_sweep_flags(c_hist);
  c_hist->add_option("--field", field_text, "base field square generators d1[,d2]");
  c_hist->add_option("--coord", coordinate, "a1 or a2")->required();
  c_hist->add_option("--bins", bins, "histogram bin count");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (c_classify->parsed() || c_hist->parsed()) {
      if (c_classify->count("--field") || c_hist->count("--field"))
        config.base_d = detail::parse_d_list(field_text);
      else if (const CorpusEntry* entry = find_corpus_entry(config.target))
        config.base_d = entry->curve.base_d;
    }
    if (c_classify->parsed() && !c_classify->count("--degree")) config.degree = 4;

    if (g_list->parsed()) return detail::cmd_groups_list(out);
    if (g_moments->parsed()) return detail::cmd_groups_moments(config, out);
    if (g_sample->parsed()) return detail::cmd_groups_sample(config, use_matrix, out);
    if (g_verify->parsed()) return detail::cmd_groups_verify(verify_target, kmax, out);
    if (c_count->parsed()) return detail::cmd_curve_count(config, out);
    if (c_classify->parsed()) return detail::cmd_curve_classify(config, out);
    if (c_hist->parsed()) return detail::cmd_curve_hist(config, coordinate, bins, out);
    throw ConfigError("no subcommand selected");
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace stg2
