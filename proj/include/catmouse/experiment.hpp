#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmouse {

enum class BoundKind { upper, lower };

// Either an explicit integer or one of the formula tags
// sqrt32n, sqrt2n, fourLplusK, threeHalvesK, tOver12, n.
struct BoundValue {
  std::optional<long long> value;
  std::string tag;

  static BoundValue parse(std::string_view text);  // throws InputError
  std::string text() const;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::string graph;
  std::string cat;
  std::string mouse;
  int horizon = 0;
  std::vector<std::uint64_t> seeds;
  int repetitions = 1;
  BoundKind kind = BoundKind::upper;
  BoundValue bound_d;
  // Defaults to the horizon when unset.
  std::optional<BoundValue> bound_t;
  // Upper bounds only: stop a game at its first success.
  bool stop_early = true;
  int threads = 1;
  // Directory for per-row transcript JSON; empty disables.
  std::string transcripts_dir;

  // Canonical "key = value" text; feeds the config hash.
  std::string canonical_text() const;
  // FNV-1a of canonical_text(), 16 hex digits.
  std::string hash() const;
};

// Parses "key = value" lines ('#' starts a comment). Collects every bad field
// and throws one InputError listing all of them.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::string& path);

struct ResolvedBounds {
  long long d = 0;
  long long t = 0;
  std::string d_rule;
  std::string t_rule;
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  int repetition = 0;
  std::optional<int> first_success_step;
  int min_radius = -1;
  int argmin_step = 0;
  int steps_played = 0;
  bool pass = false;
  std::string error;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string config_hash;
  std::string graph_spec;  // canonical
  int n = 0;
  ResolvedBounds bounds;
  std::vector<ExperimentRow> rows;  // sorted by (seed, repetition)

  int passed() const;
  bool all_pass() const { return passed() == static_cast<int>(rows.size()); }
  // Largest min_radius for upper bounds, smallest for lower bounds.
  std::optional<int> worst_min_radius() const;
  std::string note() const;
};

// Throws InputError when the specs or tags cannot be resolved; a game that
// breaks the rules only fails its own row.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

}  // namespace catmouse
