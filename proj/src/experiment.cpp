#include "catmouse/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "catmouse/cats.hpp"
#include "catmouse/errors.hpp"
#include "catmouse/game.hpp"
#include "catmouse/generators.hpp"
#include "catmouse/mice.hpp"
#include "catmouse/rng.hpp"

namespace catmouse {

namespace {

const char* kSummaryVersion = "# catmouse-summary v1";

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_ll(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto dots = item.find("..");
    long long lo = 0;
    long long hi = 0;
    if (dots == std::string::npos) {
      if (!parse_ll(item, lo) || lo < 0) throw InputError("bad seed '" + item + "'");
      out.push_back(static_cast<std::uint64_t>(lo));
      continue;
    }
    if (!parse_ll(trim(item.substr(0, dots)), lo) || !parse_ll(trim(item.substr(dots + 2)), hi) || lo < 0 || hi < lo ||
        hi - lo > 1'000'000) {
      throw InputError("bad seed range '" + item + "'");
    }
    for (long long s = lo; s <= hi; ++s) out.push_back(static_cast<std::uint64_t>(s));
  }
  return out;
}

bool parse_bool(const std::string& s, bool& out) {
  if (s == "true" || s == "1" || s == "yes") {
    out = true;
    return true;
  }
  if (s == "false" || s == "0" || s == "no") {
    out = false;
    return true;
  }
  return false;
}

const std::vector<std::string>& known_tags() {
  static const std::vector<std::string> tags{"sqrt32n", "sqrt2n", "fourLplusK", "threeHalvesK", "tOver12", "n"};
  return tags;
}

struct TagContext {
  int n = 0;
  std::optional<SpiderSpec> spider;
  const CatStrategy* cat = nullptr;
};

long long resolve(const BoundValue& bv, const TagContext& ctx, std::string& rule) {
  if (bv.value) {
    rule = "explicit";
    return *bv.value;
  }
  const long long n = ctx.n;
  if (bv.tag == "sqrt32n") {
    rule = "ceil(sqrt(32n))";
    return ceil_sqrt(32 * n);
  }
  if (bv.tag == "sqrt2n") {
    rule = "ceil(sqrt(2n))";
    return ceil_sqrt(2 * n);
  }
  if (bv.tag == "n") {
    rule = "n";
    return n;
  }
  if (bv.tag == "fourLplusK") {
    const auto* fat = dynamic_cast<const FatCat*>(ctx.cat);
    if (!fat) throw InputError("bound tag fourLplusK needs a fat or sqrt cat");
    rule = "4L+k with L=" + std::to_string(fat->cover().count()) + ", k=" + std::to_string(fat->cover().radius_k);
    return fat->guarantee();
  }
  if (bv.tag == "threeHalvesK") {
    const auto* thin = dynamic_cast<const ThinCat*>(ctx.cat);
    if (!thin) throw InputError("bound tag threeHalvesK needs a thin cat");
    rule = "ceil(3K/2) with K=" + std::to_string(thin->K());
    return (3LL * thin->K() + 1) / 2;
  }
  if (bv.tag == "tOver12") {
    if (!ctx.spider) throw InputError("bound tag tOver12 needs a spider graph");
    rule = "floor(t/12) with t=" + std::to_string(ctx.spider->t);
    return ctx.spider->t / 12;
  }
  throw InputError("unknown bound tag '" + bv.tag + "'");
}

std::uint64_t row_seed(std::uint64_t seed, int repetition) {
  if (repetition == 0) return seed;
  return derive_seed(seed, "rep" + std::to_string(repetition));
}

std::string hex16(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

}  // namespace

BoundValue BoundValue::parse(std::string_view text) {
  const std::string s = trim(text);
  BoundValue bv;
  long long v = 0;
  if (parse_ll(s, v)) {
    bv.value = v;
    return bv;
  }
  const auto& tags = known_tags();
  if (std::find(tags.begin(), tags.end(), s) == tags.end()) throw InputError("unknown bound '" + s + "'");
  bv.tag = s;
  return bv;
}

std::string BoundValue::text() const { return value ? std::to_string(*value) : tag; }

std::string ExperimentConfig::canonical_text() const {
  std::ostringstream os;
  os << "name = " << name << "\n"
     << "graph = " << graph << "\n"
     << "cat = " << cat << "\n"
     << "mouse = " << mouse << "\n"
     << "horizon = " << horizon << "\n"
     << "seeds = ";
  for (std::size_t i = 0; i < seeds.size(); ++i) os << (i ? "," : "") << seeds[i];
  os << "\n"
     << "repetitions = " << repetitions << "\n"
     << "bound = " << (kind == BoundKind::upper ? "upper" : "lower") << "\n"
     << "bound_d = " << bound_d.text() << "\n"
     << "bound_t = " << (bound_t ? bound_t->text() : std::to_string(horizon)) << "\n"
     << "stop_early = " << (stop_early ? "true" : "false") << "\n";
  return os.str();
}

std::string ExperimentConfig::hash() const { return hex16(fnv1a(canonical_text())); }

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  std::vector<std::string> errors;
  std::map<std::string, int> seen;
  bool have_horizon = false;
  bool have_d = false;
  bool have_seeds = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (seen[key]++) errors.push_back(key + ": given twice");
    long long iv = 0;
    try {
      if (key == "name") {
        cfg.name = value;
      } else if (key == "graph") {
        cfg.graph = value;
      } else if (key == "cat") {
        cfg.cat = value;
      } else if (key == "mouse") {
        cfg.mouse = value;
      } else if (key == "horizon") {
        if (!parse_ll(value, iv) || iv < 1) throw InputError("must be a positive integer");
        cfg.horizon = static_cast<int>(iv);
        have_horizon = true;
      } else if (key == "seeds") {
        cfg.seeds = parse_seeds(value);
        have_seeds = true;
      } else if (key == "repetitions") {
        if (!parse_ll(value, iv) || iv < 1) throw InputError("must be a positive integer");
        cfg.repetitions = static_cast<int>(iv);
      } else if (key == "bound") {
        if (value == "upper") {
          cfg.kind = BoundKind::upper;
        } else if (value == "lower") {
          cfg.kind = BoundKind::lower;
        } else {
          throw InputError("must be upper or lower");
        }
      } else if (key == "bound_d") {
        cfg.bound_d = BoundValue::parse(value);
        have_d = true;
      } else if (key == "bound_t") {
        cfg.bound_t = BoundValue::parse(value);
      } else if (key == "stop_early") {
        if (!parse_bool(value, cfg.stop_early)) throw InputError("must be true or false");
      } else if (key == "threads") {
        if (!parse_ll(value, iv) || iv < 1 || iv > 256) throw InputError("must be in 1..256");
        cfg.threads = static_cast<int>(iv);
      } else if (key == "transcripts") {
        cfg.transcripts_dir = value;
      } else {
        throw InputError("unknown key");
      }
    } catch (const InputError& e) {
      errors.push_back(key + ": " + e.what());
    }
  }
  if (cfg.graph.empty()) errors.push_back("graph: missing");
  if (cfg.cat.empty()) errors.push_back("cat: missing");
  if (cfg.mouse.empty()) errors.push_back("mouse: missing");
  if (!have_horizon) errors.push_back("horizon: missing");
  if (!have_d) errors.push_back("bound_d: missing");
  if (have_seeds && cfg.seeds.empty()) errors.push_back("seeds: empty list");
  if (!have_seeds) errors.push_back("seeds: missing");

  if (!errors.empty()) {
    std::string msg = "bad experiment config:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw InputError(msg);
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str());
}

int ExperimentReport::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ExperimentRow& r) { return r.pass; }));
}

std::optional<int> ExperimentReport::worst_min_radius() const {
  std::optional<int> worst;
  for (const auto& r : rows) {
    if (r.min_radius < 0) continue;
    if (!worst) {
      worst = r.min_radius;
    } else if (config.kind == BoundKind::upper) {
      worst = std::max(*worst, r.min_radius);
    } else {
      worst = std::min(*worst, r.min_radius);
    }
  }
  return worst;
}

std::string ExperimentReport::note() const {
  if (config.kind == BoundKind::lower) {
    return "lower bound checked against this cat only; the claim itself quantifies over all cats";
  }
  return "upper bound: pass iff some step <= bound_t has belief radius <= bound_d";
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.seeds.empty()) throw InputError("experiment needs at least one seed");
  if (cfg.horizon < 1) throw InputError("experiment horizon must be >= 1");

  ExperimentReport report;
  report.config = cfg;
  report.config_hash = cfg.hash();

  GeneratedGraph gg = graph_from_spec(cfg.graph);
  report.graph_spec = gg.spec;
  report.n = gg.graph->n();
  DistanceOracle oracle(gg.graph);

  // Cats and mice are built once up front so spec errors surface before any game runs.
  auto probe_cat = make_cat(cfg.cat, oracle, cfg.seeds.front());
  make_mouse(cfg.mouse, cfg.seeds.front());
  TagContext ctx{report.n, gg.spider, probe_cat.get()};
  report.bounds.d = resolve(cfg.bound_d, ctx, report.bounds.d_rule);
  if (cfg.bound_t) {
    report.bounds.t = resolve(*cfg.bound_t, ctx, report.bounds.t_rule);
  } else {
    report.bounds.t = cfg.horizon;
    report.bounds.t_rule = "horizon";
  }

  struct Job {
    std::uint64_t seed;
    int repetition;
  };
  std::vector<Job> jobs;
  for (int rep = 0; rep < cfg.repetitions; ++rep) {
    for (auto s : cfg.seeds) jobs.push_back({row_seed(s, rep), rep});
  }
  report.rows.resize(jobs.size());

  if (!cfg.transcripts_dir.empty()) std::filesystem::create_directories(cfg.transcripts_dir);

  auto run_row = [&](std::size_t idx) {
    ExperimentRow row;
    row.seed = jobs[idx].seed;
    row.repetition = jobs[idx].repetition;
    try {
      auto cat = make_cat(cfg.cat, oracle, row.seed);
      auto mouse = make_mouse(cfg.mouse, row.seed);
      GameOptions opts;
      opts.graph_spec = gg.spec;
      if (cfg.kind == BoundKind::upper && cfg.stop_early) opts.stop_at_radius = static_cast<int>(report.bounds.d);
      const Transcript tr = run_game(oracle, *cat, *mouse, cfg.horizon, opts);
      const auto loc = localization_report(tr, static_cast<int>(report.bounds.d));
      row.first_success_step = loc.first_success_step;
      row.min_radius = loc.min_radius;
      row.argmin_step = loc.argmin_step;
      row.steps_played = tr.horizon;
      if (cfg.kind == BoundKind::upper) {
        row.pass = loc.first_success_step && *loc.first_success_step <= report.bounds.t;
      } else {
        row.pass = !loc.first_success_step;
      }
      if (!cfg.transcripts_dir.empty()) {
        std::ofstream out(std::filesystem::path(cfg.transcripts_dir) /
                          (report.config_hash + "_" + std::to_string(row.seed) + ".json"));
        out << transcript_to_json(tr) << "\n";
      }
    } catch (const std::exception& e) {
      row.pass = false;
      row.error = e.what();
    }
    report.rows[idx] = std::move(row);
  };

  const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(jobs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) run_row(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::sort(report.rows.begin(), report.rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.seed, a.repetition) < std::tie(b.seed, b.repetition);
  });
  return report;
}

std::string report_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << kSummaryVersion << "\n";
  os << "config_hash,seed,first_success_step,min_radius,argmin_step,bound_d,bound_t,pass\n";
  for (const auto& r : report.rows) {
    os << report.config_hash << ',' << r.seed << ',';
    if (r.first_success_step) os << *r.first_success_step;
    os << ',' << r.min_radius << ',' << r.argmin_step << ',' << report.bounds.d << ',' << report.bounds.t << ','
       << (r.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string report_json(const ExperimentReport& report) {
  using nlohmann::json;
  const auto& cfg = report.config;
  json j;
  j["format"] = "catmouse-report/1";
  j["note"] = report.note();
  j["config_hash"] = report.config_hash;
  j["config"] = {{"name", cfg.name},
                 {"graph", cfg.graph},
                 {"graph_canonical", report.graph_spec},
                 {"n", report.n},
                 {"cat", cfg.cat},
                 {"mouse", cfg.mouse},
                 {"horizon", cfg.horizon},
                 {"seeds", cfg.seeds},
                 {"repetitions", cfg.repetitions},
                 {"bound", cfg.kind == BoundKind::upper ? "upper" : "lower"},
                 {"bound_d", cfg.bound_d.text()},
                 {"bound_t", cfg.bound_t ? cfg.bound_t->text() : std::string("horizon")}};
  j["resolved"] = {{"bound_d", report.bounds.d},
                   {"bound_t", report.bounds.t},
                   {"d_rule", report.bounds.d_rule},
                   {"t_rule", report.bounds.t_rule}};
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row{{"seed", r.seed},
             {"repetition", r.repetition},
             {"first_success_step", r.first_success_step ? json(*r.first_success_step) : json(nullptr)},
             {"min_radius", r.min_radius},
             {"argmin_step", r.argmin_step},
             {"steps_played", r.steps_played},
             {"pass", r.pass}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  const auto worst = report.worst_min_radius();
  j["aggregate"] = {{"rows", report.rows.size()},
                    {"passed", report.passed()},
                    {"pass_rate", report.rows.empty() ? 0.0 : double(report.passed()) / double(report.rows.size())},
                    {"worst_min_radius", worst ? json(*worst) : json(nullptr)},
                    {"all_pass", report.all_pass()}};
  return j.dump(2);
}

}  // namespace catmouse
