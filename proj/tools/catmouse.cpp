// catmouse: command-line front end for the distance-feedback cat and mouse game.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catmouse/cats.hpp"
#include "catmouse/cover.hpp"
#include "catmouse/errors.hpp"
#include "catmouse/experiment.hpp"
#include "catmouse/game.hpp"
#include "catmouse/generators.hpp"
#include "catmouse/mice.hpp"
#include "catmouse/oracles.hpp"
#include "catmouse/verify.hpp"

using namespace catmouse;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string transcript_csv(const Transcript& tr) {
  std::ostringstream os;
  os << "step,cat,mouse,bit,radius,center\n";
  for (int i = 1; i <= tr.horizon; ++i) {
    const auto s = static_cast<std::size_t>(i);
    os << i << ',' << tr.c[s] << ',' << tr.m[s] << ',';
    if (tr.b[s] >= 0) os << int(tr.b[s]);
    os << ',';
    if (tr.beliefs_tracked) os << tr.belief_radius[s] << ',' << tr.belief_center[s];
    else os << ',';
    os << '\n';
  }
  return os.str();
}

std::string cover_json(const BallCover& cover, const GeneratedGraph& gg, bool valid) {
  nlohmann::json j;
  j["graph"] = gg.spec;
  j["n"] = gg.graph->n();
  j["separation"] = cover.separation;
  j["radius_k"] = cover.radius_k;
  j["count"] = cover.count();
  j["centers"] = cover.centers;
  j["covers"] = valid;
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-feedback cat and mouse on graphs: simulate, experiment, verify"};
  app.require_subcommand(1);

  std::string graph_spec;
  std::string cat_spec = "sqrt";
  std::string mouse_spec = "stationary";
  int horizon = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  bool track_belief = true;

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("--graph", graph_spec, "graph spec, e.g. spider:t=12,extra=0")->required();
  gen->add_option("--out", out, "output file (default stdout)");

  auto* sim = app.add_subcommand("simulate", "play one game and print its transcript");
  sim->add_option("--graph", graph_spec, "graph spec")->required();
  sim->add_option("--cat", cat_spec, "cat spec")->capture_default_str();
  sim->add_option("--mouse", mouse_spec, "mouse spec")->capture_default_str();
  sim->add_option("--horizon", horizon, "number of steps")->required()->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "seed for seeded strategies")->capture_default_str();
  sim->add_option("--out", out, "output file (default stdout)");
  sim->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sim->add_flag("--track-belief,!--no-track-belief", track_belief, "compute M_i and its radius each step");

  std::string config_path;
  auto* exp = app.add_subcommand("experiment", "run an experiment config and report");
  exp->add_option("config", config_path, "config file (key = value lines)")->required()->check(CLI::ExistingFile);
  exp->add_option("--out", out, "directory for report.json and summary.csv");
  exp->add_option("--format", format, "what to print: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string suite = "all";
  bool quiet = false;
  std::string verify_format = "text";
  auto* ver = app.add_subcommand("verify", "run a named acceptance suite");
  ver->add_option("suite", suite, "oracle | fat | thin | sqrt | lower | minimax | structure | all")
      ->check(CLI::IsMember(verify_suite_names()))
      ->capture_default_str();
  ver->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  ver->add_option("--out", out, "write verdicts here as well");
  ver->add_flag("--quiet", quiet, "no progress lines");

  int d = 0;
  auto* mm = app.add_subcommand("minimax", "solve a tiny instance exactly");
  mm->add_option("--graph", graph_spec, "graph spec (n <= 10)")->required();
  mm->add_option("--horizon", horizon, "horizon (<= 8)")->required()->check(CLI::PositiveNumber);
  mm->add_option("--d", d, "target distance")->required();

  int separation = 0;
  double c_factor = 0.0;
  auto* cov = app.add_subcommand("cover", "emit a scattered ball cover as JSON");
  cov->add_option("--graph", graph_spec, "graph spec")->required();
  auto* sep_opt = cov->add_option("--sep", separation, "center separation")->check(CLI::PositiveNumber);
  cov->add_option("--c", c_factor, "separation ceil(c sqrt(n))")->excludes(sep_opt);
  cov->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  try {
    if (*gen) {
      const auto gg = graph_from_spec(graph_spec);
      emit(out, write_graph(*gg.graph));
      return kExitPass;
    }

    if (*sim) {
      const auto gg = graph_from_spec(graph_spec);
      DistanceOracle oracle(gg.graph);
      auto cat = make_cat(cat_spec, oracle, seed);
      auto mouse = make_mouse(mouse_spec, seed);
      GameOptions opts;
      opts.track_belief = track_belief;
      opts.graph_spec = gg.spec;
      Transcript tr = run_game(oracle, *cat, *mouse, horizon, opts);
      tr.meta["seed"] = std::to_string(seed);
      emit(out, format == "csv" ? transcript_csv(tr) : transcript_to_json(tr));
      return kExitPass;
    }

    if (*exp) {
      const auto cfg = load_experiment_config(config_path);
      const auto report = run_experiment(cfg);
      const std::string json = report_json(report);
      const std::string csv = report_csv(report);
      if (!out.empty()) {
        std::filesystem::create_directories(out);
        emit((std::filesystem::path(out) / "report.json").string(), json);
        emit((std::filesystem::path(out) / "summary.csv").string(), csv);
      }
      std::cout << (format == "csv" ? csv : json);
      if (format == "json") std::cout << '\n';
      return report.all_pass() ? kExitPass : kExitFail;
    }

    if (*ver) {
      VerifyLog log;
      if (!quiet) log = [](const std::string& msg) { std::cerr << "  .. " << msg << '\n'; };
      const auto results = verify_suite(suite, log);
      bool all = true;
      std::string text;
      for (const auto& r : results) {
        all = all && r.pass;
        text += verdict_line(r) + "\n";
      }
      const std::string body = verify_format == "json" ? verdicts_json(results) : text;
      std::cout << body;
      if (verify_format == "json") std::cout << '\n';
      if (!out.empty()) emit(out, body);
      return all ? kExitPass : kExitFail;
    }

    if (*mm) {
      const auto gg = graph_from_spec(graph_spec);
      const MinimaxSolver solver(*gg.graph, horizon, d);
      nlohmann::json j;
      j["graph"] = gg.spec;
      j["horizon"] = horizon;
      j["d"] = d;
      j["value"] = solver.value() == GameValue::cat_wins ? "cat_wins" : "mouse_wins";
      if (solver.value() == GameValue::cat_wins) j["first_query"] = solver.first_query();
      std::cout << j.dump(2) << '\n';
      return kExitPass;
    }

    if (*cov) {
      const auto gg = graph_from_spec(graph_spec);
      DistanceOracle oracle(gg.graph);
      int sep = separation;
      if (sep == 0) sep = c_factor > 0 ? fat_separation(oracle.n(), c_factor) : static_cast<int>(ceil_sqrt(8LL * oracle.n()));
      const BallCover cover = scattered_cover(oracle, sep);
      emit(out, cover_json(cover, gg, covers(oracle, cover)));
      return kExitPass;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RefusalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
