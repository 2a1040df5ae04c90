#include <doctest.h>

#include "catmouse/cats.hpp"
#include "catmouse/errors.hpp"
#include "catmouse/experiment.hpp"
#include "catmouse/generators.hpp"
#include "catmouse/oracles.hpp"
#include "catmouse/verify.hpp"

using namespace catmouse;

namespace {

std::vector<Vertex> all_of(int n) {
  std::vector<Vertex> v;
  for (Vertex i = 0; i < n; ++i) v.push_back(i);
  return v;
}

ExperimentConfig config(const std::string& text) { return parse_experiment_config(text); }

}  // namespace

TEST_CASE("brute-force beliefs") {
  const Graph p5 = gen_path(5);
  const std::vector<Vertex> c1{kNoVertex, 3};
  const std::vector<std::int8_t> b1{-1, -1};
  const auto one = brute_force_beliefs(p5, c1, b1);
  REQUIRE(one.size() == 2);
  CHECK(one[1] == all_of(5));

  const std::vector<Vertex> c2{kNoVertex, 0, 0};
  const std::vector<std::int8_t> b2{-1, -1, 0};
  CHECK(brute_force_beliefs(p5, c2, b2)[2] == std::vector<Vertex>{1, 2, 3, 4});
  const std::vector<std::int8_t> b2one{-1, -1, 1};
  CHECK(brute_force_beliefs(p5, c2, b2one)[2] == all_of(5));

  CHECK_THROWS_AS(brute_force_beliefs(gen_path(65), c1, b1), RefusalError);
  const std::vector<Vertex> bad{kNoVertex, 7};
  CHECK_THROWS_AS(brute_force_beliefs(p5, bad, b1), InputError);
}

TEST_CASE("minimax on tiny graphs") {
  // on P2 every bit-1 set is all of V, so the mouse never gets pinned
  const Graph p2 = gen_path(2);
  for (int h = 1; h <= 8; ++h) CHECK(MinimaxSolver(p2, h, 0).value() == GameValue::mouse_wins);
  CHECK(MinimaxSolver(p2, 1, 1).value() == GameValue::cat_wins);

  const Graph g = gen_grid(2, 3);
  CHECK(MinimaxSolver(g, 1, 2).value() == GameValue::cat_wins);
  CHECK(MinimaxSolver(g, 8, -1).value() == GameValue::mouse_wins);

  CHECK_THROWS_AS(MinimaxSolver(gen_path(11), 2, 0), RefusalError);
  CHECK_THROWS_AS(MinimaxSolver(gen_path(4), 9, 0), RefusalError);
  CHECK_THROWS_AS(MinimaxSolver(gen_path(4), 0, 0), InputError);
}

TEST_CASE("minimax value is monotone and its policy wins") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (int d = 0; d <= 1; ++d) {
        bool won_earlier = false;
        for (int h = 1; h <= 5; ++h) {
          auto solver = std::make_shared<const MinimaxSolver>(g, h, d);
          const bool won = solver->value() == GameValue::cat_wins;
          if (won_earlier) CHECK(won);
          won_earlier = won;
          if (won) {
            CHECK(MinimaxSolver(g, h, d + 1).value() == GameValue::cat_wins);
            CHECK(cat_always_localizes(g, SolverCat(solver), h, d));
          } else {
            CHECK_FALSE(cat_always_localizes(g, SweepCat(n), h, d));
            CHECK_FALSE(cat_always_localizes(g, StayCat(), h, d));
            CHECK_FALSE(cat_always_localizes(g, SeededRandomCat(n, 1), h, d));
          }
        }
      }
    }
  }
}

TEST_CASE("P4 with d = 0") {
  const Graph p4 = gen_path(4);
  auto solver = std::make_shared<const MinimaxSolver>(p4, 8, 0);
  CHECK(cat_always_localizes(p4, SolverCat(solver), 8, 0) == (solver->value() == GameValue::cat_wins));
  CHECK(solver->radius(solver->full_set()) == 2);
  CHECK(solver->update(solver->full_set(), 0, 0, 0) == 0b1110U);
}

TEST_CASE("lazy walks and the graph catalog") {
  int count = 0;
  for_each_lazy_walk(gen_path(3), 3, [&](const std::vector<Vertex>& p) {
    REQUIRE(p.size() == 4);
    ++count;
  });
  // closed neighborhoods of P3 have sizes 2, 3, 2: walks of 3 positions = 2*3+3*... counted by matrix powers
  // 1^T A^2 1 with A = adjacency + I: row sums (2,3,2), then (2+3, 2+3+2, 3+2) -> 5 + 7 + 5
  CHECK(count == 17);

  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto gs = connected_graphs(n);
    CHECK(gs.size() == expected[static_cast<std::size_t>(n - 1)]);
    for (const Graph& g : gs) CHECK(g.n() == n);
  }
  CHECK_THROWS(connected_graphs(7));
}

TEST_CASE("experiment config parsing") {
  const auto cfg = config(
      "# demo\n"
      "name = demo\n"
      "graph = spider:t=12\n"
      "cat = sqrt\n"
      "mouse = stationary\n"
      "horizon = 18\n"
      "seeds = 1..4, 9\n"
      "bound = upper\n"
      "bound_d = sqrt32n   # tag\n");
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 9});
  CHECK(cfg.bound_d.tag == "sqrt32n");
  CHECK_FALSE(cfg.bound_t.has_value());
  CHECK(cfg.hash().size() == 16);
  CHECK(config(cfg.canonical_text()).hash() == cfg.hash());

  CHECK_THROWS_AS(config("graph = path:n=5\ncat = sweep\nmouse = rw\nhorizon = 5\nbound_d = 1\nseeds =\n"), InputError);
  try {
    config("horizon = -3\nbound = sideways\nfoo = 1\ngraph = path:n=4\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    for (const char* key : {"horizon", "bound", "foo", "cat", "mouse", "bound_d", "seeds"}) {
      CHECK_MESSAGE(msg.find(key) != std::string::npos, key);
    }
  }
  CHECK(BoundValue::parse("17").value == 17);
  CHECK(BoundValue::parse("tOver12").tag == "tOver12");
  CHECK_THROWS_AS(BoundValue::parse("sqrt7n"), InputError);
}

TEST_CASE("sqrt cat meets its bound on the 12-spider") {
  const auto report = run_experiment(config(
      "graph = spider:t=12\ncat = sqrt\nmouse = stationary\nhorizon = 18\nseeds = 1..3\n"
      "bound = upper\nbound_d = sqrt32n\nbound_t = sqrt2n\n"));
  CHECK(report.n == 145);
  CHECK(report.bounds.d == 69);
  CHECK(report.bounds.t == 18);
  CHECK(report.rows.size() == 3);
  CHECK(report.all_pass());
}

TEST_CASE("spider mouse meets the lower bound against the sweep cat") {
  const auto report = run_experiment(config(
      "graph = spider:t=12\ncat = sweep\nmouse = spider:t=12\nhorizon = 300\nseeds = 0\n"
      "bound = lower\nbound_d = tOver12\n"));
  CHECK(report.bounds.d == 1);
  CHECK(report.bounds.t == 300);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].pass);
  CHECK(report.rows[0].min_radius > 1);
  CHECK(report.note().find("this cat only") != std::string::npos);
}

TEST_CASE("bound tags resolve per instance") {
  auto resolve = [](const std::string& graph, const std::string& cat, const std::string& tag) {
    return run_experiment(config("graph = " + graph + "\ncat = " + cat +
                                 "\nmouse = stationary\nhorizon = 4\nseeds = 0\nbound_d = " + tag + "\n"))
        .bounds.d;
  };
  CHECK(resolve("spider:t=12", "sqrt", "fourLplusK") == 4 + 34);
  CHECK(resolve("cycle:n=50", "thin:K=10", "threeHalvesK") == 15);
  CHECK(resolve("cycle:n=50", "thin:K=11", "threeHalvesK") == 17);
  CHECK(resolve("spider:t=24", "sweep", "tOver12") == 2);
  CHECK(resolve("path:n=2000", "sweep", "sqrt32n") == 253);
  CHECK(resolve("path:n=2000", "sweep", "sqrt2n") == 64);
  CHECK(resolve("grid:3x4", "sweep", "n") == 12);
  CHECK_THROWS_AS(resolve("path:n=50", "sweep", "fourLplusK"), InputError);
  CHECK_THROWS_AS(resolve("path:n=50", "sweep", "tOver12"), InputError);
}

TEST_CASE("summary csv is byte-identical across runs and thread counts") {
  const std::string base =
      "graph = grid:20x20\ncat = sqrt\nmouse = rw\nhorizon = 60\nseeds = 1..6\nrepetitions = 2\n"
      "bound_d = sqrt32n\nbound_t = sqrt2n\n";
  const std::string a = report_csv(run_experiment(config(base)));
  CHECK(a == report_csv(run_experiment(config(base))));
  CHECK(a == report_csv(run_experiment(config(base + "threads = 4\n"))));
  CHECK(a.rfind("# catmouse-summary v1\nconfig_hash,seed,first_success_step,min_radius,argmin_step,bound_d,bound_t,pass\n",
                0) == 0);
  int lines = 0;
  for (char ch : a) lines += ch == '\n';
  CHECK(lines == 2 + 12);
  const std::string json = report_json(run_experiment(config(base)));
  CHECK(json.find("catmouse-report/1") != std::string::npos);
}

TEST_CASE("verify suite names") {
  const auto names = verify_suite_names();
  for (const char* s : {"oracle", "fat", "thin", "sqrt", "lower", "minimax", "structure", "all"}) {
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  }
  CHECK_THROWS_AS(verify_suite("bogus"), InputError);
  CriterionResult r;
  r.id = 3;
  r.title = "demo";
  r.pass = true;
  r.checks = 12;
  r.detail = "fine";
  r.seconds = 0.5;
  CHECK(verdict_line(r) == "PASS  [3] demo: fine (12 checks, 0.50 s)");
}
