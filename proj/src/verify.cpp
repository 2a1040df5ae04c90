#include "catmouse/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "catmouse/cats.hpp"
#include "catmouse/cover.hpp"
#include "catmouse/errors.hpp"
#include "catmouse/game.hpp"
#include "catmouse/generators.hpp"
#include "catmouse/mice.hpp"
#include "catmouse/oracles.hpp"
#include "catmouse/rng.hpp"
#include "catmouse/spider_mouse.hpp"

namespace catmouse {

namespace {

using Clock = std::chrono::steady_clock;

class Tally {
 public:
  template <typename F>
  void expect(bool ok, F&& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what();
  }
  void fail(const std::string& what) {
    expect(false, [&] { return what; });
  }
  long long checks() const { return checks_; }
  long long failures() const { return failures_; }
  const std::string& first_failure() const { return first_; }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::string first_;
};

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

CriterionResult finish(int id, std::string title, const Tally& tally, const std::string& summary, const Timer& timer) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.checks = tally.checks();
  r.pass = tally.failures() == 0 && tally.checks() > 0;
  if (tally.checks() == 0) {
    r.detail = "no checks ran";
  } else if (r.pass) {
    r.detail = summary;
  } else {
    r.detail = std::to_string(tally.failures()) + " of " + std::to_string(tally.checks()) +
               " checks failed; first: " + tally.first_failure() + " | " + summary;
  }
  r.seconds = timer.seconds();
  return r;
}

void say(const VerifyLog& log, const std::string& msg) {
  if (log) log(msg);
}

struct Instance {
  GeneratedGraph gg;
  std::unique_ptr<DistanceOracle> oracle;
};

Instance instance(const std::string& spec) {
  Instance in;
  in.gg = graph_from_spec(spec);
  in.oracle = std::make_unique<DistanceOracle>(in.gg.graph);
  return in;
}

std::unique_ptr<MouseStrategy> nth_baseline_mouse(int k, std::uint64_t seed) {
  static const BaselineMouseKind kinds[] = {BaselineMouseKind::stationary, BaselineMouseKind::random_walk,
                                            BaselineMouseKind::greedy_away};
  return baseline_mouse(kinds[k % 3], seed);
}

// Farthest-point centers: start at 0, then repeatedly the vertex farthest
// from the chosen ones (lowest id on ties).
std::vector<Vertex> farthest_point_centers(const DistanceOracle& oracle, int count) {
  std::vector<Vertex> centers{0};
  std::vector<int> gap(static_cast<std::size_t>(oracle.n()));
  auto row0 = oracle.row(0);
  for (Vertex v = 0; v < oracle.n(); ++v) gap[v] = row0[v];
  while (static_cast<int>(centers.size()) < count) {
    Vertex best = 0;
    for (Vertex v = 1; v < oracle.n(); ++v) {
      if (gap[v] > gap[best]) best = v;
    }
    if (gap[best] == 0) break;
    centers.push_back(best);
    auto row = oracle.row(best);
    for (Vertex v = 0; v < oracle.n(); ++v) gap[v] = std::min(gap[v], row[v]);
  }
  return centers;
}

std::string at_step(const std::string& where, int step) { return where + " step " + std::to_string(step); }

// Checks shared by both halves of the fat criterion, on a transcript that
// covers at least step 2L-1.
void check_fat_transcript(Tally& tally, const DistanceOracle& oracle, const FatCat& cat, const Transcript& tr,
                          const std::string& where) {
  const int L = cat.cover().count();
  const int decl = 2 * L - 1;
  const int bound = cat.guarantee();
  const Vertex champ = cat.champion();
  tally.expect(tr.c[static_cast<std::size_t>(decl)] == champ,
               [&] { return where + ": query at 2L-1 is not the final champion"; });
  const int dist = oracle.distance(champ, tr.m[static_cast<std::size_t>(decl)]);
  tally.expect(dist <= bound, [&] {
    return where + ": d(u_wL, m_2L-1) = " + std::to_string(dist) + " > 4L+k = " + std::to_string(bound);
  });
  if (tr.beliefs_tracked) {
    const int rad = tr.belief_radius[static_cast<std::size_t>(decl)];
    tally.expect(rad <= bound, [&] {
      return where + ": rad(M_2L-1) = " + std::to_string(rad) + " > 4L+k = " + std::to_string(bound);
    });
  }
  // round i: champion queried at 2i-1; the next champion's distance grows by at most 2
  for (int i = 1; i < L; ++i) {
    const auto a = static_cast<std::size_t>(2 * i - 1);
    const auto b = static_cast<std::size_t>(2 * i + 1);
    const int before = oracle.distance(tr.c[a], tr.m[a]);
    const int after = oracle.distance(tr.c[b], tr.m[b]);
    tally.expect(after <= before + 2, [&] {
      return where + ": champion recurrence broken at round " + std::to_string(i) + " (" + std::to_string(before) +
             " -> " + std::to_string(after) + ")";
    });
  }
}

long long ceil_three_halves(long long K) { return (3 * K + 1) / 2; }

// ceil(9 sqrt(n) / 2)
long long ceil_nine_halves_sqrt(long long n) { return (ceil_sqrt(81 * n) + 1) / 2; }

}  // namespace

// ---- 1 ---------------------------------------------------------------------

CriterionResult verify_oracle_equivalence(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  int graphs = 0;
  int games = 0;
  constexpr int kPairs = 50;
  constexpr int kHorizon = 6;
  for (int n = 1; n <= 6; ++n) {
    const auto catalog = connected_graphs(n);
    say(log, "n=" + std::to_string(n) + ": " + std::to_string(catalog.size()) + " graphs");
    for (std::size_t gi = 0; gi < catalog.size(); ++gi) {
      ++graphs;
      auto gp = std::make_shared<const Graph>(catalog[gi]);
      DistanceOracle oracle(gp);
      for (int j = 0; j < kPairs; ++j) {
        const std::uint64_t seed = derive_seed(static_cast<std::uint64_t>(j), "n" + std::to_string(n) + "g" + std::to_string(gi));
        std::unique_ptr<CatStrategy> cat;
        switch (j % 6) {
          case 0: cat = baseline_cat(BaselineKind::sweep, n); break;
          case 1: cat = baseline_cat(BaselineKind::fixed_seed_random, n, seed); break;
          case 2: cat = baseline_cat(BaselineKind::stay, n); break;
          case 3: cat = make_sqrt_cat(oracle); break;
          case 4: cat = std::make_unique<ThinCat>(oracle, n + 1); break;
          default: cat = std::make_unique<FatCat>(scattered_cover(oracle, 2)); break;
        }
        auto mouse = nth_baseline_mouse(j / 6, seed);
        GameOptions opts;
        opts.record_beliefs = true;
        const Transcript tr = run_game(oracle, *cat, *mouse, kHorizon, opts);
        ++games;
        const auto brute = brute_force_beliefs(*gp, tr.c, tr.b);
        for (int i = 1; i <= kHorizon; ++i) {
          const auto engine = tr.beliefs[static_cast<std::size_t>(i)].members();
          tally.expect(engine == brute[static_cast<std::size_t>(i)], [&] {
            return "graph n=" + std::to_string(n) + " #" + std::to_string(gi) + " pair " + std::to_string(j) +
                   " differs at step " + std::to_string(i);
          });
        }
      }
    }
  }
  std::ostringstream os;
  os << graphs << " connected graphs (n<=6, up to isomorphism) x " << kPairs << " (cat, mouse) pairs, horizon "
     << kHorizon << ", " << games << " games";
  return finish(1, "belief DP equals brute-force reachability", tally, os.str(), timer);
}

// ---- 2 ---------------------------------------------------------------------

CriterionResult verify_fat_bound(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  long long walks = 0;
  int worst_gap = -1'000'000;  // max of d(u_wL, m_2L-1) - (4L+k)

  // (a) every lazy walk on small graphs
  for (const std::string spec : {"path:n=9", "cycle:n=10", "grid:3x3", "spider:t=3,extra=0", "rt:n=10,seed=1"}) {
    Instance in = instance(spec);
    for (int L : {2, 3}) {
      const FatCat proto(cover_from_centers(*in.oracle, farthest_point_centers(*in.oracle, L)));
      if (proto.cover().count() != L) {
        tally.fail(spec + ": could not place " + std::to_string(L) + " centers");
        continue;
      }
      for_each_lazy_walk(*in.gg.graph, 2 * L, [&](const std::vector<Vertex>& walk) {
        FatCat cat = proto;
        ScriptedMouse mouse(walk);
        const Transcript tr = run_game(*in.oracle, cat, mouse, 2 * L);
        ++walks;
        check_fat_transcript(tally, *in.oracle, cat, tr, spec + " L=" + std::to_string(L));
        const auto decl = static_cast<std::size_t>(2 * L - 1);
        worst_gap = std::max(worst_gap, in.oracle->distance(cat.champion(), tr.m[decl]) - cat.guarantee());
      });
    }
    say(log, spec + " exhaustive done");
  }

  // (b) seeded mice at scale
  long long games = 0;
  for (const std::string spec :
       {"path:n=500", "path:n=2000", "grid:20x30", "grid:45x45", "rt:n=1000,seed=1", "rt:n=2000,seed=2"}) {
    Instance in = instance(spec);
    const int n = in.oracle->n();
    for (int variant = 0; variant < 2; ++variant) {
      const FatCat proto = variant == 0 ? *make_sqrt_cat(*in.oracle)
                                        : FatCat(scattered_cover(*in.oracle, fat_separation(n, 1.0)), "fat:c=1");
      const int L = proto.cover().count();
      for (int s = 1; s <= 100; ++s) {
        FatCat cat = proto;
        auto mouse = nth_baseline_mouse(s, static_cast<std::uint64_t>(s));
        const Transcript tr = run_game(*in.oracle, cat, *mouse, 2 * L - 1);
        ++games;
        check_fat_transcript(tally, *in.oracle, cat, tr,
                             spec + " " + proto.name() + " mouse " + mouse->name());
        const auto decl = static_cast<std::size_t>(2 * L - 1);
        worst_gap = std::max(worst_gap, in.oracle->distance(cat.champion(), tr.m[decl]) - cat.guarantee());
      }
      say(log, spec + " " + proto.name() + " L=" + std::to_string(L) + " done");
    }
  }
  std::ostringstream os;
  os << walks << " exhaustive lazy walks on 5 graphs (L=2,3) + " << games
     << " seeded games on 6 graphs; max of d(u_wL,m_2L-1)-(4L+k) = " << worst_gap;
  return finish(2, "ball-cover cat within 4L+k at step 2L-1", tally, os.str(), timer);
}

// ---- 3 ---------------------------------------------------------------------

CriterionResult verify_thin_bound(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  long long games = 0;
  long long phases_checked = 0;
  long long stated_index_misses = 0;  // per-phase inequality at 2T_j - 1
  long long worst_final_gap = -1'000'000;
  int empty_sphere_holds = 0;

  for (const std::string spec : {"path:n=50", "path:n=2000", "cycle:n=50", "cycle:n=2000", "spider:t=12,extra=0",
                                 "spider:t=24,extra=0", "spider:t=44,extra=0"}) {
    Instance in = instance(spec);
    const int n = in.oracle->n();
    const int K = auto_thin_k(n);
    const ThinCat proto(*in.oracle, K);
    const int horizon = 2 * (proto.target_pairs() + K) + 4;
    for (int s = 1; s <= 100; ++s) {
      ThinCat cat = proto;
      auto mouse = nth_baseline_mouse(s, static_cast<std::uint64_t>(s));
      GameOptions opts;
      opts.track_belief = false;
      const Transcript tr = run_game(*in.oracle, cat, *mouse, horizon, opts);
      ++games;
      const std::string where = spec + " mouse " + mouse->name();
      tally.expect(cat.hold_step() > 0, [&] { return where + ": cat still searching at the horizon"; });
      auto m_at = [&](int i) { return tr.m[static_cast<std::size_t>(std::max(1, i))]; };

      for (const ThinPhase& p : cat.phases()) {
        ++phases_checked;
        const int used = p.pairs_after - p.pairs_before;
        tally.expect(used == p.sphere_size && 4 * used < p.level, [&] {
          return where + ": phase " + std::to_string(p.index) + " used " + std::to_string(used) +
                 " pairs at level " + std::to_string(p.level);
        });
        const int before = in.oracle->distance(p.anchor, m_at(2 * p.pairs_before));
        const int after = in.oracle->distance(p.next_anchor, m_at(2 * p.pairs_after));
        const bool ok = before >= K ? 2 * after <= 2 * before - p.level : 2 * after <= 3 * K;
        tally.expect(ok, [&] {
          return where + ": phase " + std::to_string(p.index) + " went " + std::to_string(before) + " -> " +
                 std::to_string(after) + " (level " + std::to_string(p.level) + ", K " + std::to_string(K) + ")";
        });
        const int b2 = in.oracle->distance(p.anchor, m_at(2 * p.pairs_before - 1));
        const int a2 = in.oracle->distance(p.next_anchor, m_at(2 * p.pairs_after - 1));
        const bool ok2 = b2 >= K ? 2 * a2 <= 2 * b2 - p.level : 2 * a2 <= 3 * K;
        if (!ok2) ++stated_index_misses;
        tally.expect(ok2, [&] {
          return where + ": phase " + std::to_string(p.index) + " at index 2T-1 went " + std::to_string(b2) + " -> " +
                 std::to_string(a2);
        });
      }

      if (cat.pairs_done() >= proto.target_pairs()) {
        const int T = cat.pairs_done();
        const int d = in.oracle->distance(cat.anchor(), m_at(2 * T - 1));
        worst_final_gap = std::max<long long>(worst_final_gap, d - ceil_three_halves(K));
        tally.expect(d <= ceil_three_halves(K), [&] {
          return where + ": d(v_J, m_2T-1) = " + std::to_string(d) + " > ceil(3K/2) = " +
                 std::to_string(ceil_three_halves(K));
        });
      } else {
        // held on an empty sphere: the anchor is within l - 1 < K of everything
        ++empty_sphere_holds;
        for (int i = std::max(1, cat.hold_step()); i <= tr.horizon; ++i) {
          const int d = in.oracle->distance(cat.anchor(), tr.m[static_cast<std::size_t>(i)]);
          tally.expect(d < K, [&] { return at_step(where + ": held anchor too far", i); });
        }
      }
    }
    say(log, spec + " K=" + std::to_string(K) + " done");
  }
  std::ostringstream os;
  os << games << " games, " << phases_checked << " phases checked at indices 2T_j and 2T_j-1; "
     << empty_sphere_holds << " games held on an empty sphere; max d(v_J,m_2T-1)-ceil(3K/2) = " << worst_final_gap
     << "; misses at 2T_j-1: " << stated_index_misses;
  return finish(3, "sphere-walk cat within 3K/2 after D/2 pair iterations", tally, os.str(), timer);
}

// ---- 4 and 5 ---------------------------------------------------------------

namespace {

const std::vector<std::string>& localization_corpus() {
  static const std::vector<std::string> corpus{"spider:t=12,extra=0", "path:n=2000", "grid:45x45",
                                               "rt:n=1000,seed=1"};
  return corpus;
}

struct LocalizationRun {
  std::string where;
  std::optional<int> success;
  int min_radius = 0;
};

// Runs cat-factory games over the corpus x mice x 20 seeds with early stop.
template <typename MakeCat>
std::vector<LocalizationRun> localization_runs(const VerifyLog& log, MakeCat&& make, int (*horizon_of)(int),
                                               long long (*d_of)(long long)) {
  std::vector<LocalizationRun> out;
  for (const auto& spec : localization_corpus()) {
    Instance in = instance(spec);
    const int n = in.oracle->n();
    const int horizon = horizon_of(n);
    const int d = static_cast<int>(d_of(n));
    auto play = [&](CatStrategy& cat, MouseStrategy& mouse) {
      GameOptions opts;
      opts.stop_at_radius = d;
      const Transcript tr = run_game(*in.oracle, cat, mouse, horizon, opts);
      const auto rep = localization_report(tr, d);
      out.push_back({spec + " " + cat.name() + " vs " + mouse.name(), rep.first_success_step, rep.min_radius});
    };
    for (int kind = 0; kind < 3; ++kind) {
      for (int s = 1; s <= 20; ++s) {
        auto cat = make(*in.oracle);
        auto mouse = nth_baseline_mouse(kind, static_cast<std::uint64_t>(s));
        play(*cat, *mouse);
      }
    }
    if (in.gg.spider) {
      // deterministic, so one game stands for all seeds
      auto cat = make(*in.oracle);
      SpiderMouse mouse(in.gg.spider->t);
      play(*cat, mouse);
    }
    say(log, spec + " done");
  }
  return out;
}

int sqrt_horizon(int n) { return static_cast<int>(ceil_sqrt(2LL * n)) + 2; }
long long sqrt_distance(long long n) { return ceil_sqrt(32 * n); }
int thin_horizon(int n) { return n; }

}  // namespace

CriterionResult verify_sqrt_localization(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  int slack_used = 0;
  int games = 0;
  std::map<std::string, int> per_graph_latest;
  const auto runs =
      localization_runs(log, [](const DistanceOracle& o) { return make_sqrt_cat(o); }, sqrt_horizon, sqrt_distance);
  for (const auto& r : runs) {
    ++games;
    tally.expect(r.success.has_value(), [&] {
      return r.where + ": no step with radius <= ceil(sqrt(32n)) by ceil(sqrt(2n))+2 (min radius " +
             std::to_string(r.min_radius) + ")";
    });
    if (r.success) {
      const std::string graph = r.where.substr(0, r.where.find(' '));
      per_graph_latest[graph] = std::max(per_graph_latest[graph], *r.success);
    }
  }
  std::ostringstream os;
  os << games << " games; latest success step per graph:";
  for (const auto& spec : localization_corpus()) {
    Instance in = instance(spec);
    const int base = static_cast<int>(ceil_sqrt(2LL * in.oracle->n()));
    const int latest = per_graph_latest.count(spec) ? per_graph_latest[spec] : -1;
    slack_used = std::max(slack_used, latest - base);
    os << " " << spec << "=" << latest << "/" << base;
  }
  os << "; slack used beyond ceil(sqrt(2n)): " << std::max(0, slack_used) << " of 2";
  return finish(4, "sqrt cat localizes to ceil(sqrt(32n)) by ceil(sqrt(2n))+2", tally, os.str(), timer);
}

CriterionResult verify_thin_localization(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  int games = 0;
  int latest = 0;
  const auto runs = localization_runs(
      log, [](const DistanceOracle& o) { return std::make_unique<ThinCat>(o, auto_thin_k(o.n())); }, thin_horizon,
      ceil_nine_halves_sqrt);
  for (const auto& r : runs) {
    ++games;
    tally.expect(r.success.has_value(), [&] {
      return r.where + ": no step with radius <= ceil(4.5 sqrt(n)) by time n (min radius " +
             std::to_string(r.min_radius) + ")";
    });
    if (r.success) latest = std::max(latest, *r.success);
  }
  std::ostringstream os;
  os << games << " games with K=ceil(3 sqrt(n)); latest first success at step " << latest;
  return finish(5, "sphere-walk cat localizes to ceil(4.5 sqrt(n)) by time n", tally, os.str(), timer);
}

// ---- 6 ---------------------------------------------------------------------

CriterionResult verify_spider_lower_bound(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  int games = 0;
  int smallest_margin = 1'000'000;  // min over runs of min_radius - floor(t/12)
  std::vector<std::string> cats{"sqrt", "thin:K=auto", "fat:c=1", "fat:c=2.83", "sweep", "stay"};
  for (int s = 1; s <= 5; ++s) cats.push_back("rand:seed=" + std::to_string(s));

  for (auto [t, extra] : {std::pair{12, 0}, std::pair{12, 7}, std::pair{24, 0}}) {
    const std::string spec = "spider:t=" + std::to_string(t) + ",extra=" + std::to_string(extra);
    Instance in = instance(spec);
    const SpiderLayout layout(SpiderSpec{t, extra});
    const int horizon = t == 12 ? 300 : 600;
    const int d = t / 12;
    for (const auto& cat_spec : cats) {
      auto cat = make_cat(cat_spec, *in.oracle, 0);
      SpiderMouse mouse(t);
      GameOptions opts;
      opts.record_beliefs = true;
      Transcript tr;
      const std::string where = spec + " vs " + cat_spec;
      try {
        tr = run_game(*in.oracle, *cat, mouse, horizon, opts);
      } catch (const std::exception& e) {
        tally.fail(where + ": game aborted: " + e.what());
        continue;
      }
      ++games;
      const auto& w = mouse.shadow();
      for (int i = 1; i <= horizon; ++i) {
        const auto si = static_cast<std::size_t>(i);
        const int rad = tr.belief_radius[si];
        smallest_margin = std::min(smallest_margin, rad - d);
        tally.expect(rad > d, [&] {
          return at_step(where + ": rad(M_i) = " + std::to_string(rad) + " <= t/12", i);
        });
        tally.expect(tr.beliefs[si].contains(w[si]), [&] { return at_step(where + ": shadow left M_i", i); });
        const int sep = in.oracle->distance(tr.m[si], w[si]);
        const bool at_center = tr.m[si] == SpiderLayout::center();
        tally.expect(at_center ? sep >= t / 6 : sep > t / 6, [&] {
          return at_step(where + ": d(m_i, w_i) = " + std::to_string(sep), i);
        });
        tally.expect(layout.branch_of(tr.m[si]) <= t, [&] { return at_step(where + ": mouse on padding", i); });
        if (!at_center) {
          tally.expect(layout.branch_of(tr.m[si]) != layout.branch_of(w[si]),
                       [&] { return at_step(where + ": mouse and shadow share a branch", i); });
        }
      }
      for (int step : mouse.drift_end_steps()) {
        if (step > horizon) continue;
        const auto si = static_cast<std::size_t>(step);
        const int sep = in.oracle->distance(tr.m[si], w[si]);
        tally.expect(3 * sep >= t && 3 * sep <= 2 * t, [&] {
          return at_step(where + ": drift ended with d(m, w) = " + std::to_string(sep), step);
        });
      }
      for (const auto& win : mouse.windows()) {
        for (int i = std::max(1, win.first_step); i <= std::min(win.last_step, horizon); ++i) {
          const int b = layout.branch_of(tr.c[static_cast<std::size_t>(i)]);
          tally.expect(b != win.branch, [&] {
            return at_step(where + ": " + win.reason + " window on branch " + std::to_string(win.branch) + " queried", i);
          });
        }
      }
      tally.expect(mouse.cycles_completed() >= 5, [&] {
        return where + ": only " + std::to_string(mouse.cycles_completed()) + " cycles";
      });
    }
    say(log, spec + " done");
  }
  std::ostringstream os;
  os << games << " games against the implemented cats (the claim itself covers every cat); "
     << "smallest min_radius - floor(t/12) = " << smallest_margin;
  return finish(6, "spider mouse keeps rad(M_i) > t/12 at every step", tally, os.str(), timer);
}

// ---- 7 ---------------------------------------------------------------------

CriterionResult verify_minimax_consistency(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  int instances = 0;
  int cat_wins = 0;
  long long replays = 0;
  int unbuildable = 0;
  const std::vector<std::string> cats{"sweep",      "stay",        "rand:seed=1", "rand:seed=2", "rand:seed=3",
                                      "sqrt",       "thin:K=auto", "fat:sep=1",   "fat:sep=2",   "fat:sep=3"};
  const std::vector<std::pair<std::string, Graph>> graphs{
      {"P3", gen_path(3)}, {"P4", gen_path(4)}, {"C4", gen_cycle(4)}, {"K1,3", gen_star(3)}};
  for (const auto& [label, g] : graphs) {
    auto gp = std::make_shared<const Graph>(g);
    DistanceOracle oracle(gp);
    for (int horizon = 1; horizon <= 8; ++horizon) {
      for (int d = 0; d <= 2; ++d) {
        ++instances;
        const std::string where = label + " H=" + std::to_string(horizon) + " d=" + std::to_string(d);
        auto solver = std::make_shared<const MinimaxSolver>(g, horizon, d);
        if (solver->value() == GameValue::mouse_wins) {
          for (const auto& spec : cats) {
            std::unique_ptr<CatStrategy> cat;
            try {
              cat = make_cat(spec, oracle, 0);
            } catch (const InputError&) {
              ++unbuildable;  // e.g. no thin level below K on this graph
              continue;
            } catch (const ConstructionError&) {
              ++unbuildable;
              continue;
            }
            tally.expect(!cat_always_localizes(g, *cat, horizon, d),
                         [&] { return where + ": " + spec + " localizes although the solver says mouse wins"; });
          }
          continue;
        }
        ++cat_wins;
        const SolverCat proto(solver);
        tally.expect(cat_always_localizes(g, proto, horizon, d),
                     [&] { return where + ": solver policy fails the universal check"; });
        for_each_lazy_walk(g, horizon, [&](const std::vector<Vertex>& walk) {
          SolverCat cat = proto;
          ScriptedMouse mouse(walk);
          GameOptions opts;
          opts.stop_at_radius = d;
          const Transcript tr = run_game(oracle, cat, mouse, horizon, opts);
          ++replays;
          tally.expect(localization_report(tr, d).first_success_step.has_value(),
                       [&] { return where + ": replayed solver policy missed d against a lazy walk"; });
        });
      }
    }
    say(log, label + " done");
  }
  std::ostringstream os;
  os << instances << " instances (" << cat_wins << " cat wins), " << replays << " engine replays of the solver policy; "
     << unbuildable << " (instance, cat) pairs skipped because the cat cannot be built";
  return finish(7, "minimax value agrees with implemented cats and solver replays", tally, os.str(), timer);
}

// ---- 8 ---------------------------------------------------------------------

CriterionResult verify_structure(const VerifyLog& log) {
  Timer timer;
  Tally tally;
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int n = 1; n <= 6; ++n) {
    int i = 0;
    for (auto& g : connected_graphs(n)) corpus.emplace_back("catalog n=" + std::to_string(n) + " #" + std::to_string(i++), g);
  }
  for (int n : {9, 10, 17, 50, 200}) {
    corpus.emplace_back("P" + std::to_string(n), gen_path(n));
    corpus.emplace_back("C" + std::to_string(n), gen_cycle(n));
    corpus.emplace_back("rt" + std::to_string(n), gen_random_tree(n, static_cast<std::uint64_t>(n)));
  }
  for (auto [r, c] : {std::pair{3, 3}, std::pair{4, 7}, std::pair{10, 10}, std::pair{20, 30}}) {
    corpus.emplace_back("grid" + std::to_string(r) + "x" + std::to_string(c), gen_grid(r, c));
  }
  for (int k : {8, 20}) corpus.emplace_back("star" + std::to_string(k), gen_star(k));
  // random connected graphs: a random tree plus seeded extra edges
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed, "structure-extra");
    const int n = 9 + static_cast<int>(rng.below(60));
    const Graph tree = gen_random_tree(n, seed);
    auto edges = tree.edges();
    const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n)));
    for (int e = 0; e < extra; ++e) {
      Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end()) edges.emplace_back(u, v);
    }
    corpus.emplace_back("random n=" + std::to_string(n) + " seed=" + std::to_string(seed), Graph(n, edges));
  }

  // spider generator counts
  int spiders = 0;
  for (int t = 1; t <= 12; ++t) {
    for (int extra : {0, 1, 5}) {
      const Graph g = gen_spider(SpiderSpec{t, extra});
      ++spiders;
      const std::string where = "spider t=" + std::to_string(t) + " extra=" + std::to_string(extra);
      tally.expect(g.n() == t * t + 1 + extra, [&] { return where + ": wrong vertex count"; });
      tally.expect(g.edge_count() == g.n() - 1, [&] { return where + ": not a tree"; });
      const int legs = t + (extra > 0 ? 1 : 0);
      tally.expect(g.degree(0) == legs, [&] { return where + ": wrong center degree"; });
      tally.expect(spider_extra(g, t) == std::optional<int>(extra), [&] { return where + ": not recognised"; });
      if (t >= 2) corpus.emplace_back(where, g);
    }
  }

  long long covers_checked = 0;
  int thin_graphs = 0;
  for (const auto& [label, g] : corpus) {
    tally.expect(parse_graph(write_graph(g)) == g, [&] { return label + ": parse/write round trip"; });
    auto gp = std::make_shared<const Graph>(g);
    DistanceOracle oracle(gp);
    const int n = g.n();
    const int diam = oracle.diameter();
    for (int sep = 1; sep <= diam + 2; ++sep) {
      const BallCover cover = scattered_cover(oracle, sep);
      ++covers_checked;
      const std::string where = label + " sep=" + std::to_string(sep);
      tally.expect(cover.radius_k == sep - 1 && covers(oracle, cover), [&] { return where + ": not a cover"; });
      bool scattered = true;
      for (std::size_t a = 0; a < cover.centers.size(); ++a) {
        for (std::size_t b = a + 1; b < cover.centers.size(); ++b) {
          if (oracle.distance(cover.centers[a], cover.centers[b]) < sep) scattered = false;
        }
      }
      tally.expect(scattered, [&] { return where + ": centers closer than the separation"; });
      const long long L = cover.count();
      // disjoint balls of radius ceil(s/2) - 1, each holding >= ceil(s/2) vertices
      if (L >= 2) {
        tally.expect(L * ((sep + 1) / 2) <= n && L * sep <= 2LL * n,
                     [&] { return where + ": " + std::to_string(L) + " centers exceed the size bound"; });
      }
    }
    if (n >= 9) {
      ++thin_graphs;
      const int K = auto_thin_k(n);
      const auto levels = thin_levels(oracle, K);
      for (Vertex v = 0; v < n; ++v) {
        tally.expect(levels[static_cast<std::size_t>(v)].has_value(), [&] {
          return label + ": vertex " + std::to_string(v) + " has no thin level below K=" + std::to_string(K);
        });
      }
    }
  }
  say(log, "structure corpus of " + std::to_string(corpus.size()) + " graphs done");
  std::ostringstream os;
  os << corpus.size() << " graphs round-tripped, " << covers_checked << " scattered covers, " << thin_graphs
     << " graphs with n>=9 checked for thin levels, " << spiders << " spiders counted";
  return finish(8, "covers, thin levels, spider counts, graph round trip", tally, os.str(), timer);
}

// ---- suites ----------------------------------------------------------------

std::vector<std::string> verify_suite_names() {
  return {"oracle", "fat", "thin", "sqrt", "lower", "minimax", "structure", "all"};
}

std::vector<CriterionResult> verify_suite(std::string_view name, const VerifyLog& log) {
  using Fn = CriterionResult (*)(const VerifyLog&);
  static const std::map<std::string, std::vector<Fn>, std::less<>> suites{
      {"oracle", {verify_oracle_equivalence}},
      {"fat", {verify_fat_bound}},
      {"thin", {verify_thin_bound, verify_thin_localization}},
      {"sqrt", {verify_sqrt_localization}},
      {"lower", {verify_spider_lower_bound}},
      {"minimax", {verify_minimax_consistency}},
      {"structure", {verify_structure}},
      {"all",
       {verify_oracle_equivalence, verify_fat_bound, verify_thin_bound, verify_sqrt_localization,
        verify_thin_localization, verify_spider_lower_bound, verify_minimax_consistency, verify_structure}}};
  auto it = suites.find(name);
  if (it == suites.end()) throw InputError("unknown verify suite '" + std::string(name) + "'");
  std::vector<CriterionResult> out;
  for (Fn fn : it->second) {
    try {
      out.push_back(fn(log));
    } catch (const std::exception& e) {
      CriterionResult r;
      r.title = "suite " + std::string(name);
      r.pass = false;
      r.detail = std::string("aborted: ") + e.what();
      out.push_back(r);
    }
  }
  return out;
}

std::string verdict_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << ": " << r.detail << " (" << r.checks
     << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s)";
  return os.str();
}

std::string verdicts_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    arr.push_back({{"criterion", r.id},
                   {"title", r.title},
                   {"pass", r.pass},
                   {"checks", r.checks},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
  }
  return nlohmann::json{{"format", "catmouse-verdicts/1"}, {"all_pass", all}, {"criteria", arr}}.dump(2);
}

}  // namespace catmouse
