#include <doctest.h>

#include "catmouse/cats.hpp"
#include "catmouse/errors.hpp"
#include "catmouse/game.hpp"
#include "catmouse/generators.hpp"
#include "catmouse/mice.hpp"
#include "catmouse/oracles.hpp"
#include "catmouse/rng.hpp"

using namespace catmouse;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

VertexSet set_of(int n, std::initializer_list<Vertex> vs) {
  VertexSet s(n);
  for (Vertex v : vs) s.insert(v);
  return s;
}

// A cat with a fixed query list (repeats the last entry).
class ListCat : public CopyableCat<ListCat> {
 public:
  explicit ListCat(std::vector<Vertex> qs) : qs_(std::move(qs)) {}
  std::string name() const override { return "list"; }
  Vertex first_query() override {
    i_ = 0;
    return qs_[0];
  }
  Vertex next_query(std::optional<Bit>) override {
    i_ = std::min(i_ + 1, qs_.size() - 1);
    return qs_[i_];
  }

 private:
  std::vector<Vertex> qs_;
  std::size_t i_ = 0;
};

// Jumps two steps at once on its second move.
class TeleportMouse : public MouseStrategy {
 public:
  std::string name() const override { return "teleport"; }
  Vertex first_position(const GameView&) override { return 0; }
  Vertex next_move(const GameView& view) override { return view.step == 3 ? 2 : 0; }
};

}  // namespace

TEST_CASE("feedback bit") {
  CHECK(feedback_bit(3, 3) == 1);
  CHECK(feedback_bit(3, 4) == 0);
  CHECK(feedback_bit(0, 1) == 0);
  CHECK(feedback_bit(4, 2) == 1);
}

TEST_CASE("belief update examples on P5") {
  DistanceOracle p5(share(gen_path(5)));
  const VertexSet all = VertexSet::full(5);
  CHECK(belief_update(p5, all, 0, 0, 1) == all);
  CHECK(belief_update(p5, all, 0, 0, 0) == set_of(5, {1, 2, 3, 4}));
  // stationary mouse at u keeps u with its true bit
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex cp = 0; cp < 5; ++cp) {
      for (Vertex cc = 0; cc < 5; ++cc) {
        const Bit bit = feedback_bit(p5.distance(cp, u), p5.distance(cc, u));
        CHECK(belief_update(p5, set_of(5, {u}), cp, cc, bit).contains(u));
      }
    }
  }
  // from {0} a 0 bit while the cat sits on 0 means the mouse stepped to 1
  CHECK(belief_update(p5, set_of(5, {0}), 0, 0, 0) == set_of(5, {1}));
  // cat jumps 4 -> 0 next to the mouse: the bit must be 1
  CHECK_THROWS_AS(belief_update(p5, set_of(5, {0}), 4, 0, 0), IllegalFeedback);
}

TEST_CASE("belief update agrees with brute force on random small instances") {
  Rng rng(99, "belief-random");
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7;
    const Graph g = gen_random_tree(n, rng.next());
    auto gp = share(g);
    DistanceOracle o(gp);
    std::vector<Vertex> c{kNoVertex};
    std::vector<std::int8_t> b{-1, -1};
    std::vector<Vertex> m{kNoVertex};
    Vertex pos = static_cast<Vertex>(rng.below(n));
    for (int i = 1; i <= 6; ++i) {
      if (i > 1) {
        auto nb = g.neighbors(pos);
        const auto k = rng.below(nb.size() + 1);
        if (k < nb.size()) pos = nb[k];
      }
      m.push_back(pos);
      c.push_back(static_cast<Vertex>(rng.below(n)));
      if (i > 1) b.push_back(static_cast<std::int8_t>(feedback_bit(o.distance(c[i - 1], m[i - 1]), o.distance(c[i], m[i]))));
    }
    const auto brute = brute_force_beliefs(g, c, b);
    VertexSet cur = VertexSet::full(n);
    REQUIRE(cur.members() == brute[1]);
    for (int i = 2; i <= 6; ++i) {
      cur = belief_update(o, cur, c[i - 1], c[i], static_cast<Bit>(b[i]));
      REQUIRE(cur.members() == brute[i]);
      REQUIRE(cur.contains(m[i]));
    }
  }
}

TEST_CASE("horizon 1 records the radius of V") {
  DistanceOracle g(share(gen_grid(4, 5)));
  SweepCat cat(g.n());
  StationaryMouse mouse(3);
  const Transcript tr = run_game(g, cat, mouse, 1);
  REQUIRE(tr.horizon == 1);
  const std::vector<Vertex> all = VertexSet::full(g.n()).members();
  CHECK(tr.belief_radius[1] == set_radius(g, all).radius);
  CHECK(tr.belief_center[1] == set_radius(g, all).center);
  CHECK(tr.b[1] == -1);
}

TEST_CASE("cat sitting on a stationary mouse hears only ones") {
  DistanceOracle p5(share(gen_path(5)));
  ScriptedMouse mouse({kNoVertex, 3});
  ListCat cat({3});
  const Transcript tr = run_game(p5, cat, mouse, 6);
  for (int i = 2; i <= 6; ++i) CHECK(tr.b[i] == 1);
}

TEST_CASE("sweep cat approaching a mouse on P5") {
  DistanceOracle p5(share(gen_path(5)));
  ScriptedMouse mouse({kNoVertex, 4});
  SweepCat cat(5);
  const Transcript tr = run_game(p5, cat, mouse, 5);
  CHECK(tr.c == std::vector<Vertex>{kNoVertex, 0, 1, 2, 3, 4});
  CHECK(tr.b == std::vector<std::int8_t>{-1, -1, 1, 1, 1, 1});
  CHECK(recompute_bits(p5, tr) == tr.b);
  CHECK(tr.belief_radius[5] <= tr.belief_radius[1]);
}

TEST_CASE("illegal mouse moves are rule violations") {
  DistanceOracle p5(share(gen_path(5)));
  TeleportMouse mouse;
  StayCat cat;
  try {
    run_game(p5, cat, mouse, 5);
    FAIL("expected a rule violation");
  } catch (const RuleViolation& e) {
    CHECK(e.step() == 3);
  }
  ScriptedMouse off_graph({kNoVertex, 9});
  CHECK_THROWS_AS(run_game(p5, cat, off_graph, 2), RuleViolation);
  CHECK_THROWS_AS(run_game(p5, cat, mouse, 0), InputError);
}

TEST_CASE("localization report") {
  DistanceOracle p5(share(gen_path(5)));
  ScriptedMouse mouse({kNoVertex, 4});
  SweepCat cat(5);
  const Transcript tr = run_game(p5, cat, mouse, 5);
  const auto easy = localization_report(tr, tr.belief_radius[1]);
  CHECK(easy.first_success_step == 1);
  const auto never = localization_report(tr, -1);
  CHECK_FALSE(never.first_success_step.has_value());
  int best = tr.belief_radius[1];
  int arg = 1;
  for (int i = 2; i <= 5; ++i) {
    if (tr.belief_radius[i] < best) {
      best = tr.belief_radius[i];
      arg = i;
    }
  }
  CHECK(never.min_radius == best);
  CHECK(never.argmin_step == arg);

  GameOptions off;
  off.track_belief = false;
  SweepCat cat2(5);
  const Transcript bare = run_game(p5, cat2, mouse, 3, off);
  CHECK_THROWS_AS(localization_report(bare, 1), InputError);
}

TEST_CASE("early stop at a target radius") {
  DistanceOracle p(share(gen_path(30)));
  SweepCat cat(30);
  ScriptedMouse mouse({kNoVertex, 29});
  GameOptions opts;
  opts.stop_at_radius = 3;
  const Transcript tr = run_game(p, cat, mouse, 200, opts);
  CHECK(tr.belief_radius[tr.horizon] <= 3);
  for (int i = 1; i < tr.horizon; ++i) CHECK(tr.belief_radius[i] > 3);
  CHECK(tr.c.size() == static_cast<std::size_t>(tr.horizon) + 1);
}

TEST_CASE("true position is always in M_i and recorded beliefs match radii") {
  for (const char* spec : {"grid:6x7", "rt:n=60,seed=4", "cycle:n=31"}) {
    const auto gg = graph_from_spec(spec);
    DistanceOracle o(gg.graph);
    for (std::uint64_t s = 0; s < 6; ++s) {
      auto cat = make_cat(s % 2 ? "rand" : "sqrt", o, s);
      auto mouse = make_mouse(s % 3 == 0 ? "rw" : "greedy", s);
      GameOptions opts;
      opts.record_beliefs = true;
      const Transcript tr = run_game(o, *cat, *mouse, 40, opts);
      for (int i = 1; i <= tr.horizon; ++i) {
        CHECK(tr.beliefs[i].contains(tr.m[i]));
        const auto mem = tr.beliefs[i].members();
        CHECK(set_radius(o, mem).radius == tr.belief_radius[i]);
        CHECK(set_radius(o, mem).center == tr.belief_center[i]);
        if (i > 1) CHECK(gg.graph->in_closed_neighborhood(tr.m[i - 1], tr.m[i]));
      }
      CHECK(recompute_bits(o, tr) == tr.b);
    }
  }
}

TEST_CASE("side information only shrinks the belief set") {
  // M'_i built with an extra random constraint containing the true position is
  // always inside M_i.
  const auto gg = graph_from_spec("grid:5x6");
  DistanceOracle o(gg.graph);
  Rng rng(3, "side-info");
  for (int game = 0; game < 10; ++game) {
    auto cat = make_cat("rand", o, static_cast<std::uint64_t>(game));
    auto mouse = make_mouse("rw", static_cast<std::uint64_t>(game));
    GameOptions opts;
    opts.record_beliefs = true;
    const Transcript tr = run_game(o, *cat, *mouse, 25, opts);
    VertexSet informed = VertexSet::full(o.n());
    for (int i = 1; i <= tr.horizon; ++i) {
      if (i > 1) informed = belief_update(o, informed, tr.c[i - 1], tr.c[i], static_cast<Bit>(tr.b[i]));
      VertexSet cut(o.n());
      informed.for_each([&](Vertex v) {
        if (v == tr.m[i] || rng.below(3) != 0) cut.insert(v);
      });
      informed = cut;
      bool subset = true;
      informed.for_each([&](Vertex v) { subset = subset && tr.beliefs[i].contains(v); });
      CHECK(subset);
    }
  }
}

TEST_CASE("identical inputs give identical transcripts") {
  const auto gg = graph_from_spec("rt:n=200,seed=9");
  DistanceOracle o(gg.graph);
  auto once = [&] {
    auto cat = make_cat("rand:seed=5", o);
    auto mouse = make_mouse("rw:seed=8");
    GameOptions opts;
    opts.graph_spec = gg.spec;
    return transcript_to_json(run_game(o, *cat, *mouse, 50, opts));
  };
  CHECK(once() == once());
}

TEST_CASE("transcript json round trip") {
  const auto gg = graph_from_spec("path:n=12");
  DistanceOracle o(gg.graph);
  SweepCat cat(12);
  GreedyAwayMouse mouse(2);
  GameOptions opts;
  opts.graph_spec = gg.spec;
  const Transcript tr = run_game(o, cat, mouse, 9, opts);
  const std::string text = transcript_to_json(tr);
  CHECK(text.find("\"c\":[null") != std::string::npos);
  const Transcript back = transcript_from_json(text);
  CHECK(back.graph_spec == tr.graph_spec);
  CHECK(back.horizon == tr.horizon);
  CHECK(back.c == tr.c);
  CHECK(back.m == tr.m);
  CHECK(back.b == tr.b);
  CHECK(back.belief_radius == tr.belief_radius);
  CHECK(back.belief_center == tr.belief_center);
  CHECK(back.meta.at("cat") == "sweep");
  CHECK(transcript_to_json(back) == text);
  CHECK_THROWS(transcript_from_json("{\"horizon\": 3}"));
}
