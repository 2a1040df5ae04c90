#include <doctest.h>

#include <algorithm>
#include <limits>
#include <thread>

#include "catmouse/cover.hpp"
#include "catmouse/distance.hpp"
#include "catmouse/errors.hpp"
#include "catmouse/generators.hpp"
#include "catmouse/graph.hpp"
#include "catmouse/rng.hpp"
#include "catmouse/spec_string.hpp"

using namespace catmouse;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Floyd-Warshall on an adjacency matrix; shares nothing with the BFS code.
std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.n();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

RadiusResult naive_radius(const std::vector<std::vector<int>>& d, const std::vector<Vertex>& w) {
  RadiusResult best{std::numeric_limits<int>::max(), kNoVertex};
  for (Vertex v = 0; v < static_cast<Vertex>(d.size()); ++v) {
    int ecc = 0;
    for (Vertex x : w) ecc = std::max(ecc, d[v][x]);
    if (ecc < best.radius) best = {ecc, v};
  }
  return best;
}

std::vector<Graph> small_corpus() {
  return {gen_path(7),          gen_cycle(9),          gen_grid(4, 5),
          gen_star(6),          gen_random_tree(40, 3), gen_spider(SpiderSpec{5, 3}),
          gen_spider(SpiderSpec{4, 0}), gen_random_tree(25, 11)};
}

}  // namespace

TEST_CASE("bfs distances on a path") {
  const Graph p3 = gen_path(3);
  CHECK(bfs_distances(p3, 0) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(bfs_distances(p3, 3), InputError);
  CHECK_THROWS_AS(bfs_distances(p3, -1), InputError);
}

TEST_CASE("spider tips are 24 apart for t=12") {
  const Graph g = gen_spider(SpiderSpec{12, 0});
  const SpiderLayout layout(SpiderSpec{12, 0});
  const auto fw = floyd(g);
  const Vertex tip1 = layout.vertex_at(1, 12);
  const Vertex tip2 = layout.vertex_at(2, 12);
  CHECK(fw[tip1][tip2] == 24);
  CHECK(bfs_distances(g, tip1)[tip2] == 24);
}

TEST_CASE("distance oracle agrees with Floyd-Warshall in both storage modes") {
  for (const Graph& g : small_corpus()) {
    const auto fw = floyd(g);
    auto gp = share(g);
    DistanceOracle full(gp);
    DistanceOracle lazy(gp, DistanceOracle::Options{0, 3});
    CHECK(full.all_pairs());
    CHECK_FALSE(lazy.all_pairs());
    for (Vertex u = 0; u < g.n(); ++u) {
      for (Vertex v = 0; v < g.n(); ++v) {
        REQUIRE(full.distance(u, v) == fw[u][v]);
        REQUIRE(lazy.distance(u, v) == fw[u][v]);
      }
    }
  }
}

TEST_CASE("metric axioms on generated graphs") {
  for (const Graph& g : small_corpus()) {
    DistanceOracle o(share(g));
    Rng rng(17, "metric");
    for (int trial = 0; trial < 300; ++trial) {
      const auto n = static_cast<std::uint64_t>(g.n());
      const Vertex u = static_cast<Vertex>(rng.below(n));
      const Vertex v = static_cast<Vertex>(rng.below(n));
      const Vertex w = static_cast<Vertex>(rng.below(n));
      CHECK(o.distance(u, v) == o.distance(v, u));
      CHECK((o.distance(u, v) == 0) == (u == v));
      CHECK(o.distance(u, w) <= o.distance(u, v) + o.distance(v, w));
    }
  }
}

TEST_CASE("lazy oracle stays correct under concurrent readers") {
  auto gp = share(gen_grid(30, 30));
  DistanceOracle lazy(gp, DistanceOracle::Options{0, 4});
  DistanceOracle full(gp);
  std::vector<int> bad(4, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      Rng rng(static_cast<std::uint64_t>(t), "readers");
      for (int i = 0; i < 3000; ++i) {
        const Vertex u = static_cast<Vertex>(rng.below(900));
        const Vertex v = static_cast<Vertex>(rng.below(900));
        if (lazy.distance(u, v) != full.distance(u, v)) ++bad[t];
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(bad == std::vector<int>(4, 0));
}

TEST_CASE("set radius examples") {
  DistanceOracle p5(share(gen_path(5)));
  const std::vector<Vertex> single{3};
  CHECK(set_radius(p5, single) == RadiusResult{0, 3});
  const std::vector<Vertex> ends{0, 4};
  CHECK(set_radius(p5, ends) == RadiusResult{2, 2});
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  CHECK(set_radius(p5, all) == RadiusResult{2, 2});
  CHECK_THROWS_AS(set_radius(p5, std::vector<Vertex>{}), InputError);
}

TEST_CASE("set radius matches exhaustive min-max, center outside W allowed") {
  for (const Graph& g : small_corpus()) {
    const auto fw = floyd(g);
    DistanceOracle o(share(g));
    Rng rng(5, "radius");
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Vertex> w;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (rng.below(4) == 0) w.push_back(v);
      }
      if (w.empty()) w.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n()))));
      const auto expect = naive_radius(fw, w);
      REQUIRE(set_radius(o, w) == expect);
      const Vertex hint = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.n())));
      REQUIRE(set_radius(o, w, hint) == expect);
    }
  }
  // two leaves of a star: the best center is the hub, not in W
  DistanceOracle star(share(gen_star(3)));
  const std::vector<Vertex> leaves{1, 2};
  CHECK(set_radius(star, leaves) == RadiusResult{1, 0});
}

TEST_CASE("diameter") {
  CHECK(diameter(DistanceOracle(share(gen_path(5)))) == 4);
  CHECK(diameter(DistanceOracle(share(gen_star(3)))) == 2);
  CHECK(diameter(DistanceOracle(share(gen_spider(SpiderSpec{12, 0})))) == 24);
  DistanceOracle big(share(gen_path(300)), DistanceOracle::Options{0, 8});
  CHECK(big.diameter() == 299);
}

TEST_CASE("spheres") {
  DistanceOracle c10(share(gen_cycle(10)));
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(sphere(c10, v, 0) == std::vector<Vertex>{v});
    CHECK(sphere(c10, v, 3).size() == 2);
  }
  DistanceOracle p5(share(gen_path(5)));
  CHECK(sphere(p5, 0, 10).empty());
  CHECK(sphere(p5, 2, 2) == std::vector<Vertex>{0, 4});
}

TEST_CASE("scattered cover examples") {
  DistanceOracle p100(share(gen_path(100)));
  const BallCover c10 = scattered_cover(p100, 10);
  CHECK(c10.centers == std::vector<Vertex>{0, 10, 20, 30, 40, 50, 60, 70, 80, 90});
  CHECK(c10.count() == 10);
  CHECK(c10.radius_k == 9);
  CHECK(covers(p100, c10));

  const BallCover all = scattered_cover(p100, 1);
  CHECK(all.count() == 100);
  CHECK(all.radius_k == 0);

  for (const Graph& g : small_corpus()) {
    DistanceOracle o(share(g));
    const BallCover one = scattered_cover(o, o.diameter() + 1);
    CHECK(one.centers == std::vector<Vertex>{0});
    CHECK(covers(o, one));
  }
  CHECK_THROWS_AS(scattered_cover(p100, 0), InputError);
}

TEST_CASE("scattered cover properties across the corpus") {
  for (const Graph& g : small_corpus()) {
    DistanceOracle o(share(g));
    const int n = g.n();
    for (int s = 1; s <= o.diameter() + 1; ++s) {
      const BallCover c = scattered_cover(o, s);
      CHECK(covers(o, c));
      for (std::size_t a = 0; a < c.centers.size(); ++a)
        for (std::size_t b = a + 1; b < c.centers.size(); ++b) CHECK(o.distance(c.centers[a], c.centers[b]) >= s);
      CHECK(c.count() <= std::max(1, 2 * n / s));
    }
  }
}

TEST_CASE("cover from centers picks the smallest covering radius") {
  DistanceOracle p9(share(gen_path(9)));
  const BallCover c = cover_from_centers(p9, {2, 6});
  CHECK(c.radius_k == 2);
  CHECK(covers(p9, c));
  BallCover tight = c;
  tight.radius_k = 1;
  CHECK_FALSE(covers(p9, tight));
}

TEST_CASE("thin levels") {
  DistanceOracle p50(share(gen_path(50)));
  CHECK(thin_level(p50, 0, 50) == 5);
  CHECK(thin_level(p50, 49, 50) == 5);
  DistanceOracle c50(share(gen_cycle(50)));
  for (Vertex v = 0; v < 50; v += 7) CHECK(thin_level(c50, v, 50) == 9);
  CHECK_FALSE(thin_level(c50, 0, 9).has_value());
  CHECK(thin_level(c50, 0, 10) == 9);
  CHECK_FALSE(thin_level(p50, 0, 1).has_value());

  // batch version agrees with the single-vertex scan
  for (const Graph& g : small_corpus()) {
    DistanceOracle o(share(g));
    const int K = static_cast<int>(ceil_sqrt(9LL * g.n()));
    const auto all = thin_levels(o, K);
    for (Vertex v = 0; v < g.n(); ++v) CHECK(all[v] == thin_level(o, v, K));
  }
}

TEST_CASE("thin level exists for every vertex once n >= 9") {
  for (const Graph& g : small_corpus()) {
    if (g.n() < 9) continue;
    DistanceOracle o(share(g));
    const int K = static_cast<int>(ceil_sqrt(9LL * g.n()));
    for (auto lv : thin_levels(o, K)) CHECK(lv.has_value());
  }
}

TEST_CASE("ceil_sqrt") {
  CHECK(ceil_sqrt(0) == 0);
  CHECK(ceil_sqrt(1) == 1);
  CHECK(ceil_sqrt(2) == 2);
  CHECK(ceil_sqrt(290) == 18);
  CHECK(ceil_sqrt(4640) == 69);
  CHECK(ceil_sqrt(64000) == 253);
  CHECK(ceil_sqrt(4000) == 64);
  CHECK(ceil_sqrt(1LL << 40) == (1LL << 20));
  CHECK(ceil_sqrt((1LL << 40) + 1) == (1LL << 20) + 1);
}

TEST_CASE("spider generator") {
  const Graph s12 = gen_spider(SpiderSpec{12, 0});
  CHECK(s12.n() == 145);
  CHECK(s12.edge_count() == 144);
  CHECK(s12.degree(0) == 12);

  CHECK(gen_spider(SpiderSpec{1, 0}) == gen_path(2));

  const Graph padded = gen_spider(SpiderSpec{12, 7});
  CHECK(padded.n() == 152);
  CHECK(padded.degree(0) == 13);
  CHECK(spider_extra(padded, 12) == 7);
  CHECK_FALSE(spider_extra(padded, 11).has_value());
  CHECK_FALSE(spider_extra(gen_path(145), 12).has_value());

  const SpiderLayout layout(SpiderSpec{12, 7});
  for (Vertex v = 1; v < padded.n(); ++v) {
    const int b = layout.branch_of(v);
    const int depth = layout.depth_of(v);
    if (b <= 12) CHECK(layout.vertex_at(b, depth) == v);
    CHECK(DistanceOracle(share(padded)).distance(0, v) == depth);
  }
  // exactly t vertices per main branch
  std::vector<int> per_branch(14, 0);
  for (Vertex v = 1; v < padded.n(); ++v) ++per_branch[layout.branch_of(v)];
  for (int b = 1; b <= 12; ++b) CHECK(per_branch[b] == 12);
  CHECK(per_branch[13] == 7);
}

TEST_CASE("family generators") {
  const Graph p5 = gen_family(FamilyKind::path, {5, 0, 0});
  CHECK(diameter(DistanceOracle(share(p5))) == 4);
  const Graph grid = gen_family(FamilyKind::grid, {0, 3, 3});
  CHECK(grid.n() == 9);
  CHECK(grid.edge_count() == 12);
  CHECK(gen_random_tree(100, 1).edges() == gen_random_tree(100, 1).edges());
  CHECK(gen_random_tree(100, 1).edges() != gen_random_tree(100, 2).edges());
  CHECK(gen_random_tree(100, 1).edge_count() == 99);
  CHECK(gen_cycle(10).edge_count() == 10);
  CHECK(gen_star(4).degree(0) == 4);
  CHECK_THROWS_AS(gen_family(FamilyKind::path, {1, 0, 0}), InputError);
  CHECK_THROWS_AS(gen_family(FamilyKind::grid, {0, 0, 3}), InputError);
  CHECK_THROWS_AS(gen_cycle(2), InputError);
}

TEST_CASE("graph construction rejects bad edge sets") {
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 0}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}), InputError);
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{0, 2}}), InputError);
  const Graph g(3, std::vector<Edge>{{2, 1}, {1, 0}});
  CHECK(g.neighbors(1).size() == 2);
  CHECK(g.neighbors(1)[0] == 0);
  CHECK(g.in_closed_neighborhood(1, 1));
  CHECK(g.in_closed_neighborhood(0, 1));
  CHECK_FALSE(g.in_closed_neighborhood(0, 2));
}

TEST_CASE("edge-list parse and write") {
  CHECK(parse_graph("3 2\n0 1\n1 2") == gen_path(3));
  CHECK(parse_graph("# comment\n3 2\n\n1 2\n# x\n0 1\n") == gen_path(3));

  auto parse_error_line = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(parse_error_line("2 1\n0 0") == 2);
  CHECK(parse_error_line("4 2\n0 1\n2 3") == 0);  // disconnected: not tied to a line
  CHECK(parse_error_line("3 2\n0 1\n0 x") == 3);
  CHECK(parse_error_line("3 2\n0 1\n1 0") == 3);
  CHECK(parse_error_line("3 2\n0 1\n1 5") == 3);
  CHECK(parse_error_line("3 2\n0 1") == 2);  // short edge list: last line read
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0"), doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("4 2\n0 1\n2 3"), doctest::Contains("disconnected"), ParseError);

  CHECK(write_graph(Graph(3, std::vector<Edge>{{2, 1}, {1, 0}})) == "3 2\n0 1\n1 2\n");
  for (const Graph& g : small_corpus()) CHECK(parse_graph(write_graph(g)) == g);
}

TEST_CASE("spec strings") {
  const SpecString s = parse_spec_string(" spider : t=12, extra=7 ");
  CHECK(s.kind == "spider");
  CHECK(s.get_int("t") == 12);
  CHECK(s.get_int("extra") == 7);
  CHECK(s.get_int("missing", 3) == 3);
  CHECK_THROWS_AS(s.get_int("missing"), InputError);

  const SpecString g = parse_spec_string("grid:3x4");
  CHECK(g.kind == "grid");
  CHECK(g.positional == std::vector<std::string>{"3x4"});
  CHECK_THROWS_AS(parse_spec_string("fat:c=abc").get_double("c"), InputError);
}

TEST_CASE("graphs from spec strings") {
  CHECK(graph_from_spec("spider:t=12,extra=0").graph->n() == 145);
  CHECK(graph_from_spec("spider:t=12,extra=0").spider->t == 12);
  CHECK(graph_from_spec("grid:3x4").graph->n() == 12);
  CHECK(*graph_from_spec("path:5").graph == gen_path(5));
  CHECK(*graph_from_spec("path:n=5").graph == gen_path(5));
  CHECK(*graph_from_spec("rt:n=100,seed=7").graph == gen_random_tree(100, 7));
  CHECK(*graph_from_spec("cycle:n=10").graph == gen_cycle(10));
  CHECK(*graph_from_spec("star:k=3").graph == gen_star(3));
  CHECK(graph_from_spec("path:n=5").spec == graph_from_spec("path:5").spec);
  CHECK_THROWS_AS(graph_from_spec("blob:3"), InputError);
  CHECK_THROWS_AS(graph_from_spec("grid:3"), InputError);
  CHECK_THROWS_AS(graph_from_spec("spider:t=0"), InputError);
  CHECK_THROWS_AS(graph_from_spec("file:/nonexistent/graph.txt"), InputError);
}
