#include "catmouse/generators.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "catmouse/errors.hpp"
#include "catmouse/rng.hpp"
#include "catmouse/spec_string.hpp"

namespace catmouse {

Graph gen_spider(SpiderSpec spec) {
  if (spec.t < 1 || spec.extra < 0) throw InputError("spider needs t >= 1 and extra >= 0");
  SpiderLayout layout(spec);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(layout.n() - 1));
  for (int b = 1; b <= spec.t; ++b) {
    for (int depth = 1; depth <= spec.t; ++depth) {
      edges.emplace_back(layout.vertex_at(b, depth - 1), layout.vertex_at(b, depth));
    }
  }
  const Vertex pad0 = spec.t * spec.t + 1;
  for (int i = 0; i < spec.extra; ++i) {
    edges.emplace_back(i == 0 ? 0 : pad0 + i - 1, pad0 + i);
  }
  return Graph(layout.n(), edges);
}

std::optional<int> spider_extra(const Graph& g, int t) {
  if (t < 1 || g.n() < t * t + 1) return std::nullopt;
  SpiderSpec spec{t, g.n() - t * t - 1};
  if (g == gen_spider(spec)) return spec.extra;
  return std::nullopt;
}

Graph gen_path(int n) {
  if (n < 2) throw InputError("path needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw InputError("grid needs rows, cols >= 1 and at least 2 vertices");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, edges);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw InputError("random tree needs n >= 2");
  Rng rng(seed, "random_tree");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v);
  }
  return Graph(n, edges);
}

Graph gen_star(int leaves) {
  if (leaves < 1) throw InputError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph gen_family(FamilyKind kind, FamilyParams params, std::uint64_t seed) {
  switch (kind) {
    case FamilyKind::path:
      return gen_path(params.n);
    case FamilyKind::cycle:
      return gen_cycle(params.n);
    case FamilyKind::grid:
      return gen_grid(params.rows, params.cols);
    case FamilyKind::random_tree:
      return gen_random_tree(params.n, seed);
    case FamilyKind::star:
      return gen_star(params.n);
  }
  throw InputError("unknown graph family");
}

namespace {

int int_param(const SpecString& s, const std::string& key) {
  if (!s.has(key) && s.positional.size() == 1) {
    std::istringstream in(s.positional.front());
    int v = 0;
    if (in >> v && in.eof()) return v;
    throw InputError("spec '" + s.text + "': bad value '" + s.positional.front() + "'");
  }
  long long v = s.get_int(key);
  if (v < 0 || v > 100'000'000) throw InputError("spec '" + s.text + "': '" + key + "' out of range");
  return static_cast<int>(v);
}

}  // namespace

GeneratedGraph graph_from_spec(std::string_view text) {
  SpecString s = parse_spec_string(text);
  GeneratedGraph out;
  std::ostringstream canon;
  if (s.kind == "spider") {
    SpiderSpec spec{static_cast<int>(s.get_int("t")), static_cast<int>(s.get_int("extra", 0))};
    out.graph = std::make_shared<Graph>(gen_spider(spec));
    out.spider = spec;
    canon << "spider:t=" << spec.t << ",extra=" << spec.extra;
  } else if (s.kind == "grid") {
    int rows = 0, cols = 0;
    if (s.positional.size() == 1) {
      const auto& p = s.positional.front();
      auto x = p.find('x');
      if (x == std::string::npos) throw InputError("grid spec '" + s.text + "' must look like grid:RxC");
      try {
        std::size_t used = 0;
        rows = std::stoi(p.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(p);
        cols = std::stoi(p.substr(x + 1), &used);
        if (used != p.size() - x - 1) throw std::invalid_argument(p);
      } catch (const std::logic_error&) {
        throw InputError("grid spec '" + s.text + "' must look like grid:RxC");
      }
    } else {
      rows = static_cast<int>(s.get_int("rows"));
      cols = static_cast<int>(s.get_int("cols"));
    }
    out.graph = std::make_shared<Graph>(gen_grid(rows, cols));
    canon << "grid:" << rows << 'x' << cols;
  } else if (s.kind == "rt" || s.kind == "random_tree") {
    int n = static_cast<int>(s.get_int("n"));
    auto seed = s.get_seed("seed", 0);
    out.graph = std::make_shared<Graph>(gen_random_tree(n, seed));
    canon << "rt:n=" << n << ",seed=" << seed;
  } else if (s.kind == "path") {
    int n = int_param(s, "n");
    out.graph = std::make_shared<Graph>(gen_path(n));
    canon << "path:n=" << n;
  } else if (s.kind == "cycle") {
    int n = int_param(s, "n");
    out.graph = std::make_shared<Graph>(gen_cycle(n));
    canon << "cycle:n=" << n;
  } else if (s.kind == "star") {
    int k = int_param(s, "k");
    out.graph = std::make_shared<Graph>(gen_star(k));
    canon << "star:k=" << k;
  } else if (s.kind == "file") {
    if (s.positional.empty() || s.positional.front().empty()) throw InputError("file spec needs a path");
    std::ifstream in(s.positional.front());
    if (!in) throw InputError("cannot open graph file '" + s.positional.front() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    out.graph = std::make_shared<Graph>(parse_graph(buf.str()));
    canon << "file:" << s.positional.front();
  } else {
    throw InputError("unknown graph kind '" + s.kind + "'");
  }
  out.spec = canon.str();
  return out;
}

}  // namespace catmouse
