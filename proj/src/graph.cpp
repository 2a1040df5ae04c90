#include "catmouse/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "catmouse/errors.hpp"

namespace catmouse {

namespace {

bool connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return false;
  std::vector<char> seen(adj.size(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw InputError("self-loop at " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InputError("duplicate edge");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
  if (!connected(adj_)) throw InputError("graph is disconnected");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "expected two integers");
    long long a = 0, b = 0;
    if (!parse_int(toks[0], a) || !parse_int(toks[1], b)) {
      throw ParseError(lineno, "malformed integer");
    }
    if (n < 0) {
      if (a < 1 || b < 0) throw ParseError(lineno, "bad header");
      n = a;
      m = b;
    } else {
      if (static_cast<long long>(edges.size()) >= m) throw ParseError(lineno, "more edges than declared");
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex out of range");
      if (a == b) throw ParseError(lineno, "self-loop");
      Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
      if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
      edges.push_back(e);
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(0, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace catmouse
