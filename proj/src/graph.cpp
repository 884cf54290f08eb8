#include "unicyclic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <utility>

#include "unicyclic/decomposition.hpp"
#include "unicyclic/errors.hpp"

namespace unicyclic {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw GraphError("graph must have at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string label = "edge e" + std::to_string(i + 1);
    if (e.u >= n_ || e.v >= n_) throw GraphError(label + ": vertex label out of range");
    if (e.u == e.v) throw GraphError(label + ": self-loop at vertex " + std::to_string(e.u + 1));
    if (!seen.emplace(e.smaller(), e.larger()).second) {
      throw GraphError(label + ": duplicate edge {" + std::to_string(e.smaller() + 1) + "," +
                       std::to_string(e.larger() + 1) + "}");
    }
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    incidence_[cursor[edges_[i].u]++] = i;
    incidence_[cursor[edges_[i].v]++] = i;
  }

  const auto reach = bfs_distances(*this, 0);
  if (std::find(reach.begin(), reach.end(), kUnreachable) != reach.end()) {
    throw GraphError("graph is disconnected");
  }
}

std::span<const EdgeIndex> Graph::incident(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v + 1) + " out of range");
  return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree:
      return "Tree";
    case GraphClass::OddUnicyclic:
      return "OddUnicyclic";
    case GraphClass::EvenUnicyclic:
      return "EvenUnicyclic";
    case GraphClass::Other:
      return "Other";
  }
  return "Other";
}

bool is_unicyclic(GraphClass c) {
  return c == GraphClass::OddUnicyclic || c == GraphClass::EvenUnicyclic;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;

    const auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) {
      throw ParseError("expected two whitespace-separated integers", line_no);
    }
    const std::size_t a = parse_count(toks[0], line_no);
    const std::size_t b = parse_count(toks[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      if (n == 0) throw ParseError("vertex count must be positive", line_no);
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) throw ParseError("more edge lines than declared (" + std::to_string(m) + ")", line_no);
    if (a < 1 || a > n || b < 1 || b > n) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex label out of range 1.." +
                       std::to_string(n));
    }
    if (a == b) throw GraphError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(a));
    edges.push_back({a - 1, b - 1});
  }
  if (!have_header) throw ParseError("missing 'n m' header", 0);
  if (edges.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()), 0);
  }
  return Graph(n, std::move(edges));
}

Graph read_graph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

GraphClass classify(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m + 1 == n) return GraphClass::Tree;
  if (m != n) return GraphClass::Other;
  return find_cycle(g).length() % 2 == 0 ? GraphClass::EvenUnicyclic : GraphClass::OddUnicyclic;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source, EdgeIndex skip_edge) {
  std::vector<std::uint32_t> d(g.vertex_count(), kUnreachable);
  if (source >= g.vertex_count()) throw GraphError("vertex " + std::to_string(source + 1) + " out of range");
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  d[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (EdgeIndex e : g.incident(x)) {
      if (e == skip_edge) continue;
      const Vertex y = g.edges()[e].other(x);
      if (d[y] == kUnreachable) {
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return d;
}

std::size_t dist(const Graph& g, Vertex i, Vertex j) {
  if (j >= g.vertex_count()) throw GraphError("vertex " + std::to_string(j + 1) + " out of range");
  return bfs_distances(g, i)[j];
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.vertex_count()), table_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    const auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::uint32_t DistanceTable::at(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) throw GraphError("distance lookup out of range");
  return (*this)(i, j);
}

}  // namespace unicyclic
