#include "coronae/graph.hpp"

#include <stdexcept>
#include <string>

namespace coronae {

namespace {

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": graph must have at least one vertex");
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n * n, 0) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    connect(u, v);
  }
}

void Graph::connect(Vertex u, Vertex v) {
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
  ++m_;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += adj_[v * n_ + j];
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex j = 0; j < n_; ++j)
    if (adjacent(v, j)) out.push_back(j);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (adjacent(keep[a], keep[b])) out.connect(a, b);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  Graph out(n_);
  for (const auto& [u, v] : edges()) out.connect(perm[u], perm[v]);
  return out;
}

bool Graph::is_regular() const {
  if (n_ == 0) return true;
  const std::size_t d0 = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != d0) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < n_; ++v) {
      if (adjacent(u, v) && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const std::size_t n = g_.order();
  if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!g_.adjacent(u, v)) g_.connect(u, v);
  return *this;
}

Graph path(std::size_t n) {
  require_nonempty(n, "path");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  require_nonempty(n, "cycle");
  if (n < 3) throw std::invalid_argument("cycle: a simple cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph star(std::size_t n) {
  require_nonempty(n, "star");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph complete(std::size_t n) {
  require_nonempty(n, "complete");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) {
  require_nonempty(n, "empty_graph");
  return Graph(n);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: need at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) throw std::invalid_argument("complete_multipartite: parts must be positive");
    part_of.insert(part_of.end(), parts[p], p);
  }
  GraphBuilder b(part_of.size());
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  GraphBuilder out(na + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(na + u, na + v);
  return std::move(out).build();
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph corona(const Graph& g, const Graph& h) {
  require_nonempty(g.order(), "corona");
  require_nonempty(h.order(), "corona");
  const std::size_t m = g.order();
  const std::size_t n = h.order();
  GraphBuilder b(m * (n + 1));
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  const auto h_edges = h.edges();
  for (Vertex i = 0; i < m; ++i) {
    for (const auto& [k, l] : h_edges) b.add_edge(corona_label(m, i, k), corona_label(m, i, l));
    for (Vertex k = 0; k < n; ++k) b.add_edge(i, corona_label(m, i, k));
  }
  return std::move(b).build();
}

Graph switching_graph(const Graph& t) {
  require_nonempty(t.order(), "switching_graph");
  const std::size_t n = t.order();
  GraphBuilder b(2 * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (t.adjacent(u, v)) {
        b.add_edge(u, v);
        b.add_edge(n + u, n + v);
      } else {
        b.add_edge(u, n + v);
        b.add_edge(n + u, v);
      }
    }
  }
  return std::move(b).build();
}

}  // namespace coronae
