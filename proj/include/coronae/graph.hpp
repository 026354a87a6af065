#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace coronae {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Stored as a dense 0/1 adjacency matrix; the edge list is derived on
/// demand in (u < v, lexicographic) order. Instances are immutable once
/// constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  /// Throws std::invalid_argument on self-loops, out-of-range endpoints or
  /// repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u * n_ + v] != 0; }
  std::size_t degree(Vertex v) const noexcept;
  std::vector<std::size_t> degrees() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Row-major n*n 0/1 adjacency matrix.
  std::span<const std::uint8_t> adjacency() const noexcept { return adj_; }

  /// Induced subgraph on `keep`, relabelled 0..|keep|-1 in the given order.
  Graph induced(std::span<const Vertex> keep) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  bool is_regular() const;
  bool is_connected() const;
  bool is_tree() const { return n_ > 0 && m_ + 1 == n_ && is_connected(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void connect(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;

  friend class GraphBuilder;
};

/// Mutable accumulator for graphs built edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  /// Ignores edges already present; throws on loops or out-of-range endpoints.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Star on n vertices: vertex 0 is the centre, n-1 leaves.
Graph star(std::size_t n);
Graph complete(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> parts);
inline Graph complete_bipartite(std::size_t p, std::size_t q) {
  const std::size_t parts[] = {p, q};
  return complete_multipartite(parts);
}
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

/// 0-indexed corona label of vertex `k` of the copy of H attached to G-vertex
/// `i`, for |G| = m. The 1-indexed form is (i+1) + m(k+1).
constexpr Vertex corona_label(std::size_t m, Vertex i, Vertex k) noexcept { return i + m * (k + 1); }

/// Corona G∘H: vertices 0..m-1 are G, vertex corona_label(m, i, k) is h_k in
/// the copy of H attached to G-vertex i. Throws std::invalid_argument if
/// either graph is empty.
Graph corona(const Graph& g, const Graph& h);

/// Switching graph: adjacency I2 ⊗ A_T + [[0,1],[1,0]] ⊗ A_{complement T}.
/// Every vertex of the result has degree |T|-1.
Graph switching_graph(const Graph& t);

}  // namespace coronae
