#include "coronae/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coronae/errors.hpp"

namespace coronae {

namespace {

std::string ahu(const Graph& t, Vertex at, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex c : t.neighbors(at))
    if (c != parent) children.push_back(ahu(t, c, at));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<Vertex> centres(const Graph& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> deg = t.degrees();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex u : t.neighbors(leaf)) {
        if (deg[u] == 0) continue;
        if (--deg[u] == 1) next.push_back(u);
      }
      deg[leaf] = 0;
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& t) {
  if (!t.is_tree()) throw std::invalid_argument("tree_canonical_form: input is not a tree");
  if (t.order() == 1) return "()";
  const auto c = centres(t);
  std::string best = ahu(t, c[0], c[0]);
  if (c.size() == 2) best = std::min(best, ahu(t, c[1], c[1]));
  return best;
}

std::vector<Graph> enumerate_trees(std::size_t order, std::size_t max_order) {
  if (order == 0) throw std::invalid_argument("enumerate_trees: order must be positive");
  if (order > max_order) throw ResourceError("enumerate_trees: order " + std::to_string(order) + " exceeds limit");
  std::map<std::string, Graph> level{{"()", Graph(1)}};
  for (std::size_t n = 2; n <= order; ++n) {
    std::map<std::string, Graph> next;
    for (const auto& [key, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        GraphBuilder b(n);
        for (const auto& [x, y] : t.edges()) b.add_edge(x, y);
        b.add_edge(v, n - 1);
        Graph child = std::move(b).build();
        next.try_emplace(tree_canonical_form(child), std::move(child));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, t] : level) out.push_back(std::move(t));
  return out;
}

Graph tree_from_pruefer(const std::vector<std::size_t>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> count(n, 0);
  for (std::size_t s : seq) {
    if (s >= n) throw std::invalid_argument("tree_from_pruefer: label out of range");
    ++count[s];
  }
  GraphBuilder b(n);
  for (std::size_t s : seq) {
    Vertex leaf = 0;
    while (count[leaf] != 0) ++leaf;
    b.add_edge(leaf, s);
    count[leaf] = static_cast<std::size_t>(-1);
    --count[s];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (count[v] == 0) last.push_back(v);
  b.add_edge(last[0], last[1]);
  return std::move(b).build();
}

std::vector<Graph> enumerate_trees_pruefer(std::size_t order) {
  if (order == 0) throw std::invalid_argument("enumerate_trees_pruefer: order must be positive");
  if (order > 9) throw ResourceError("enumerate_trees_pruefer: order above 9 is impractical");
  if (order == 1) return {Graph(1)};
  if (order == 2) return {path(2)};
  std::map<std::string, Graph> seen;
  std::vector<std::size_t> seq(order - 2, 0);
  while (true) {
    Graph t = tree_from_pruefer(seq);
    seen.try_emplace(tree_canonical_form(t), std::move(t));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == order) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<Graph> out;
  for (auto& [key, t] : seen) out.push_back(std::move(t));
  return out;
}

}  // namespace coronae
