#include "coronae/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coronae/graph_io.hpp"

namespace coronae {

namespace {

using Coloring = std::vector<int>;
using Signature = std::vector<int>;

int color_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

/// Refines the colourings of several graphs together so that equal colours
/// mean the same thing in every graph. Returns false as soon as the colour
/// histograms of the graphs disagree.
bool refine_jointly(const std::vector<const Graph*>& graphs, std::vector<Coloring>& colors) {
  const auto histograms_agree = [&] {
    std::vector<std::vector<int>> hist;
    for (const auto& c : colors) {
      std::vector<int> h(static_cast<std::size_t>(color_count(c)), 0);
      for (int x : c) ++h[static_cast<std::size_t>(x)];
      hist.push_back(std::move(h));
    }
    return std::all_of(hist.begin(), hist.end(), [&](const auto& h) { return h == hist.front(); });
  };

  int classes = 0;
  for (const auto& c : colors) classes = std::max(classes, color_count(c));
  while (true) {
    std::vector<std::vector<Signature>> sigs(graphs.size());
    std::vector<Signature> all;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      for (Vertex v = 0; v < g.order(); ++v) {
        Signature s{colors[gi][v]};
        for (Vertex u = 0; u < g.order(); ++u)
          if (g.adjacent(v, u)) s.push_back(colors[gi][u]);
        std::sort(s.begin() + 1, s.end());
        sigs[gi].push_back(s);
        all.push_back(std::move(s));
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
      for (std::size_t v = 0; v < sigs[gi].size(); ++v)
        colors[gi][v] = static_cast<int>(std::lower_bound(all.begin(), all.end(), sigs[gi][v]) - all.begin());
    if (!histograms_agree()) return false;
    const int now = static_cast<int>(all.size());
    if (now == classes) return true;
    classes = now;
  }
}

Coloring degree_coloring(const Graph& g) {
  Coloring c(g.order());
  for (Vertex v = 0; v < g.order(); ++v) c[v] = static_cast<int>(g.degree(v));
  return c;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    const Coloring colors = refine_colors(g);
    // Position k may only hold vertices of colour cell_of_position_[k].
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    for (Vertex v : order) cell_of_position_.push_back(colors[v]);
    color_ = colors;
    used_.assign(n_, 0);
    placed_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    best_bits_.clear();
    have_best_ = false;
    std::vector<char> bits;
    descend(0, bits, false);
    return best_perm_;
  }

 private:
  // `ahead` means the prefix is already strictly larger than the best known.
  void descend(std::size_t k, std::vector<char>& bits, bool ahead) {
    if (k == n_) {
      if (!have_best_ || ahead) {
        best_bits_ = bits;
        have_best_ = true;
        best_perm_.assign(n_, 0);
        for (std::size_t pos = 0; pos < n_; ++pos) best_perm_[placed_[pos]] = pos;
      }
      return;
    }
    const std::size_t start = bits.size();
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_of_position_[k]) continue;
      bits.resize(start);
      for (std::size_t i = 0; i < k; ++i) bits.push_back(g_.adjacent(placed_[i], v) ? 1 : 0);
      bool now_ahead = ahead;
      if (have_best_ && !ahead) {
        const int cmp = compare(bits, start);
        if (cmp < 0) continue;
        now_ahead = cmp > 0;
      }
      used_[v] = 1;
      placed_[k] = v;
      descend(k + 1, bits, now_ahead);
      used_[v] = 0;
      // Any leaf reached below shares our prefix, so the prefix now ties the best.
      if (now_ahead) ahead = false;
    }
    bits.resize(start);
  }

  int compare(const std::vector<char>& bits, std::size_t start) const {
    for (std::size_t i = start; i < bits.size(); ++i)
      if (bits[i] != best_bits_[i]) return bits[i] > best_bits_[i] ? 1 : -1;
    return 0;
  }

  const Graph& g_;
  std::size_t n_;
  Coloring color_;
  std::vector<int> cell_of_position_;
  std::vector<char> used_;
  std::vector<Vertex> placed_;
  std::vector<char> best_bits_;
  std::vector<Vertex> best_perm_;
  bool have_best_ = false;
};

bool search_isomorphism(const Graph& a, const Graph& b, Coloring ca, Coloring cb) {
  const std::vector<const Graph*> graphs{&a, &b};
  std::vector<Coloring> colors{std::move(ca), std::move(cb)};
  if (!refine_jointly(graphs, colors)) return false;
  const int classes = color_count(colors[0]);
  if (classes == static_cast<int>(a.order())) {
    std::vector<Vertex> image(a.order());
    std::vector<Vertex> by_color(a.order());
    for (Vertex w = 0; w < b.order(); ++w) by_color[static_cast<std::size_t>(colors[1][w])] = w;
    for (Vertex v = 0; v < a.order(); ++v) image[v] = by_color[static_cast<std::size_t>(colors[0][v])];
    for (Vertex u = 0; u < a.order(); ++u)
      for (Vertex v = u + 1; v < a.order(); ++v)
        if (a.adjacent(u, v) != b.adjacent(image[u], image[v])) return false;
    return true;
  }
  // Individualise a vertex of the smallest non-trivial cell of `a`.
  std::vector<int> cell_size(static_cast<std::size_t>(classes), 0);
  for (int c : colors[0]) ++cell_size[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < classes; ++c)
    if (cell_size[static_cast<std::size_t>(c)] > 1 &&
        (target < 0 || cell_size[static_cast<std::size_t>(c)] < cell_size[static_cast<std::size_t>(target)]))
      target = c;
  Vertex v = 0;
  while (colors[0][v] != target) ++v;
  for (Vertex w = 0; w < b.order(); ++w) {
    if (colors[1][w] != target) continue;
    Coloring na = colors[0], nb = colors[1];
    na[v] = classes;
    nb[w] = classes;
    if (search_isomorphism(a, b, std::move(na), std::move(nb))) return true;
  }
  return false;
}

}  // namespace

std::vector<int> refine_colors(const Graph& g) {
  std::vector<Coloring> colors{degree_coloring(g)};
  refine_jointly({&g}, colors);
  return colors.front();
}

std::string canonical_graph6(const Graph& g) {
  if (g.order() <= 1) return emit_graph6(g);
  CanonicalSearch search(g);
  return emit_graph6(g.relabeled(search.run()));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return search_isomorphism(a, b, degree_coloring(a), degree_coloring(b));
}

}  // namespace coronae
