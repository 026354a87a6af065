#include "coronae/cospectral.hpp"

#include <map>

#include "coronae/engine.hpp"
#include "coronae/errors.hpp"
#include "coronae/graph_io.hpp"
#include "coronae/isomorphism.hpp"
#include "coronae/trees.hpp"

namespace coronae {

bool is_cospectral(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && char_poly(a) == char_poly(b);
}

bool coronal_equal(const Graph& a, const Graph& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return coronal(a).chi == coronal(b).chi;
}

CoronaCospectralityReport verify_corona_cospectrality(const Graph& g1, const Graph& g2, const Graph& h1,
                                                      const Graph& h2) {
  CoronaCospectralityReport r;
  r.g_cospectral = is_cospectral(g1, g2);
  r.left_coronas_cospectral = is_cospectral(corona(g1, h1), corona(g2, h1));
  r.h_cospectral = is_cospectral(h1, h2);
  r.h_coronal_equal = coronal_equal(h1, h2);
  r.right_coronas_cospectral = is_cospectral(corona(g1, h1), corona(g1, h2));
  return r;
}

std::vector<CospectralPair> find_tree_mates(std::size_t order) {
  if (order > 12) throw ResourceError("find_tree_mates: order " + std::to_string(order) + " exceeds 12");
  const auto trees = enumerate_trees(order);
  std::map<std::vector<std::string>, std::vector<std::size_t>> by_spectra;
  std::vector<IntPoly> polys;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    polys.push_back(char_poly(trees[i]));
    by_spectra[{to_string(polys.back()), to_string(char_poly(complement(trees[i])))}].push_back(i);
  }
  std::vector<CospectralPair> out;
  for (const auto& [key, members] : by_spectra)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        out.push_back({trees[members[a]], trees[members[b]], polys[members[a]], false});
  return out;
}

CospectralPair switching_pair(const Graph& t1, const Graph& t2) {
  if (!t1.is_tree()) throw PreconditionError("switching_pair: first graph is not a tree");
  if (!t2.is_tree()) throw PreconditionError("switching_pair: second graph is not a tree");
  if (!is_cospectral(t1, t2)) throw PreconditionError("switching_pair: trees are not cospectral");
  if (!is_cospectral(complement(t1), complement(t2)))
    throw PreconditionError("switching_pair: complements of the trees are not cospectral");

  CospectralPair out{switching_graph(t1), switching_graph(t2), {}, false};
  const std::size_t degree = t1.order() - 1;
  for (const Graph* s : {&out.first, &out.second})
    for (Vertex v = 0; v < s->order(); ++v)
      if (s->degree(v) != degree) throw InvariantError("switching graph is not (n-1)-regular");
  out.certificate = char_poly(out.first);
  if (out.certificate != char_poly(out.second)) throw InvariantError("switching graphs are not cospectral");
  if (!coronal_equal(out.first, out.second)) throw InvariantError("switching graphs have different coronals");
  out.isomorphic = are_isomorphic(out.first, out.second);
  return out;
}

std::string format_pair_record(const CospectralPair& pair) {
  return emit_graph6(pair.first) + '\t' + emit_graph6(pair.second) + '\t' + to_string(pair.certificate) + '\t' +
         (pair.isomorphic ? "iso" : "noniso");
}

}  // namespace coronae
