#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coronae/graph.hpp"
#include "coronae/poly.hpp"

namespace coronae {

struct CospectralPair {
  Graph first;
  Graph second;
  IntPoly certificate;  ///< the shared characteristic polynomial
  bool isomorphic = false;
};

/// A premise of a construction does not hold; the message names it.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_cospectral(const Graph& a, const Graph& b);
bool coronal_equal(const Graph& a, const Graph& b);

/// Outcome of checking both halves of the corona cospectrality corollary:
///  (a) G1, G2 cospectral                      ⇒ G1∘H1 and G2∘H1 cospectral;
///  (b) H1, H2 cospectral with equal coronals  ⇒ G1∘H1 and G1∘H2 cospectral.
/// Conclusions are evaluated from the explicitly built coronas, whether or not
/// the premises hold.
struct CoronaCospectralityReport {
  bool g_cospectral = false;
  bool left_coronas_cospectral = false;   ///< G1∘H1 vs G2∘H1
  bool h_cospectral = false;
  bool h_coronal_equal = false;
  bool right_coronas_cospectral = false;  ///< G1∘H1 vs G1∘H2

  bool part_a_violated() const { return g_cospectral && !left_coronas_cospectral; }
  bool part_b_violated() const { return h_cospectral && h_coronal_equal && !right_coronas_cospectral; }
  bool violated() const { return part_a_violated() || part_b_violated(); }
};

CoronaCospectralityReport verify_corona_cospectrality(const Graph& g1, const Graph& g2, const Graph& h1,
                                                      const Graph& h2);

/// Pairs of non-isomorphic trees on `order` vertices that are cospectral and
/// whose complements are cospectral. Throws ResourceError for order > 12.
std::vector<CospectralPair> find_tree_mates(std::size_t order);

/// Smallest order at which find_tree_mates returns a pair.
inline constexpr std::size_t kSmallestTreeMateOrder = 12;

/// (Sw(t1), Sw(t2)) for cospectral trees with cospectral complements. Throws
/// PreconditionError naming the failed premise, and InvariantError if the
/// resulting graphs are not (n−1)-regular, cospectral and coronal-equal.
CospectralPair switching_pair(const Graph& t1, const Graph& t2);

/// Tab-separated record: graph6, graph6, shared polynomial, "iso" or "noniso".
std::string format_pair_record(const CospectralPair& pair);

}  // namespace coronae
