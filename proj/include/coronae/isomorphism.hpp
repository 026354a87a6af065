#pragma once

#include <string>
#include <vector>

#include "coronae/graph.hpp"

namespace coronae {

/// Stable colour refinement (1-dimensional Weisfeiler–Leman) started from
/// vertex degrees. Colours are ranks of refinement signatures, so they do not
/// depend on the vertex labelling.
std::vector<int> refine_colors(const Graph& g);

/// graph6 string of a canonical relabelling of `g`: the lexicographically
/// largest adjacency bit string among orderings compatible with the refined
/// colour classes. Two graphs are isomorphic iff their canonical strings match.
/// Cost grows with the product of colour-class factorials; intended for small
/// orders (census, n <= 8).
std::string canonical_graph6(const Graph& g);

/// Individualisation–refinement isomorphism test. Exact for all inputs;
/// practical for the structured graphs used here (up to a few dozen vertices).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace coronae
