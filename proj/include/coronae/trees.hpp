#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coronae/graph.hpp"

namespace coronae {

/// Canonical string of a tree: AHU encoding rooted at the centre (the smaller
/// of the two encodings when the tree is bicentral). Throws std::invalid_argument
/// if `t` is not a tree.
std::string tree_canonical_form(const Graph& t);

/// All trees on `order` vertices up to isomorphism, built by attaching a leaf
/// to every vertex of every tree of order−1 and keeping one representative per
/// canonical form. Output is sorted by canonical form. Throws ResourceError for
/// orders above `max_order`.
std::vector<Graph> enumerate_trees(std::size_t order, std::size_t max_order = 16);

/// Same classes via all order^(order−2) Prüfer sequences; exponential, used as
/// an independent check at small orders (order <= 9).
std::vector<Graph> enumerate_trees_pruefer(std::size_t order);

/// Decodes a Prüfer sequence over {0..n−1} of length n−2 into a labelled tree.
Graph tree_from_pruefer(const std::vector<std::size_t>& seq);

}  // namespace coronae
