#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coronae/graph.hpp"
#include "coronae/poly.hpp"

namespace coronae {

/// Largest order the built-in enumerator accepts.
inline constexpr std::size_t kMaxCensusOrder = 7;

/// One representative per isomorphism class of graphs on n vertices, by
/// vertex extension of the (n−1)-vertex classes with canonical deduplication.
/// Throws ResourceError for n > kMaxCensusOrder.
std::vector<Graph> enumerate_graphs(std::size_t n);

struct CensusRow {
  std::size_t n = 0;
  std::map<int, std::size_t> counts_by_d;
  std::size_t total = 0;
  Rational average_d;
  Rational average_d_over_n;
};

/// Reduced coronal denominator degree of every graph in `graphs` (all of order
/// n), bucketed. Work is spread over `threads` workers (0 = hardware concurrency).
CensusRow census_of(std::size_t n, std::span<const Graph> graphs, unsigned threads = 0);

/// census_of(n, enumerate_graphs(n)).
CensusRow coronal_degree_census(std::size_t n, unsigned threads = 0);

/// Exact rational rounded half-up to `places` decimals, trailing zeros dropped: 20/11 -> "1.82", 3/2 -> "1.5".
std::string format_decimal(const Rational& value, int places = 2);

/// Aligned table with one column per row: counts by d, Total, Average d, (Average d)/n.
std::string format_census_table(std::span<const CensusRow> rows);

/// Machine-readable lines "n d count", one per populated bucket.
std::string format_census_records(std::span<const CensusRow> rows);

}  // namespace coronae
