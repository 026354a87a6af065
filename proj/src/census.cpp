#include "coronae/census.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "coronae/engine.hpp"
#include "coronae/errors.hpp"
#include "coronae/isomorphism.hpp"

namespace coronae {

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_graphs: order must be positive");
  if (n > kMaxCensusOrder)
    throw ResourceError("enumerate_graphs: built-in enumeration stops at order " + std::to_string(kMaxCensusOrder) +
                        "; supply a graph6 stream instead");
  std::map<std::string, Graph> level{{canonical_graph6(Graph(1)), Graph(1)}};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    const std::size_t fresh = k - 1;
    for (const auto& [key, parent] : level) {
      const auto parent_edges = parent.edges();
      for (std::size_t mask = 0; mask < (std::size_t{1} << fresh); ++mask) {
        GraphBuilder b(k);
        for (const auto& [u, v] : parent_edges) b.add_edge(u, v);
        for (Vertex u = 0; u < fresh; ++u)
          if ((mask >> u) & 1u) b.add_edge(u, fresh);
        Graph child = std::move(b).build();
        next.try_emplace(canonical_graph6(child), std::move(child));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(std::move(g));
  return out;
}

CensusRow census_of(std::size_t n, std::span<const Graph> graphs, unsigned threads) {
  for (const auto& g : graphs)
    if (g.order() != n) throw std::invalid_argument("census_of: graph of order " + std::to_string(g.order()) +
                                                    " in a census of order " + std::to_string(n));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(graphs.size(), 1)));

  std::vector<int> degrees(graphs.size(), 0);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < graphs.size(); i += threads) {
            const Coronal c = coronal(graphs[i]);
            check_coronal(c, n);
            degrees[i] = c.d;
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CensusRow row;
  row.n = n;
  row.total = graphs.size();
  long sum = 0;
  for (int d : degrees) {
    ++row.counts_by_d[d];
    sum += d;
  }
  if (row.total > 0) {
    row.average_d = Rational(sum, static_cast<unsigned long>(row.total));
    row.average_d.canonicalize();
    row.average_d_over_n = row.average_d / Rational(static_cast<unsigned long>(n));
  }
  return row;
}

CensusRow coronal_degree_census(std::size_t n, unsigned threads) {
  const auto graphs = enumerate_graphs(n);
  return census_of(n, graphs, threads);
}

std::string format_decimal(const Rational& value, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half up on |value|
  const Rational scaled = abs(value) * Rational(scale) + Rational(1, 2);
  Integer q = scaled.get_num() / scaled.get_den();
  const bool negative = value < 0 && q != 0;
  Integer whole = q / scale;
  Integer frac = q % scale;
  std::string digits = frac.get_str();
  digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (!digits.empty()) out += "." + digits;
  return out;
}

std::string format_census_table(std::span<const CensusRow> rows) {
  std::size_t max_d = 0;
  for (const auto& r : rows) max_d = std::max(max_d, r.n);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t d = 1; d <= max_d; ++d) {
    labels.push_back(std::to_string(d));
    std::vector<std::string> line;
    for (const auto& r : rows) {
      if (d > r.n) {
        line.emplace_back();
        continue;
      }
      const auto it = r.counts_by_d.find(static_cast<int>(d));
      line.push_back(std::to_string(it == r.counts_by_d.end() ? 0 : it->second));
    }
    cells.push_back(std::move(line));
  }
  labels.emplace_back("Total");
  labels.emplace_back("Average d");
  labels.emplace_back("(Average d)/n");
  std::vector<std::string> totals, averages, ratios;
  for (const auto& r : rows) {
    totals.push_back(std::to_string(r.total));
    averages.push_back(format_decimal(r.average_d));
    ratios.push_back(format_decimal(r.average_d_over_n));
  }
  cells.push_back(std::move(totals));
  cells.push_back(std::move(averages));
  cells.push_back(std::move(ratios));

  std::size_t label_width = std::string("d\\n").size();
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    width[c] = std::to_string(rows[c].n).size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream out;
  auto emit = [&](const std::string& label, const std::vector<std::string>& line) {
    out << std::left << std::setw(static_cast<int>(label_width)) << label << " |";
    for (std::size_t c = 0; c < line.size(); ++c) out << ' ' << std::right << std::setw(static_cast<int>(width[c])) << line[c];
    out << '\n';
  };
  std::vector<std::string> header;
  for (const auto& r : rows) header.push_back(std::to_string(r.n));
  emit("d\\n", header);
  std::size_t rule = label_width + 2;
  for (auto w : width) rule += w + 1;
  out << std::string(rule, '-') << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i == max_d) out << std::string(rule, '-') << '\n';
    emit(labels[i], cells[i]);
  }
  return out.str();
}

std::string format_census_records(std::span<const CensusRow> rows) {
  std::ostringstream out;
  for (const auto& r : rows)
    for (const auto& [d, count] : r.counts_by_d) out << r.n << ' ' << d << ' ' << count << '\n';
  return out.str();
}

}  // namespace coronae
