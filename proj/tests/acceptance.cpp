// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coronae/census.hpp"
#include "coronae/closed_forms.hpp"
#include "coronae/corona.hpp"
#include "coronae/cospectral.hpp"
#include "coronae/engine.hpp"
#include "coronae/graph_io.hpp"
#include "coronae/isomorphism.hpp"
#include "coronae/roots.hpp"

using namespace coronae;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

Graph random_graph(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

RatFunc rf(IntPoly num, IntPoly den) { return reduce(std::move(num), std::move(den)); }

void corona_identity(Outcome& out) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  AssemblyOptions independent;
  independent.cross_check = false;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, size(rng)), h = random_graph(rng, size(rng));
    const IntPoly assembled = corona_char_poly(g, h, independent).total;
    out.expect(assembled == char_poly(corona(g, h)),
               "mismatch for G=" + emit_graph6(g) + " H=" + emit_graph6(h));
  }
  out.detail << (out.ok ? "200 random pairs, exact equality" : "");
}

void path_table(Outcome& out) {
  const std::vector<RatFunc> printed{
      rf({1}, {0, 1}),
      rf({2}, {-1, 1}),
      rf({4, 3}, {-2, 0, 1}),
      rf({2, 4}, {-1, -1, 1}),
      rf({-1, 8, 5}, {0, -3, 0, 1}),
      rf({-4, 4, 6}, {1, -2, -1, 1}),
      rf({-8, -6, 12, 7}, {2, 0, -4, 0, 1}),
  };
  for (std::size_t n = 1; n <= 7; ++n)
    out.expect(coronal(path(n)).chi == printed[n - 1], "P" + std::to_string(n) + " differs");
  out.detail << (out.ok ? "P1..P7 exact" : "");
}

void census_table(Outcome& out) {
  const std::vector<std::vector<std::size_t>> printed{
      {1}, {2, 0}, {2, 2, 0}, {4, 5, 2, 0}, {3, 12, 13, 6, 0}, {8, 28, 50, 40, 22, 8}, {6, 44, 138, 304, 246, 214, 92},
  };
  const std::size_t totals[] = {1, 2, 4, 11, 34, 156, 1044};
  const char* averages[] = {"1", "1", "1.5", "1.82", "2.65", "3.41", "4.68"};
  for (std::size_t n = 1; n <= 7; ++n) {
    const CensusRow row = coronal_degree_census(n);
    for (std::size_t d = 1; d <= n; ++d) {
      const auto it = row.counts_by_d.find(static_cast<int>(d));
      const std::size_t got = it == row.counts_by_d.end() ? 0 : it->second;
      out.expect(got == printed[n - 1][d - 1],
                 "n=" + std::to_string(n) + " d=" + std::to_string(d) + " count " + std::to_string(got));
    }
    out.expect(row.total == totals[n - 1], "n=" + std::to_string(n) + " total");
    out.expect(format_decimal(row.average_d) == averages[n - 1],
               "n=" + std::to_string(n) + " average " + format_decimal(row.average_d));
  }
  out.detail << (out.ok ? "all counts, totals and Average d for n=1..7" : "");
}

void witnesses(Outcome& out) {
  const Graph s5 = star(5), c4k1 = disjoint_union(cycle(4), Graph(1));
  const Graph p5 = path(5), k2k3 = disjoint_union(complete(2), complete(3));
  out.expect(coronal(s5).chi == rf({8, 5}, {-4, 0, 1}), "S5");
  out.expect(coronal(c4k1).chi == rf({-2, 5}, {0, -2, 1}), "C4+K1");
  out.expect(coronal(p5).chi == rf({-1, 8, 5}, {0, -3, 0, 1}), "P5");
  out.expect(coronal(k2k3).chi == rf({-7, 5}, {2, -3, 1}), "K2+K3");
  out.expect(is_cospectral(s5, c4k1), "S5 and C4+K1 not cospectral");
  out.expect(!coronal_equal(s5, c4k1), "S5 and C4+K1 share a coronal");
  auto sorted_degrees = [](const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
  };
  out.expect(sorted_degrees(p5) == sorted_degrees(k2k3), "P5 and K2+K3 degree sequences differ");
  out.expect(!coronal_equal(p5, k2k3), "P5 and K2+K3 share a coronal");
  out.detail << (out.ok ? "four coronals exact, cospectral without equal coronals" : "");
}

void closed_forms(Outcome& out) {
  std::size_t regular = 0, bipartite = 0, multipartite = 0, paths = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& h : enumerate_graphs(n)) {
      if (!h.is_regular()) continue;
      ++regular;
      out.expect(coronal_regular(n, h.degree(0)) == coronal(h).chi, "regular " + emit_graph6(h));
    }
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = p; q <= 5; ++q, ++bipartite)
      out.expect(coronal_complete_bipartite(p, q) == coronal(complete_bipartite(p, q)).chi,
                 "K" + std::to_string(p) + "," + std::to_string(q));
  // Partitions of n <= 7 as non-increasing part lists.
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> partitions =
      [&](std::size_t left, std::size_t cap, std::vector<std::size_t>& parts) {
        if (left == 0) {
          ++multipartite;
          const PartitionSpec spec(parts);
          const RatFunc generic = coronal(complete_multipartite(parts)).chi;
          out.expect(coronal_complete_multipartite(spec) == generic, "multipartite C_j form");
          out.expect(coronal_complete_multipartite_product_form(spec) == generic, "multipartite product form");
          return;
        }
        for (std::size_t part = std::min(left, cap); part >= 1; --part) {
          parts.push_back(part);
          partitions(left - part, part, parts);
          parts.pop_back();
        }
      };
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::size_t> parts;
    partitions(n, n, parts);
  }
  for (std::size_t n = 1; n <= 12; ++n, ++paths)
    out.expect(coronal_path(n) == coronal(path(n)).chi, "P" + std::to_string(n));
  if (out.ok)
    out.detail << regular << " regular, " << bipartite << " bipartite, " << multipartite << " multipartite, " << paths
               << " paths";
}

void schwenk(Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& h : enumerate_graphs(n)) {
      out.expect(coronal_via_schwenk(h) == coronal(h), "graph " + emit_graph6(h));
      ++checked;
    }
  for (std::size_t n = 1; n <= 8; ++n) {
    out.expect(coronal_via_schwenk(path(n)) == coronal(path(n)), "P" + std::to_string(n));
    ++checked;
    if (n >= 3) {
      out.expect(coronal_via_schwenk(cycle(n)) == coronal(cycle(n)), "C" + std::to_string(n));
      ++checked;
    }
  }
  if (out.ok) out.detail << checked << " graphs agree";
}

void spectrum_structure(Outcome& out) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  const Rational width(1, Integer(1) << kDefaultRootWidthLog2);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, size(rng)), h = random_graph(rng, size(rng));
    const CoronaCharPoly assembled = corona_char_poly(g, h);
    const SpectrumReport report = decompose(g, assembled);
    const auto reference = isolate_spectrum(assembled.total);
    const std::string tag = " for G=" + emit_graph6(g) + " H=" + emit_graph6(h);
    out.expect(report.total_multiplicity() == g.order() * (h.order() + 1), "total multiplicity" + tag);
    out.expect(report.all_roots.size() == reference.size(), "distinct root count" + tag);
    if (report.all_roots.size() != reference.size()) continue;
    IntPoly radical = IntPoly::constant(1);
    for (const IntPoly& part : squarefree_decomposition(assembled.total)) radical *= part;
    const SturmSequence sturm(radical);
    for (std::size_t i = 0; i < reference.size(); ++i) {
      const RealRoot& a = report.all_roots[i];
      const RealRoot& b = reference[i];
      out.expect(a.multiplicity == b.multiplicity, "multiplicity" + tag);
      out.expect(contains_root(sturm, a, b), "interval mismatch" + tag);
      out.expect(a.hi - a.lo <= width, "interval too wide" + tag);
    }
    unsigned old_total = 0, new_total = 0;
    for (const auto& r : report.old_roots) old_total += r.multiplicity;
    for (const auto& grp : report.new_root_groups)
      for (const auto& r : grp.roots) new_total += r.multiplicity;
    out.expect(old_total == g.order() * (h.order() - static_cast<unsigned>(report.d)), "old count" + tag);
    out.expect(new_total == g.order() * static_cast<unsigned>(report.d + 1), "new count" + tag);
  }
  out.detail << (out.ok ? "50 random pairs, exact multisets, width <= 2^-40" : "");
}

void switching_pipeline(Outcome& out) {
  std::size_t smallest = 0;
  std::vector<CospectralPair> mates;
  for (std::size_t n = 1; n <= 12 && mates.empty(); ++n) {
    mates = find_tree_mates(n);
    smallest = n;
  }
  out.expect(!mates.empty(), "no tree pair up to order 12");
  if (mates.empty()) return;
  out.expect(smallest == kSmallestTreeMateOrder, "smallest order " + std::to_string(smallest));
  const CospectralPair& trees = mates.front();
  const CospectralPair sw = switching_pair(trees.first, trees.second);
  const std::size_t n = trees.first.order();
  out.expect(!are_isomorphic(sw.first, sw.second), "switching graphs isomorphic");
  out.expect(char_poly(sw.first) == char_poly(sw.second), "switching graphs not cospectral");
  for (Vertex v = 0; v < sw.first.order(); ++v)
    out.expect(sw.first.degree(v) == n - 1 && sw.second.degree(v) == n - 1, "not (n-1)-regular");
  out.expect(coronal(sw.first).chi == coronal(sw.second).chi, "coronals differ");
  for (const Graph& small : {Graph(1), path(2), path(3)}) {
    out.expect(char_poly(corona(sw.first, small)) == char_poly(corona(sw.second, small)), "Sw o H not cospectral");
    out.expect(char_poly(corona(small, sw.first)) == char_poly(corona(small, sw.second)), "G o Sw not cospectral");
  }
  if (out.ok)
    out.detail << "order " << smallest << " pair " << emit_graph6(trees.first) << " / " << emit_graph6(trees.second);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"corona characteristic polynomial identity", corona_identity},
      {"path coronal table", path_table},
      {"coronal degree census", census_table},
      {"cospectral and degree-sequence witnesses", witnesses},
      {"closed forms match the generic engine", closed_forms},
      {"path-deletion cofactors", schwenk},
      {"old/new spectrum structure", spectrum_structure},
      {"tree switching pipeline", switching_pipeline},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.2fs): %s\n", out.ok ? "PASS" : "FAIL", index, c.name, secs, out.detail.str().c_str());
    std::fflush(stdout);
    failures += out.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
