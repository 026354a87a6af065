#include <doctest.h>

#include <set>

#include "coronae/census.hpp"
#include "coronae/engine.hpp"
#include "coronae/errors.hpp"
#include "coronae/isomorphism.hpp"

using namespace coronae;

TEST_CASE("graph enumeration counts") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(graphs.size() == expected[n - 1]);
    std::set<std::string> canon;
    for (const Graph& g : graphs) {
      CHECK(g.order() == n);
      canon.insert(canonical_graph6(g));
    }
    CHECK(canon.size() == graphs.size());
  }
  CHECK_THROWS_AS(enumerate_graphs(kMaxCensusOrder + 1), ResourceError);
}

TEST_CASE("census rows for small n") {
  const CensusRow one = coronal_degree_census(1);
  CHECK(one.total == 1);
  CHECK(one.counts_by_d == std::map<int, std::size_t>{{1, 1}});

  const CensusRow two = coronal_degree_census(2);
  CHECK(two.counts_by_d == std::map<int, std::size_t>{{1, 2}});
  CHECK(two.average_d == 1);
  CHECK(two.average_d_over_n == Rational(1, 2));

  const CensusRow five = coronal_degree_census(5, 2);
  CHECK(five.counts_by_d == std::map<int, std::size_t>{{1, 3}, {2, 12}, {3, 13}, {4, 6}});
  CHECK(five.total == 34);
  CHECK(format_decimal(five.average_d) == "2.65");
}

TEST_CASE("census is independent of the worker count") {
  const auto graphs = enumerate_graphs(6);
  const CensusRow a = census_of(6, graphs, 1), b = census_of(6, graphs, 4);
  CHECK(a.counts_by_d == b.counts_by_d);
  CHECK(a.average_d == b.average_d);
  CHECK(a.total == 156);
}

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(Rational(20, 11)) == "1.82");
  CHECK(format_decimal(Rational(3, 2)) == "1.5");
  CHECK(format_decimal(Rational(1)) == "1");
  CHECK(format_decimal(Rational(1, 200)) == "0.01");
  CHECK(format_decimal(Rational(1, 201)) == "0");
  CHECK(format_decimal(Rational(-3, 2)) == "-1.5");
}

TEST_CASE("table and record layout") {
  const std::vector<CensusRow> rows{coronal_degree_census(1), coronal_degree_census(2), coronal_degree_census(3)};
  const std::string table = format_census_table(rows);
  CHECK(table.find("Total") != std::string::npos);
  CHECK(table.find("Average d") != std::string::npos);
  CHECK(table.find("1.5") != std::string::npos);
  CHECK(format_census_records(rows) == "1 1 1\n2 1 2\n3 1 2\n3 2 2\n");
}
