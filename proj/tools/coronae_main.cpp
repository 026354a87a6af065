// coronae: characteristic polynomials, coronals and corona spectra from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coronae/census.hpp"
#include "coronae/closed_forms.hpp"
#include "coronae/corona.hpp"
#include "coronae/cospectral.hpp"
#include "coronae/engine.hpp"
#include "coronae/errors.hpp"
#include "coronae/graph_io.hpp"
#include "coronae/graph_spec.hpp"
#include "coronae/trees.hpp"

namespace {

using namespace coronae;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kResource = 3, kInvariant = 4 };

struct OutputFlags {
  bool tex = false;
  bool json_lines = false;

  PolyFormat format() const { return tex ? PolyFormat{"\\lambda", true} : PolyFormat{}; }
};

class MethodUnavailable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Graph> graphs_of(const std::string& arg) { return resolve_graphs(arg, std::cin); }

Graph single_graph(const std::string& arg) {
  auto gs = graphs_of(arg);
  if (gs.size() != 1) throw std::invalid_argument("expected exactly one graph in '" + arg + "'");
  return std::move(gs.front());
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string decimal(const RealRoot& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(10) << r.approx();
  std::string s = out.str();
  return s == "-0.0000000000" ? "0.0000000000" : s;
}

json root_json(const RealRoot& r) {
  return json{{"lo", rational_text(r.lo)}, {"hi", rational_text(r.hi)}, {"approx", r.approx()},
              {"multiplicity", r.multiplicity}};
}

void print_roots(std::ostream& out, const std::vector<RealRoot>& roots, const std::string& indent) {
  for (const auto& r : roots) {
    out << indent << decimal(r) << "  x" << r.multiplicity << "  ";
    if (r.exact())
      out << "= " << rational_text(r.lo);
    else
      out << "(" << rational_text(r.lo) << ", " << rational_text(r.hi) << "]";
    out << '\n';
  }
}

int run_charpoly(const std::vector<std::string>& inputs, const OutputFlags& flags) {
  for (const auto& arg : inputs) {
    for (const auto& g : graphs_of(arg)) {
      const IntPoly f = char_poly(g);
      if (flags.json_lines)
        std::cout << json{{"graph6", emit_graph6(g)}, {"polynomial", to_string(f, flags.format())}}.dump() << '\n';
      else
        std::cout << to_string(f, flags.format()) << '\n';
    }
  }
  return kOk;
}

RatFunc coronal_by_method(const Graph& h, const std::string& method, const std::string& family, long r,
                          std::size_t budget) {
  if (method == "generic") return coronal(h).chi;
  if (method == "schwenk") return coronal_via_schwenk(h, SchwenkOptions{budget}).chi;
  if (method == "near-regular") return coronal_near_regular(h, r).chi;
  std::optional<RatFunc> chi;
  if (family.empty()) {
    chi = closed_form_coronal(h);
  } else {
    static const std::map<std::string, Family> families{{"regular", Family::regular},
                                                        {"bipartite", Family::complete_bipartite},
                                                        {"multipartite", Family::complete_multipartite},
                                                        {"path", Family::path}};
    chi = closed_form_coronal(h, families.at(family));
  }
  if (!chi)
    throw MethodUnavailable("no closed form applies to " + emit_graph6(h) +
                            (family.empty() ? std::string() : " as a " + family + " graph"));
  return *chi;
}

int run_coronal(const std::vector<std::string>& inputs, const std::string& method, const std::string& family,
                long r, std::size_t budget, const OutputFlags& flags) {
  for (const auto& arg : inputs) {
    for (const auto& h : graphs_of(arg)) {
      const RatFunc chi = coronal_by_method(h, method, family, r, budget);
      const int d = chi.den().degree();
      if (flags.json_lines) {
        std::cout << json{{"graph6", emit_graph6(h)},
                          {"numerator", to_string(chi.num(), flags.format())},
                          {"denominator", to_string(chi.den(), flags.format())},
                          {"d", d}}
                         .dump()
                  << '\n';
      } else {
        std::cout << to_string(chi, flags.format()) << "\td=" << d << '\n';
      }
    }
  }
  return kOk;
}

int run_corona(const std::string& g_arg, const std::string& h_arg, bool spectrum, bool decomposition,
               bool verify, const OutputFlags& flags) {
  const Graph g = single_graph(g_arg);
  const Graph h = single_graph(h_arg);
  const CoronaCharPoly assembled = corona_char_poly(g, h, AssemblyOptions{verify});
  const auto fmt = flags.format();

  if (flags.json_lines) {
    json rec{{"graph6", emit_graph6(corona(g, h))},
             {"polynomial", to_string(assembled.total, fmt)},
             {"numerator", to_string(assembled.coronal.chi.num(), fmt)},
             {"denominator", to_string(assembled.coronal.chi.den(), fmt)},
             {"d", assembled.coronal.d}};
    if (spectrum || decomposition) {
      const auto report = decompose(g, assembled);
      json roots = json::array(), mults = json::array();
      for (const auto& r : report.all_roots) {
        roots.push_back(root_json(r));
        mults.push_back(r.multiplicity);
      }
      rec["roots"] = roots;
      rec["multiplicities"] = mults;
      if (decomposition) {
        json old = json::array();
        for (const auto& r : report.old_roots) old.push_back(root_json(r));
        json groups = json::array();
        for (const auto& grp : report.new_root_groups) {
          json members = json::array();
          for (const auto& r : grp.roots) members.push_back(root_json(r));
          groups.push_back(json{{"mu", root_json(grp.mu)}, {"roots", members}});
        }
        json stacked = json::array();
        for (const auto& r : report.stacked) stacked.push_back(root_json(r));
        rec["old"] = old;
        rec["new"] = groups;
        rec["stacked"] = stacked;
      }
    }
    std::cout << rec.dump() << '\n';
    return kOk;
  }

  std::cout << to_string(assembled.total, fmt) << '\n';
  if (!spectrum && !decomposition) return kOk;
  const auto report = decompose(g, assembled);
  if (spectrum) {
    std::cout << "spectrum (" << report.total_multiplicity() << " eigenvalues):\n";
    print_roots(std::cout, report.all_roots, "  ");
  }
  if (decomposition) {
    std::cout << "coronal: " << to_string(assembled.coronal.chi, fmt) << "  d=" << report.d << '\n';
    std::cout << "old eigenvalues (roots of g, multiplicity x" << report.m << "):\n";
    print_roots(std::cout, report.old_roots, "  ");
    std::cout << "new eigenvalues:\n";
    for (const auto& grp : report.new_root_groups) {
      std::cout << "  mu = " << decimal(grp.mu) << " (x" << grp.mu.multiplicity << "):\n";
      print_roots(std::cout, grp.roots, "    ");
    }
    if (!report.stacked.empty()) {
      std::cout << "stacked (old and new):\n";
      print_roots(std::cout, report.stacked, "  ");
    }
    if (!report.grouping_consistent) std::cout << "note: numeric grouping by mu is ambiguous for this pair\n";
  }
  return kOk;
}

int run_census(const std::vector<std::size_t>& orders, const std::string& from_graph6, bool records,
               unsigned threads, const OutputFlags& flags) {
  std::vector<CensusRow> rows;
  if (!from_graph6.empty()) {
    std::map<std::size_t, std::vector<Graph>> by_order;
    for (auto& g : graphs_of(from_graph6)) by_order[g.order()].push_back(std::move(g));
    for (const auto& [n, graphs] : by_order) {
      if (!orders.empty() && std::find(orders.begin(), orders.end(), n) == orders.end()) continue;
      rows.push_back(census_of(n, graphs, threads));
    }
  } else {
    if (orders.empty()) throw std::invalid_argument("census: give at least one order or --from-graph6");
    for (std::size_t n : orders) rows.push_back(coronal_degree_census(n, threads));
  }
  if (flags.json_lines) {
    for (const auto& r : rows)
      for (const auto& [d, count] : r.counts_by_d)
        std::cout << json{{"n", r.n}, {"d", d}, {"count", count}}.dump() << '\n';
    return kOk;
  }
  std::cout << (records ? format_census_records(rows) : format_census_table(rows));
  return kOk;
}

int run_tree_mates(std::size_t order, const OutputFlags& flags) {
  for (const auto& pair : find_tree_mates(order)) {
    if (flags.json_lines)
      std::cout << json{{"graph6", {emit_graph6(pair.first), emit_graph6(pair.second)}},
                        {"polynomial", to_string(pair.certificate, flags.format())}}
                       .dump()
                << '\n';
    else
      std::cout << format_pair_record(pair) << '\n';
  }
  return kOk;
}

int run_verify(const std::string& g1, const std::string& g2, const std::string& h1, const std::string& h2_arg,
               const OutputFlags& flags) {
  const Graph a = single_graph(g1), b = single_graph(g2), h = single_graph(h1);
  const Graph h2 = h2_arg.empty() ? h : single_graph(h2_arg);
  const auto r = verify_corona_cospectrality(a, b, h, h2);
  const auto verdict = [](bool premise, bool conclusion) {
    return !premise ? "premise-fails" : (conclusion ? "PASS" : "VIOLATION");
  };
  const std::string part_a = verdict(r.g_cospectral, r.left_coronas_cospectral);
  const std::string part_b = verdict(r.h_cospectral && r.h_coronal_equal, r.right_coronas_cospectral);
  if (flags.json_lines) {
    std::cout << json{{"g_cospectral", r.g_cospectral},
                      {"left_coronas_cospectral", r.left_coronas_cospectral},
                      {"h_cospectral", r.h_cospectral},
                      {"h_coronal_equal", r.h_coronal_equal},
                      {"right_coronas_cospectral", r.right_coronas_cospectral},
                      {"part_a", part_a},
                      {"part_b", part_b}}
                     .dump()
              << '\n';
  } else {
    std::cout << "(a) G1,G2 cospectral: " << (r.g_cospectral ? "yes" : "no")
              << "; G1∘H, G2∘H cospectral: " << (r.left_coronas_cospectral ? "yes" : "no") << "  " << part_a << '\n';
    std::cout << "(b) H1,H2 cospectral: " << (r.h_cospectral ? "yes" : "no")
              << ", coronals equal: " << (r.h_coronal_equal ? "yes" : "no")
              << "; G1∘H1, G1∘H2 cospectral: " << (r.right_coronas_cospectral ? "yes" : "no") << "  " << part_b
              << '\n';
  }
  return r.violated() ? kInvariant : kOk;
}

int run_switching(const std::string& t1, const std::string& t2, const std::vector<std::string>& with,
                  const OutputFlags& flags) {
  const auto pair = switching_pair(single_graph(t1), single_graph(t2));
  if (flags.json_lines)
    std::cout << json{{"graph6", {emit_graph6(pair.first), emit_graph6(pair.second)}},
                      {"polynomial", to_string(pair.certificate, flags.format())},
                      {"isomorphic", pair.isomorphic}}
                     .dump()
              << '\n';
  else
    std::cout << format_pair_record(pair) << '\n';
  int status = kOk;
  for (const auto& arg : with) {
    const Graph x = single_graph(arg);
    const bool left = is_cospectral(corona(x, pair.first), corona(x, pair.second));
    const bool right = is_cospectral(corona(pair.first, x), corona(pair.second, x));
    if (!flags.json_lines)
      std::cout << "with " << arg << ": G∘Sw cospectral " << (left ? "yes" : "NO") << ", Sw∘H cospectral "
                << (right ? "yes" : "NO") << '\n';
    if (!left || !right) status = kInvariant;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coronae: coronals of graphs and spectra of coronae"};
  app.require_subcommand(1);
  app.fallthrough();
  OutputFlags flags;
  app.add_flag("--tex", flags.tex, "Render polynomials in TeX with \\lambda");
  app.add_flag("--json-lines", flags.json_lines, "One JSON record per result");

  std::vector<std::string> inputs;
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of each input graph");
  charpoly->add_option("graphs", inputs, "Graphs (family expression, graph6, file, or -)")->required();

  std::string method = "generic", family;
  long near_r = 0;
  std::size_t budget = SchwenkOptions{}.path_budget;
  auto* coronal_cmd = app.add_subcommand("coronal", "Reduced coronal and its denominator degree d");
  coronal_cmd->add_option("graphs", inputs, "Graphs")->required();
  coronal_cmd->add_option("--method", method, "Algorithm")
      ->check(CLI::IsMember({"generic", "schwenk", "near-regular", "closed-form"}));
  coronal_cmd->add_option("--family", family, "Closed-form family (default: detect)")
      ->check(CLI::IsMember({"regular", "bipartite", "multipartite", "path"}));
  coronal_cmd->add_option("--r", near_r, "Majority degree for --method near-regular");
  coronal_cmd->add_option("--path-budget", budget, "Path budget for --method schwenk");

  std::string g_arg, h_arg;
  bool spectrum = false, decomposition = false, no_verify = false;
  auto* corona_cmd = app.add_subcommand("corona", "Characteristic polynomial and spectrum of G∘H");
  corona_cmd->add_option("G", g_arg)->required();
  corona_cmd->add_option("H", h_arg)->required();
  corona_cmd->add_flag("--spectrum", spectrum, "List isolated eigenvalues with multiplicities");
  corona_cmd->add_flag("--decompose", decomposition, "Old/new eigenvalue breakdown");
  corona_cmd->add_flag("--no-verify", no_verify, "Skip the direct characteristic polynomial cross-check");

  std::vector<std::size_t> orders;
  std::string from_graph6;
  bool records = false;
  unsigned threads = 0;
  auto* census_cmd = app.add_subcommand("census", "Distribution of coronal denominator degrees");
  census_cmd->add_option("n", orders, "Orders (built-in enumeration up to 7)");
  census_cmd->add_option("--from-graph6", from_graph6, "Read graphs from a graph6 file (or -) instead");
  census_cmd->add_flag("--records", records, "Print 'n d count' lines instead of the table");
  census_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* cospectral_cmd = app.add_subcommand("cospectral", "Cospectral pairs from coronae and switching graphs");
  cospectral_cmd->require_subcommand(1);
  std::size_t tree_order = 0;
  auto* mates_cmd = cospectral_cmd->add_subcommand("tree-mates", "Cospectral trees with cospectral complements");
  mates_cmd->add_option("order", tree_order)->required();
  std::string v_g1, v_g2, v_h1, v_h2;
  auto* verify_cmd = cospectral_cmd->add_subcommand("verify", "Check corona cospectrality for G1, G2, H1 [, H2]");
  verify_cmd->add_option("G1", v_g1)->required();
  verify_cmd->add_option("G2", v_g2)->required();
  verify_cmd->add_option("H1", v_h1)->required();
  verify_cmd->add_option("H2", v_h2);
  std::string t1, t2;
  std::vector<std::string> with;
  auto* switching_cmd = cospectral_cmd->add_subcommand("switching", "Switching graphs of two tree mates");
  switching_cmd->add_option("T1", t1)->required();
  switching_cmd->add_option("T2", t2)->required();
  switching_cmd->add_option("--with", with, "Graphs to corona with on both sides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*charpoly) return run_charpoly(inputs, flags);
    if (*coronal_cmd) return run_coronal(inputs, method, family, near_r, budget, flags);
    if (*corona_cmd) return run_corona(g_arg, h_arg, spectrum, decomposition, !no_verify, flags);
    if (*census_cmd) return run_census(orders, from_graph6, records, threads, flags);
    if (*mates_cmd) return run_tree_mates(tree_order, flags);
    if (*verify_cmd) return run_verify(v_g1, v_g2, v_h1, v_h2, flags);
    if (*switching_cmd) return run_switching(t1, t2, with, flags);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant breach: " << e.what() << '\n';
    return kInvariant;
  } catch (const NotDivisibleError& e) {
    std::cerr << "internal invariant breach: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
