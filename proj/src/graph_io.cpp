#include "coronae/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include "coronae/errors.hpp"

namespace coronae {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr unsigned char kBias = 63;

unsigned sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) throw ParseError("graph6: byte outside the printable range 63..126", base + pos);
  return c - kBias;
}

std::string_view trim_newline(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  text = trim_newline(text);
  if (text.empty()) throw ParseError("graph6: empty record", base);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = sextet(text, 0, base);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte length header", base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte length header", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("graph6: truncated adjacency data", base + text.size());
  if (text.size() > pos + body) throw ParseError("graph6: trailing bytes after adjacency data", base + pos + body);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const unsigned word = sextet(text, pos + k / 6, base);
      if (word & (1u << (5 - k % 6))) b.add_edge(u, v);
    }
  }
  for (; k % 6 != 0; ++k) {
    const unsigned word = sextet(text, pos + k / 6, base);
    if (word & (1u << (5 - k % 6))) throw ParseError("graph6: nonzero padding bits", base + pos + k / 6);
  }
  // The first body byte is range-checked above only when n >= 2; check all of them.
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text, i, base);
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  unsigned word = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto rec = trim_newline(line);
    if (rec.empty()) continue;
    out.push_back(parse_graph6(rec));
  }
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    while (!text.empty()) {
      const auto nl = text.find('\n');
      line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++line_no;
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
      if (line.empty() || line.front() == '#') continue;
      return true;
    }
    return false;
  }
};

std::pair<std::size_t, std::size_t> two_numbers(std::string_view line, std::size_t line_no) {
  std::size_t a = 0, b = 0;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto r = std::from_chars(p, end, a);
  if (r.ec != std::errc{}) throw ParseError("edge list: expected two non-negative integers", line_no);
  p = r.ptr;
  if (p == end || !std::isspace(static_cast<unsigned char>(*p)))
    throw ParseError("edge list: expected two non-negative integers", line_no);
  while (p != end && std::isspace(static_cast<unsigned char>(*p))) ++p;
  r = std::from_chars(p, end, b);
  if (r.ec != std::errc{} || r.ptr != end) throw ParseError("edge list: expected two non-negative integers", line_no);
  return {a, b};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader lines{text};
  std::string_view line;
  if (!lines.next(line)) throw ParseError("edge list: missing \"n m\" header", 1);
  const auto [n, m] = two_numbers(line, lines.line_no);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    if (!lines.next(line)) throw ParseError("edge list: fewer edge lines than declared", lines.line_no + 1);
    const auto [u, v] = two_numbers(line, lines.line_no);
    if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range", lines.line_no);
    if (u == v) throw ParseError("edge list: self-loop", lines.line_no);
    for (const auto& e : edges)
      if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
        throw ParseError("edge list: repeated edge", lines.line_no);
    edges.emplace_back(u, v);
  }
  if (lines.next(line)) throw ParseError("edge list: trailing data after declared edges", lines.line_no);
  return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_text(std::string_view text) {
  LineReader lines{text};
  std::string_view first;
  if (!lines.next(first)) throw ParseError("no graph record found", 0);
  const bool looks_numeric = std::isdigit(static_cast<unsigned char>(first.front())) != 0;
  if (looks_numeric) return parse_edge_list(text);
  const auto record = first;
  std::string_view extra;
  if (lines.next(extra)) throw ParseError("graph6: expected a single record", lines.line_no);
  return parse_graph6(record);
}

}  // namespace coronae
