#include "dhlrw/io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "dhlrw/errors.hpp"

namespace dhlrw {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    if (auto p = raw.find('#'); p != std::string::npos) raw.erase(p);
    std::istringstream ss(raw);
    Line l{ln, {}};
    std::string t;
    while (ss >> t) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

long long to_int(const std::string& s, int line, long long lo, long long hi) {
  std::size_t used = 0;
  long long v;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  if (v < lo || v > hi) throw ParseError(line, "value " + s + " out of range");
  return v;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'graph <n>' header");
  const auto& h = lines[0];
  if (h.tokens.size() != 2 || h.tokens[0] != "graph") throw ParseError(h.number, "expected 'graph <n>'");
  const int n = static_cast<int>(to_int(h.tokens[1], h.number, 0, 1 << 24));
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected an edge 'u v'");
    int u = static_cast<int>(to_int(l.tokens[0], l.number, 0, n - 1));
    int v = static_cast<int>(to_int(l.tokens[1], l.number, 0, n - 1));
    if (u == v) throw SelfLoop(l.number, "self-loop at vertex " + l.tokens[0]);
    g.add_edge(u, v);
  }
  return g;
}

void write_graph(std::ostream& os, const Graph& g) {
  os << "graph " << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
}

BinaryMatroid parse_matrix(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'matroid <rank> <nelems>' header");
  const auto& h = lines[0];
  if (h.tokens.size() != 3 || h.tokens[0] != "matroid")
    throw ParseError(h.number, "expected 'matroid <rank> <nelems>'");
  const int r = static_cast<int>(to_int(h.tokens[1], h.number, 0, 1 << 20));
  const int m = static_cast<int>(to_int(h.tokens[2], h.number, 0, 1 << 20));
  if (static_cast<int>(lines.size()) - 1 != r)
    throw ParseError(lines.back().number, "expected " + std::to_string(r) + " matrix rows");
  std::vector<Row> cols(m, Row(r));
  for (int i = 0; i < r; ++i) {
    const auto& l = lines[i + 1];
    std::string digits;
    for (const auto& t : l.tokens) digits += t;
    if (static_cast<int>(digits.size()) != m)
      throw ParseError(l.number, "expected " + std::to_string(m) + " binary digits");
    for (int j = 0; j < m; ++j) {
      if (digits[j] != '0' && digits[j] != '1') throw ParseError(l.number, "matrix entries must be 0 or 1");
      if (digits[j] == '1') cols[j].set(i);
    }
  }
  return BinaryMatroid(r, std::move(cols));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dhlrw
