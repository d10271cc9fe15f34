#include "hang/io.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace hang {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void encode_size(std::uint64_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
  if (pos == end) throw ParseError("graph6: empty input", pos);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= end) throw ParseError("graph6: truncated input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", i);
    return c - kBias;
  };

  std::uint64_t n = 0;
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(byte_at(pos));
    pos += 1;
  } else if (pos + 1 < end && text[pos + 1] == '~') {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 2 + i));
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 1 + i));
    pos += 4;
  }
  if (n > static_cast<std::uint64_t>(1) << 24) throw ParseError("graph6: vertex count too large", 0);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (end - pos < body) throw ParseError("graph6: truncated bit field", end);
  if (end - pos > body) throw ParseError("graph6: trailing bytes after bit field", pos + body);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if (chunk & (32 >> (k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  encode_size(n, out);
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.vertex_count(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  long long n = -1;
  long long m = -1;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (comment.substr(0, 7) == "labels:") {
        std::istringstream names{std::string(comment.substr(7))};
        labels.clear();
        for (std::string name; names >> name;) labels.push_back(name);
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields{std::string(line)};
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("edge list: expected two integers on line " + std::to_string(line_no), line_no);
    }
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError("edge list: negative header value", line_no);
      if (a > (1 << 24)) throw ParseError("edge list: vertex count too large", line_no);
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError("edge list: endpoint out of range on line " + std::to_string(line_no), line_no);
    }
    if (a == b) throw ParseError("edge list: self-loop on line " + std::to_string(line_no), line_no);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw ParseError("edge list: missing \"n m\" header", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were listed",
                     line_no);
  }
  Graph g = Graph::from_edge_list(static_cast<int>(n), edges);
  if (labels.empty()) return g;
  try {
    return g.with_labels(std::move(labels));
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: bad labels directive: ") + e.what(), 0);
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (g.has_labels()) {
    out << "# labels:";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
  }
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') return parse_edge_list(text);
    std::istringstream fields{std::string(line.substr(0, line.find('#')))};
    long long a = 0;
    long long b = 0;
    if (fields >> a >> b) return parse_edge_list(text);
    // graph6: exactly one graph expected
    std::string rest;
    while (std::getline(in, rest)) {
      if (!trim(rest).empty()) throw ParseError("expected a single graph6 line", 0);
    }
    return from_graph6(line);
  }
  throw ParseError("empty input", 0);
}

}  // namespace hang
