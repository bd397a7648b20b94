#include "alphaidx/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "alphaidx/errors.hpp"

namespace alphaidx {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (text.substr(pos, kHeader.size()) == kHeader) pos += kHeader.size();
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;
  if (pos >= end) throw ParseError("empty graph6 string", pos);

  auto sixbits = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range 63..126", at);
    return c - 63;
  };

  long n = 0;
  if (static_cast<unsigned char>(text[pos]) == 126) {
    // 126 R(x): three 6-bit groups (n < 258048), or 126 126 and six groups.
    std::size_t groups = 3;
    std::size_t start = pos + 1;
    if (start < end && static_cast<unsigned char>(text[start]) == 126) {
      groups = 6;
      ++start;
    }
    if (start + groups > end) throw ParseError("truncated graph6 order field", end);
    for (std::size_t k = 0; k < groups; ++k) n = (n << 6) | sixbits(start + k);
    pos = start + groups;
  } else {
    n = sixbits(pos);
    ++pos;
  }
  if (n > kMaxOrder) throw ParseError("graph6 order " + std::to_string(n) + " exceeds 32", pos);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (end - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " + std::to_string(bytes),
                     std::min(end, pos + bytes));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int chunk = sixbits(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (bytes > 0) {
    int last = sixbits(pos + bytes - 1);
    int pad = static_cast<int>(bytes * 6 - bits);
    if (last & ((1 << pad) - 1)) throw ParseError("nonzero graph6 padding bits", pos + bytes - 1);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph edgelist_decode(std::string_view text) {
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    std::string_view line = text.substr(start, stop - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<long> fields;
    std::size_t k = 0;
    while (k < line.size()) {
      while (k < line.size() && is_space(line[k])) ++k;
      if (k >= line.size()) break;
      std::size_t e = k;
      while (e < line.size() && !is_space(line[e])) ++e;
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + k, line.data() + e, value);
      if (ec != std::errc() || ptr != line.data() + e || value < 0) {
        throw ParseError("edge list: invalid vertex '" + std::string(line.substr(k, e - k)) + "'", line_no);
      }
      fields.push_back(value);
      k = e;
    }
    if (!fields.empty()) {
      if (fields.size() != 2) throw ParseError("edge list: expected two vertices per line", line_no);
      if (fields[0] >= kMaxOrder || fields[1] >= kMaxOrder) throw ParseError("edge list: vertex exceeds 31", line_no);
      if (fields[0] == fields[1]) throw ParseError("edge list: loop", line_no);
      edges.emplace_back(static_cast<int>(fields[0]), static_cast<int>(fields[1]));
      max_vertex = std::max<int>(max_vertex, static_cast<int>(std::max(fields[0], fields[1])));
    }
    if (stop == text.size()) break;
    start = stop + 1;
  }
  if (max_vertex < 0) throw ParseError("edge list: no edges", line_no);
  return Graph::from_edges(max_vertex + 1, edges);
}

std::string edgelist_encode(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace alphaidx
