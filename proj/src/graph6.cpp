#include <fstream>
#include <sstream>

#include "tinygraph/error.hpp"
#include "tinygraph/graph.hpp"

namespace tinygraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

void put_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", base + pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: byte outside printable range 63..126", base + pos);
  return c - kBias;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph read_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  for (std::size_t i = 0; i < text.size(); ++i) sextet(text, i, base);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text, 0, base));
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    for (std::size_t i = 0; i < 6; ++i)
      n = (n << 6) | static_cast<std::size_t>(sextet(text, 2 + i, base));
    pos = 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      n = (n << 6) | static_cast<std::size_t>(sextet(text, 1 + i, base));
    pos = 4;
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) +
                         " bytes for n = " + std::to_string(n) + ", found " +
                         std::to_string(text.size()),
                     base + std::min(text.size(), expected));
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int value = sextet(text, pos + bit / 6, base);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero in a well-formed encoding.
  if (bit % 6 != 0) {
    const int last = sextet(text, pos + bit / 6, base);
    if (last & ((1 << (6 - bit % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits", base + pos + bit / 6);
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(read_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message() + " (line " + std::to_string(out.size() + 1) + ")",
                         offset + e.offset());
      }
    }
    offset = end + 1;
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_graph6_lines(buffer.str());
}

void write_graph6_file(const std::string& path, std::span<const Graph> graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace tinygraph
