#include "shellar/graph6.hpp"

namespace shellar {

Graph parse_graph6(const std::string& line) {
  if (line.empty()) fail(ErrorKind::Parse, "graph6: empty input");
  unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == 126)
    fail(ErrorKind::Parse, "graph6: n > 62 is not supported");
  if (header < 63 || header > 125)
    fail(ErrorKind::Parse, "graph6: header byte out of range");
  int n = header - 63;
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() < 1 + body)
    fail(ErrorKind::Parse, "graph6: body too short for n = " + std::to_string(n));
  if (line.size() > 1 + body)
    fail(ErrorKind::Parse, "graph6: trailing garbage after encoding");
  Graph g(n);
  long long bit = 0;
  for (std::size_t i = 0; i < body; ++i) {
    unsigned char c = static_cast<unsigned char>(line[1 + i]);
    if (c < 63 || c > 126)
      fail(ErrorKind::Parse, "graph6: body byte out of range at position " +
                                 std::to_string(i + 1));
    int chunk = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      if (bit >= bits) continue;  // padding bits ignored
      if ((chunk >> b) & 1) {
        // column-major upper triangle: bit index -> (row, col)
        long long k = bit;
        int col = 1;
        while (k >= col) k -= col++;
        g.add_edge(static_cast<int>(k) + 1, col + 1);
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) fail(ErrorKind::Domain, "graph6: n > 62 is not supported");
  std::string out(1, static_cast<char>(n + 63));
  int chunk = 0, filled = 0;
  for (int col = 2; col <= n; ++col) {
    for (int row = 1; row < col; ++row) {
      chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace shellar
