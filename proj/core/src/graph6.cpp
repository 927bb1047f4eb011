#include "pairwalk/graph6.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pairwalk {

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");

  int header = line[0];
  if (header < 63 || header > 125)
    throw std::invalid_argument("graph6: header byte out of range (short form, n <= 62)");
  int n = header - 63;
  if (n == 0) throw std::invalid_argument("graph6: zero vertices");
  line.remove_prefix(1);

  long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long>(line.size()) != bytes_needed)
    throw std::invalid_argument("graph6: body length mismatch");

  // Bits run column-major over the upper triangle: (0,1),(0,2),(1,2),(0,3),...
  std::vector<Edge> edges;
  long bit = 0;
  int col = 1, row = 0;
  for (char ch : line) {
    int val = static_cast<unsigned char>(ch);
    if (val < 63 || val > 126) throw std::invalid_argument("graph6: body byte out of range");
    val -= 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (val >> k) & 1;
      if (bit >= bits_needed) {
        if (set) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (set) edges.push_back({row, col, 1.0});
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& x) {
  if (!x.unweighted()) throw std::invalid_argument("graph6: weighted graphs not encodable");
  int n = x.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6: short form limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (x.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (bits_needed % 6 != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::vector<Edge> edges;
  int max_vertex = -1;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    long long u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    if (!(ls >> v)) throw std::invalid_argument("edge list: missing endpoint on line " +
                                                std::to_string(line_no));
    double w = 1.0;
    if (ls >> w) {
      std::string trailing;
      if (ls >> trailing)
        throw std::invalid_argument("edge list: trailing tokens on line " + std::to_string(line_no));
    }
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
      throw std::invalid_argument("edge list: vertex index out of range on line " +
                                  std::to_string(line_no));
    if (!(w > 0) || !std::isfinite(w))
      throw std::invalid_argument("edge list: weight must be positive on line " +
                                  std::to_string(line_no));
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
  }
  if (max_vertex < 0) throw std::invalid_argument("edge list: no edges");
  return Graph(max_vertex + 1, std::move(edges));  // Graph ctor rejects dups/self-loops
}

std::string to_edge_list(const Graph& x) {
  std::ostringstream out;
  for (const auto& e : x.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1.0) out << ' ' << e.w;
    out << '\n';
  }
  return out.str();
}

}  // namespace pairwalk
