#include "pairwalk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace pairwalk {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 1) throw std::invalid_argument("Graph: vertex count must be positive");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("Graph: label count mismatch");
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw std::invalid_argument("Graph: vertex index out of range");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw std::invalid_argument("Graph: edge weight must be positive and finite");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw std::invalid_argument("Graph: parallel edge");
  adj_.resize(n_);
  unweighted_ = true;
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    if (e.w != 1.0) unweighted_ = false;
  }
}

bool Graph::connected() const {
  if (connected_cache_ >= 0) return connected_cache_ == 1;
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  connected_cache_ = (count == n_) ? 1 : 0;
  return connected_cache_ == 1;
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

double Graph::weight(int u, int v) const {
  int id = edge_index(u, v);
  return id >= 0 ? edges_[id].w : 0.0;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge probe{u, v, 1.0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                             [](const Edge& a, const Edge& b) {
                               return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return -1;
  return static_cast<int>(it - edges_.begin());
}

double Graph::degree(int v) const {
  double d = 0;
  for (int w : adj_.at(v)) d += weight(v, w);
  return d;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_) a(e.u, e.v) = a(e.v, e.u) = e.w;
  return a;
}

// ---- families ----

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: p,q >= 1 required");
  std::vector<Edge> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.push_back({i, p + j, 1.0});
  return Graph(p + q, std::move(e));
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star: n >= 1 leaves required");
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i) e.push_back({0, i, 1.0});
  return Graph(n + 1, std::move(e));
}

Graph hypercube_graph(int d) {
  if (d < 1) throw std::invalid_argument("hypercube: d >= 1 required");
  int n = 1 << d;
  std::vector<Edge> e;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < d; ++b) {
      int y = x ^ (1 << b);
      if (x < y) e.push_back({x, y, 1.0});
    }
  return Graph(n, std::move(e));
}

Graph p5w_graph(double w) {
  if (!(w > 0)) throw std::invalid_argument("p5w: w > 0 required");
  double s = std::sqrt(w);
  return Graph(5, {{0, 1, s}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, s}});
}

Graph double_star_graph() {
  // vertex 0: small-star center, vertex 1: large-star center
  std::vector<Edge> e;
  int idx = 2;
  for (int i = 0; i < 12; ++i) e.push_back({0, idx++, 1.0});
  for (int i = 0; i < 8; ++i) {
    e.push_back({0, idx, 1.0});
    e.push_back({1, idx, 1.0});
    ++idx;
  }
  for (int i = 0; i < 24; ++i) e.push_back({1, idx++, 1.0});
  return Graph(idx, std::move(e));
}

Graph blowup_c8_graph(int m) {
  if (m < 1) throw std::invalid_argument("blowup_c8: m >= 1 required");
  int n = 4 + 4 * m;
  std::vector<Edge> e;
  for (int k = 0; k < 4; ++k)
    for (int t = 0; t < m; ++t) {
      int v = 4 + k * m + t;
      e.push_back({k, v, 1.0});
      e.push_back({(k + 1) % 4, v, 1.0});
    }
  return Graph(n, std::move(e));
}

namespace {

std::vector<double> parse_args(const std::string& s) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
    out.push_back(std::stod(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

int int_arg(double v) {
  int i = static_cast<int>(std::llround(v));
  if (std::abs(v - i) > 1e-9) throw std::invalid_argument("family: integer argument expected");
  return i;
}

}  // namespace

Graph family(const std::string& raw) {
  std::string spec;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c);
  if (spec.empty()) throw std::invalid_argument("family: empty spec");

  auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw std::invalid_argument("family: missing ')'");
    std::string name = spec.substr(0, open);
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);
    auto args = parse_args(spec.substr(open + 1, spec.size() - open - 2));
    auto need = [&](size_t k) {
      if (args.size() != k) throw std::invalid_argument("family: wrong argument count for " + name);
    };
    if (name == "path") { need(1); return path_graph(int_arg(args[0])); }
    if (name == "cycle") { need(1); return cycle_graph(int_arg(args[0])); }
    if (name == "complete") { need(1); return complete_graph(int_arg(args[0])); }
    if (name == "complete_bipartite") {
      need(2);
      return complete_bipartite_graph(int_arg(args[0]), int_arg(args[1]));
    }
    if (name == "star") { need(1); return star_graph(int_arg(args[0])); }
    if (name == "hypercube") { need(1); return hypercube_graph(int_arg(args[0])); }
    if (name == "p5w") { need(1); return p5w_graph(args[0]); }
    if (name == "xm_blowup") { need(1); return blowup_c8_graph(int_arg(args[0])); }
    throw std::invalid_argument("family: unknown name '" + name + "'");
  }

  std::string lower = spec;
  std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
  if (lower == "x_double_star") return double_star_graph();

  // shorthand: K5, C8, P3, Q3, S4, K2,4
  char head = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
  std::string rest = spec.substr(1);
  if (!rest.empty()) {
    auto comma = rest.find(',');
    try {
      if (head == 'K' && comma != std::string::npos)
        return complete_bipartite_graph(std::stoi(rest.substr(0, comma)),
                                        std::stoi(rest.substr(comma + 1)));
      if (comma == std::string::npos) {
        int v = std::stoi(rest);
        switch (head) {
          case 'K': return complete_graph(v);
          case 'C': return cycle_graph(v);
          case 'P': return path_graph(v);
          case 'Q': return hypercube_graph(v);
          case 'S': return star_graph(v);
          default: break;
        }
      }
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("family: cannot parse '" + raw + "'");
}

// ---- constructions ----

Graph cartesian_product(const Graph& x1, const Graph& x2) {
  if (!x1.connected() || !x2.connected())
    throw std::invalid_argument("cartesian_product: factors must be connected");
  int n1 = x1.vertex_count(), n2 = x2.vertex_count();
  std::vector<Edge> e;
  for (int i = 0; i < n1; ++i)
    for (const auto& f : x2.edges()) e.push_back({i * n2 + f.u, i * n2 + f.v, f.w});
  for (const auto& f : x1.edges())
    for (int j = 0; j < n2; ++j) e.push_back({f.u * n2 + j, f.v * n2 + j, f.w});
  return Graph(n1 * n2, std::move(e));
}

Graph line_graph(const Graph& x) {
  if (!x.unweighted()) throw std::invalid_argument("line_graph: weighted input not supported");
  if (!x.connected()) throw std::invalid_argument("line_graph: connected input required");
  int m = x.edge_count();
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = x.edge(i);
      const Edge& b = x.edge(j);
      int shared = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
      if (shared == 1) e.push_back({i, j, 1.0});
    }
  return Graph(m, std::move(e));
}

Eigen::MatrixXi incidence_matrix(const Graph& x) {
  if (!x.unweighted())
    throw std::invalid_argument("incidence_matrix: weighted input not supported");
  Eigen::MatrixXi r = Eigen::MatrixXi::Zero(x.vertex_count(), x.edge_count());
  for (int k = 0; k < x.edge_count(); ++k) {
    r(x.edge(k).u, k) = 1;
    r(x.edge(k).v, k) = 1;
  }
  return r;
}

// ---- structure queries ----

namespace {

bool bfs_bipartite(const Graph& x, const std::vector<char>& edge_removed,
                   std::vector<int>* side_out, bool* connected_out) {
  int n = x.vertex_count();
  std::vector<int> side(n, -1);
  bool bipartite = true;
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    ++components;
    side[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : x.neighbors(v)) {
        int id = x.edge_index(v, w);
        if (!edge_removed.empty() && edge_removed[id]) continue;
        if (side[w] < 0) {
          side[w] = side[v] ^ 1;
          q.push(w);
        } else if (side[w] == side[v]) {
          bipartite = false;
        }
      }
    }
  }
  if (connected_out) *connected_out = (components == 1);
  if (side_out) *side_out = std::move(side);
  return bipartite;
}

}  // namespace

StructureReport structure_queries(const Graph& x) {
  if (!x.connected()) throw std::invalid_argument("structure_queries: connected input required");
  StructureReport rep;
  bool conn = true;
  rep.bipartite = bfs_bipartite(x, {}, &rep.side, &conn);
  if (!rep.bipartite) rep.side.clear();
  int n = x.vertex_count(), m = x.edge_count();
  rep.tree = (m == n - 1);
  rep.unicyclic = (m == n);
  if (rep.unicyclic) {
    // peel leaves; the remainder is the unique cycle
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(x.neighbors(v).size());
    std::queue<int> q;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) q.push(v);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      removed[v] = 1;
      for (int w : x.neighbors(v))
        if (!removed[w] && --deg[w] == 1) q.push(w);
    }
    int cycle_len = 0;
    for (int v = 0; v < n; ++v)
      if (!removed[v]) ++cycle_len;
    rep.odd_cycle = (cycle_len % 2 == 1);
  }
  // bridges via DFS low-points
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  // iterative DFS to keep stack use bounded
  struct Frame {
    int v, parent_edge;
    size_t idx;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = x.neighbors(f.v);
      if (f.idx < nbrs.size()) {
        int w = nbrs[f.idx++];
        int id = x.edge_index(f.v, w);
        if (id == f.parent_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) rep.cut_edges.push_back(pe);
        }
      }
    }
  }
  std::sort(rep.cut_edges.begin(), rep.cut_edges.end());
  return rep;
}

bool is_connected_without_edges(const Graph& x, int e1, int e2) {
  std::vector<char> removed(x.edge_count(), 0);
  removed.at(e1) = 1;
  removed.at(e2) = 1;
  int n = x.vertex_count();
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : x.neighbors(v)) {
      if (removed[x.edge_index(v, w)] || seen[w]) continue;
      seen[w] = 1;
      ++count;
      q.push(w);
    }
  }
  return count == n;
}

bool is_edge_cut(const Graph& x, int e1, int e2) {
  return !is_connected_without_edges(x, e1, e2);
}

bool removal_leaves_bipartite_or_disconnected(const Graph& x, int e1, int e2) {
  if (!is_connected_without_edges(x, e1, e2)) return true;
  std::vector<char> removed(x.edge_count(), 0);
  removed.at(e1) = 1;
  removed.at(e2) = 1;
  bool conn = true;
  return bfs_bipartite(x, removed, nullptr, &conn);
}

namespace {

std::vector<int> bfs_dist(const Graph& x, const std::vector<int>& sources) {
  std::vector<int> dist(x.vertex_count(), -1);
  std::queue<int> q;
  for (int s : sources) {
    dist.at(s) = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : x.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

int distance(const Graph& x, int a, int b) { return bfs_dist(x, {a})[b]; }

int covering_radius(const Graph& x, const std::vector<int>& set) {
  auto dist = bfs_dist(x, set);
  int r = 0;
  for (int d : dist) {
    if (d < 0) return -1;
    r = std::max(r, d);
  }
  return r;
}

DistanceStructure distance_structure(const Graph& x) {
  if (!x.connected() || !x.unweighted())
    throw std::invalid_argument("distance_structure: connected unweighted input required");
  int n = x.vertex_count();
  std::vector<std::vector<int>> dist(n);
  int diam = 0;
  for (int v = 0; v < n; ++v) {
    dist[v] = bfs_dist(x, {v});
    for (int d : dist[v]) diam = std::max(diam, d);
  }
  DistanceStructure out;
  out.diameter = diam;
  out.a.assign(diam + 1, Eigen::MatrixXi::Zero(n, n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) out.a[dist[u][v]](u, v) = 1;
  out.k.resize(diam + 1);
  for (int j = 0; j <= diam; ++j) {
    long k0 = out.a[j].col(0).sum();
    bool uniform = true;
    for (int v = 1; v < n; ++v)
      if (out.a[j].col(v).sum() != k0) uniform = false;
    out.k[j] = uniform ? k0 : -1;
  }
  out.antipodal_class2 = (out.k[diam] == 1);
  if (out.antipodal_class2) {
    out.antipodal_map.resize(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (out.a[diam](u, v)) out.antipodal_map[u] = v;
    out.antipodal_identity_ok = true;
    for (int j = 0; j <= diam; ++j)
      if (out.a[j] * out.a[diam] != out.a[diam - j]) out.antipodal_identity_ok = false;
  }
  return out;
}

}  // namespace pairwalk
