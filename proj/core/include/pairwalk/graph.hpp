#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairwalk {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

/// Simple weighted undirected graph with a stable canonical edge order
/// (lexicographic by sorted endpoints). Edge indices into edges() define
/// incidence-matrix columns and line-graph vertex ids. Immutable after
/// construction; concurrent reads are safe.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool unweighted() const { return unweighted_; }
  bool connected() const;

  bool adjacent(int u, int v) const;
  double weight(int u, int v) const;  // 0 when not adjacent
  /// Canonical edge id of {u,v}, or -1.
  int edge_index(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  double degree(int v) const;  // weighted degree

  Eigen::MatrixXd adjacency() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  bool unweighted_;
  mutable int connected_cache_ = -1;
};

// ---- named families ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
/// Star K_{1,n}: center vertex 0 with n leaves.
Graph star_graph(int n);
Graph hypercube_graph(int d);
/// Weighted path on 5 vertices with edge weights (sqrt(w), 1, 1, sqrt(w)).
Graph p5w_graph(double w);
/// Two stars with 12 and 24 private leaves sharing 8 common leaves; the
/// centers (vertices 0 and 1) have degrees 20 and 32.
Graph double_star_graph();
/// C8 with each odd-position vertex replaced by an independent set of m
/// vertices joined to both even neighbours. Vertices 0..3 are the four
/// even positions (in cyclic order); block k = {4+k*m .. 3+(k+1)*m} sits
/// between positions k and k+1 mod 4.
Graph blowup_c8_graph(int m);

/// Parse a family spec such as "cycle(8)", "complete_bipartite(2,4)",
/// "p5w(2.5)" or shorthand "C8", "K5", "K2,4", "P3", "Q3", "S4".
Graph family(const std::string& spec);

// ---- constructions ----

/// Cartesian product; vertex (i,j) gets index i*n2 + j and product edges
/// inherit the factor edge weight.
Graph cartesian_product(const Graph& x1, const Graph& x2);

/// Line graph of an unweighted connected graph. Vertex k of the result is
/// edge k of the host in canonical order.
Graph line_graph(const Graph& x);

/// 0/1 vertex-edge incidence matrix (n x m, columns in canonical edge order).
Eigen::MatrixXi incidence_matrix(const Graph& x);

// ---- structure queries ----

struct StructureReport {
  bool bipartite = false;
  std::vector<int> side;  // 0/1 per vertex when bipartite
  bool tree = false;
  bool unicyclic = false;
  bool odd_cycle = false;  // the unique cycle has odd length (when unicyclic)
  std::vector<int> cut_edges;  // canonical edge ids of bridges
};

StructureReport structure_queries(const Graph& x);

bool is_connected_without_edges(const Graph& x, int e1, int e2);
/// True iff removing the two (distinct) edges disconnects the graph.
bool is_edge_cut(const Graph& x, int e1, int e2);
/// True iff removing the two edges leaves a disconnected or bipartite graph.
bool removal_leaves_bipartite_or_disconnected(const Graph& x, int e1, int e2);

/// BFS hop distance; -1 when unreachable.
int distance(const Graph& x, int a, int b);
/// Smallest r such that every vertex is within distance r of the set.
int covering_radius(const Graph& x, const std::vector<int>& set);

struct DistanceStructure {
  int diameter = 0;
  std::vector<Eigen::MatrixXi> a;  // 0/1 distance matrices A_0..A_d
  std::vector<long> k;             // common column sum of A_j, or -1 if non-uniform
  bool antipodal_class2 = false;   // every vertex has a unique vertex at distance d
  bool antipodal_identity_ok = false;  // A_j A_d == A_{d-j} for all j (checked when flagged)
  std::vector<int> antipodal_map;      // defined when antipodal_class2
};

/// Distance matrices from BFS; requires connected unweighted input. When the
/// graph is antipodal of class two, verifies A_j A_d = A_{d-j} exactly.
DistanceStructure distance_structure(const Graph& x);

}  // namespace pairwalk
