#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace crank {

/// Unordered pair of label indices in canonical form (i < j).
struct Edge {
  int i = 0;
  int j = 0;

  Edge() = default;
  Edge(int a, int b) {
    if (a == b) throw std::invalid_argument("Edge: self-loops forbidden");
    if (a < b) {
      i = a;
      j = b;
    } else {
      i = b;
      j = a;
    }
  }

  friend bool operator==(const Edge& a, const Edge& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

inline int complete_edge_count(int n) { return n * (n - 1) / 2; }

/// Linear index of edge (i,j), i < j, in the complete graph on n vertices.
/// Edges are ordered lexicographically: (0,1),(0,2),...,(0,n-1),(1,2),...
inline int edge_index(int n, const Edge& e) {
  return e.i * n - e.i * (e.i + 1) / 2 + (e.j - e.i - 1);
}

inline Edge edge_at_index(int n, int k) {
  for (int i = 0; i < n - 1; ++i) {
    int row = n - 1 - i;
    if (k < row) return Edge(i, i + 1 + k);
    k -= row;
  }
  throw std::out_of_range("edge_at_index: index out of range");
}

/// All edges of the complete graph on n vertices in index order.
inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> out;
  out.reserve(complete_edge_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

/// A set of edges over vertices {0,...,n-1}; no duplicates.
struct EdgeSet {
  int n = 0;
  std::vector<Edge> edges;

  EdgeSet() = default;
  explicit EdgeSet(int n_vertices) : n(n_vertices) {
    if (n < 0) throw std::invalid_argument("EdgeSet: negative vertex count");
  }
  EdgeSet(int n_vertices, std::vector<Edge> es) : n(n_vertices), edges(std::move(es)) {
    validate();
  }

  void add(const Edge& e) {
    check_edge(e);
    for (const Edge& f : edges)
      if (f == e) throw std::invalid_argument("EdgeSet: duplicate edge");
    edges.push_back(e);
  }

  bool contains(const Edge& e) const {
    for (const Edge& f : edges)
      if (f == e) return true;
    return false;
  }

  int size() const { return static_cast<int>(edges.size()); }

  static EdgeSet complete(int n) { return EdgeSet(n, complete_edges(n)); }
  static EdgeSet empty(int n) { return EdgeSet(n); }

 private:
  void check_edge(const Edge& e) const {
    if (e.j >= n) throw std::invalid_argument("EdgeSet: vertex index out of range");
  }
  void validate() const {
    for (std::size_t a = 0; a < edges.size(); ++a) {
      check_edge(edges[a]);
      for (std::size_t b = a + 1; b < edges.size(); ++b)
        if (edges[a] == edges[b]) throw std::invalid_argument("EdgeSet: duplicate edge");
    }
  }
};

/// Nonnegative weight for every edge of the complete graph on n vertices.
/// Stored densely in edge-index order; zero weights participate like any other.
struct EdgeWeightMap {
  int n = 0;
  Eigen::VectorXd weights;  // size n*(n-1)/2, all >= 0

  EdgeWeightMap() = default;
  explicit EdgeWeightMap(int n_vertices)
      : n(n_vertices), weights(Eigen::VectorXd::Zero(complete_edge_count(n_vertices))) {}
  EdgeWeightMap(int n_vertices, Eigen::VectorXd w) : n(n_vertices), weights(std::move(w)) {
    if (weights.size() != complete_edge_count(n))
      throw std::invalid_argument("EdgeWeightMap: weight vector has wrong size");
    if ((weights.array() < 0.0).any())
      throw std::invalid_argument("EdgeWeightMap: negative weight");
  }

  double operator()(const Edge& e) const { return weights[edge_index(n, e)]; }
  double& at(const Edge& e) { return weights[edge_index(n, e)]; }
};

/// Spanning tree over {0,...,n-1}: exactly n-1 edges, acyclic, connected.
/// Validation happens in the factory in graph.cpp; this type stores the result.
struct SpanningTree {
  int n = 0;
  std::vector<Edge> edges;  // size n-1, sorted lexicographically

  EdgeSet as_edge_set() const { return EdgeSet(n, edges); }
  bool contains(const Edge& e) const {
    for (const Edge& f : edges)
      if (f == e) return true;
    return false;
  }
};

}  // namespace crank
