#pragma once

#include <utility>
#include <vector>

#include "crank/edge.hpp"
#include "crank/weights.hpp"

namespace crank {

/// Union-find with path compression and union by rank.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns false if a and b were already connected.
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

struct ComponentLabeling {
  int count = 0;
  std::vector<int> label;  // label[v] = smallest vertex in v's component
};

ComponentLabeling connected_components(const EdgeSet& a);

/// |A| + c(A) - n: the minimum number of edge deletions reducing A to a
/// forest. Zero exactly on forests.
int circuit_rank(const EdgeSet& a);

inline bool is_forest(const EdgeSet& a) { return circuit_rank(a) == 0; }

/// Maximum-weight spanning tree of the complete graph under pi, built by
/// Kruskal with a fixed edge order: weight descending, then lexicographic
/// (i,j) ascending among ties.
SpanningTree maximum_spanning_tree(const EdgeWeightMap& pi);

/// Sum of pi over all edges of the complete graph.
double total_edge_weight(const EdgeWeightMap& pi);

/// Weight of maximum_spanning_tree(pi) under pi.
double max_tree_weight(const EdgeWeightMap& pi);

/// total_edge_weight(pi) - max_tree_weight(pi): the weight carried by edges
/// outside the canonical maximum spanning tree. Nonnegative; zero iff the
/// support of pi is a forest.
double tree_penalty(const EdgeWeightMap& pi);

/// Subgradient of w -> max_tree_weight(|w_edges|): sign(w_ij) on edges of the
/// maximum spanning tree of |w|, zero elsewhere (sign(0) = 0), zero on all
/// node coordinates. Ties in |w| resolve through the Kruskal edge order.
WeightVector max_tree_weight_subgradient(const WeightVector& w);

}  // namespace crank
