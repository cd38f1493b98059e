#include "crank/graph.hpp"

#include <algorithm>
#include <numeric>

namespace crank {

ComponentLabeling connected_components(const EdgeSet& a) {
  UnionFind uf(a.n);
  for (const Edge& e : a.edges) uf.unite(e.i, e.j);

  ComponentLabeling out;
  out.label.assign(a.n, -1);
  // Component id = smallest vertex in the component. A first pass records the
  // minimum per root, a second assigns it.
  std::vector<int> root_min(a.n, -1);
  for (int v = 0; v < a.n; ++v) {
    int r = uf.find(v);
    if (root_min[r] < 0) root_min[r] = v;  // ascending v, so first hit is the min
  }
  for (int v = 0; v < a.n; ++v) out.label[v] = root_min[uf.find(v)];
  for (int v = 0; v < a.n; ++v)
    if (out.label[v] == v) ++out.count;
  return out;
}

int circuit_rank(const EdgeSet& a) {
  return a.size() + connected_components(a).count - a.n;
}

SpanningTree maximum_spanning_tree(const EdgeWeightMap& pi) {
  if (pi.n == 0) throw std::invalid_argument("maximum_spanning_tree: empty graph");
  std::vector<Edge> order = complete_edges(pi.n);
  std::stable_sort(order.begin(), order.end(), [&pi](const Edge& a, const Edge& b) {
    double wa = pi(a), wb = pi(b);
    if (wa != wb) return wa > wb;
    return a < b;
  });

  SpanningTree tree;
  tree.n = pi.n;
  tree.edges.reserve(pi.n > 0 ? pi.n - 1 : 0);
  UnionFind uf(pi.n);
  for (const Edge& e : order) {
    if (uf.unite(e.i, e.j)) {
      tree.edges.push_back(e);
      if (static_cast<int>(tree.edges.size()) == pi.n - 1) break;
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

double total_edge_weight(const EdgeWeightMap& pi) { return pi.weights.sum(); }

double max_tree_weight(const EdgeWeightMap& pi) {
  SpanningTree t = maximum_spanning_tree(pi);
  double sum = 0.0;
  for (const Edge& e : t.edges) sum += pi(e);
  return sum;
}

double tree_penalty(const EdgeWeightMap& pi) {
  return total_edge_weight(pi) - max_tree_weight(pi);
}

WeightVector max_tree_weight_subgradient(const WeightVector& w) {
  WeightVector v(w.L, w.d);
  SpanningTree t = maximum_spanning_tree(w.edge_weight_map());
  for (const Edge& e : t.edges) {
    double we = w.edge(e);
    v.edge(e) = we > 0.0 ? 1.0 : (we < 0.0 ? -1.0 : 0.0);
  }
  return v;
}

}  // namespace crank
