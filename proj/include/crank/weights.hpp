#pragma once

#include <Eigen/Dense>

#include <stdexcept>

#include "crank/edge.hpp"

namespace crank {

/// Weights of the multi-label pairwise model: one block of d+1 node weights
/// per label (the +1 multiplies a constant bias feature appended to every
/// input) and one scalar per unordered label pair.
struct WeightVector {
  int L = 0;  // label count
  int d = 0;  // raw feature dimension (node blocks have d+1 entries)
  Eigen::MatrixXd node_w;  // L x (d+1)
  Eigen::VectorXd edge_w;  // L*(L-1)/2, complete-graph edge-index order

  WeightVector() = default;
  WeightVector(int labels, int features)
      : L(labels),
        d(features),
        node_w(Eigen::MatrixXd::Zero(labels, features + 1)),
        edge_w(Eigen::VectorXd::Zero(complete_edge_count(labels))) {
    if (labels < 1 || features < 0)
      throw std::invalid_argument("WeightVector: bad dimensions");
  }

  double edge(const Edge& e) const { return edge_w[edge_index(L, e)]; }
  double& edge(const Edge& e) { return edge_w[edge_index(L, e)]; }

  void setZero() {
    node_w.setZero();
    edge_w.setZero();
  }

  double squaredNorm() const { return node_w.squaredNorm() + edge_w.squaredNorm(); }

  double dot(const WeightVector& o) const {
    return node_w.cwiseProduct(o.node_w).sum() + edge_w.dot(o.edge_w);
  }

  WeightVector& operator+=(const WeightVector& o) {
    node_w += o.node_w;
    edge_w += o.edge_w;
    return *this;
  }
  WeightVector& operator-=(const WeightVector& o) {
    node_w -= o.node_w;
    edge_w -= o.edge_w;
    return *this;
  }
  WeightVector& operator*=(double s) {
    node_w *= s;
    edge_w *= s;
    return *this;
  }

  /// axpy: *this += s * o.
  void add_scaled(const WeightVector& o, double s) {
    node_w += s * o.node_w;
    edge_w += s * o.edge_w;
  }

  /// pi(w): l1 norm of each edge block; blocks are scalars here.
  EdgeWeightMap edge_weight_map() const { return EdgeWeightMap(L, edge_w.cwiseAbs()); }

  /// Flat coordinate layout (node blocks row by row, then edge scalars).
  Eigen::VectorXd flatten() const {
    Eigen::VectorXd out(node_w.size() + edge_w.size());
    for (int i = 0; i < L; ++i) out.segment(i * (d + 1), d + 1) = node_w.row(i);
    out.tail(edge_w.size()) = edge_w;
    return out;
  }
};

}  // namespace crank
