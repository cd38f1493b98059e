#pragma once

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <vector>

#include "crank/edge.hpp"

namespace crank {

/// Joint discrete assignment to the n output variables.
using LabelAssignment = Eigen::VectorXi;

/// Node/edge potential tables plus an optional per-variable bias table.
/// node_pot[i] has card[i] entries; edge_pot[{i,j}] is card[i] x card[j]
/// (rows indexed by the smaller vertex). bias defaults to zero and is kept
/// separate because it is data, not weights.
struct PairwiseModel {
  int n = 0;
  std::vector<int> card;
  std::vector<Eigen::VectorXd> node_pot;
  std::map<Edge, Eigen::MatrixXd> edge_pot;
  std::vector<Eigen::VectorXd> bias;  // empty means all-zero

  PairwiseModel() = default;
  PairwiseModel(int vars, std::vector<int> cards) : n(vars), card(std::move(cards)) {
    if (static_cast<int>(card.size()) != n)
      throw std::invalid_argument("PairwiseModel: card size mismatch");
    node_pot.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (card[i] < 2) throw std::invalid_argument("PairwiseModel: card must be >= 2");
      node_pot.emplace_back(Eigen::VectorXd::Zero(card[i]));
    }
  }
  static PairwiseModel uniform(int vars, int states) {
    return PairwiseModel(vars, std::vector<int>(vars, states));
  }

  void set_edge(const Edge& e, Eigen::MatrixXd table) {
    if (e.j >= n) throw std::invalid_argument("PairwiseModel: edge out of range");
    if (table.rows() != card[e.i] || table.cols() != card[e.j])
      throw std::invalid_argument("PairwiseModel: edge table shape mismatch");
    edge_pot[e] = std::move(table);
  }

  const Eigen::MatrixXd* edge_table(const Edge& e) const {
    auto it = edge_pot.find(e);
    return it == edge_pot.end() ? nullptr : &it->second;
  }

  double node_value(int i, int state) const {
    double v = node_pot[i][state];
    if (!bias.empty()) v += bias[i][state];
    return v;
  }

  void ensure_bias() {
    if (bias.empty()) {
      bias.reserve(n);
      for (int i = 0; i < n; ++i) bias.emplace_back(Eigen::VectorXd::Zero(card[i]));
    }
  }

  void check_assignment(const LabelAssignment& y) const {
    if (y.size() != n) throw std::invalid_argument("assignment length mismatch");
    for (int i = 0; i < n; ++i)
      if (y[i] < 0 || y[i] >= card[i])
        throw std::invalid_argument("state index out of range");
  }
};

/// Fractional node/edge marginals over the local polytope.
struct PseudoMarginals {
  std::vector<Eigen::VectorXd> node;
  std::map<Edge, Eigen::MatrixXd> edge;

  /// Point mass at an integral assignment, with edge tables for `support`.
  static PseudoMarginals point_mass(const PairwiseModel& m, const LabelAssignment& y,
                                    const EdgeSet& support) {
    PseudoMarginals mu;
    mu.node.reserve(m.n);
    for (int i = 0; i < m.n; ++i) {
      Eigen::VectorXd p = Eigen::VectorXd::Zero(m.card[i]);
      p[y[i]] = 1.0;
      mu.node.push_back(std::move(p));
    }
    for (const Edge& e : support.edges) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m.card[e.i], m.card[e.j]);
      t(y[e.i], y[e.j]) = 1.0;
      mu.edge[e] = std::move(t);
    }
    return mu;
  }
};

}  // namespace crank
