#pragma once

#include <utility>

#include "crank/edge.hpp"
#include "crank/pairwise.hpp"
#include "crank/simplex.hpp"

namespace crank {

struct MapResult {
  LabelAssignment assignment;
  double value = 0.0;
};

struct LpMapResult {
  PseudoMarginals marginals;
  double value = 0.0;
};

/// Score of an assignment: node potentials + bias everywhere, edge potentials
/// over `support` only (support edges without a table contribute 0).
double score(const PairwiseModel& model, const LabelAssignment& y, const EdgeSet& support);

/// Exact MAP over a forest support via max-product with back-pointers,
/// rooted at the smallest vertex of each component. Argmax ties prefer the
/// smallest state index. Throws if the support contains a cycle.
MapResult map_tree(const PairwiseModel& model, const EdgeSet& support);

/// Exact MAP by full enumeration; returns the lexicographically smallest
/// maximizer. Guarded to state spaces of at most 2^22 joint assignments.
MapResult map_exhaustive(const PairwiseModel& model, const EdgeSet& support);

/// Exact optimum of the local-polytope LP relaxation over `support`:
/// maximize sum_i mu_i'(theta_i + bias_i) + sum_ij <mu_ij, theta_ij> subject
/// to normalization, marginalization consistency and mu >= 0. The value
/// upper-bounds the integral MAP value and matches it on forests. Binary
/// models solve a reduced equivalent program; multi-state models solve the
/// equality form directly.
LpMapResult map_lp(const PairwiseModel& model, const EdgeSet& support);

/// The general equality-form local-polytope solve (any cardinalities), with
/// the raw LP certificate. map_lp wraps this for multi-state models; tests
/// use it to check optimality certificates on binary instances too.
struct LocalPolytopeSolve {
  LpMapResult result;
  LinearProgram lp;
  LpResult raw;
};
LocalPolytopeSolve solve_local_polytope(const PairwiseModel& model, const EdgeSet& support);

/// Copy of the model with node potentials shifted by the unnormalized
/// Hamming loss against `gold`: +1 at every state differing from gold_i.
PairwiseModel loss_augment(const PairwiseModel& model, const LabelAssignment& gold);

/// Per-variable argmax of the node marginals; ties prefer the smaller state.
LabelAssignment round_marginals(const PseudoMarginals& mu);

}  // namespace crank
