#pragma once

// Directed-graph machinery: Laplacians, spanning-tree test, the row-reduced
// Laplacian with its lift matrix, dependency coefficients and correlation
// matrix used by the trigger analysis.

#include <span>
#include <vector>

#include "matkit.hpp"

namespace etcons::topology {

struct Digraph {
  int n_agents = 0;
  Mat weights;  // N x N adjacency, zero diagonal, entries >= 0

  void validate() const;
  bool has_binary_weights() const;  // every edge weight is exactly 0 or 1
};

Digraph digraph_from_weights(Mat weights);

// Bundle of everything derived from one (L, dropped_row, n) choice.
// All downstream algebra reads the recorded dropped_row, never assumes N.
struct LaplacianBundle {
  Mat L;                      // N x N
  Mat L_hat;                  // (N-1) x N, row dropped_row removed
  int dropped_row = -1;       // 0-based index of the removed row
  std::vector<double> alpha;  // row dropped_row of L expressed over L_hat rows
  Mat M;                      // (N-1) x (N-1) correlation matrix
  Mat lift;                   // L_<n> * pinv(L_hat_<n>), N*n x (N-1)*n
  int n = 0;                  // state dimension the lift was built for

  int n_agents() const { return L.rows(); }
  Mat L_hat_n() const { return kron(L_hat, Mat::identity(n)); }
  Mat M_n() const { return kron(M, Mat::identity(n)); }
};

Mat build_laplacian(const Digraph& g);

// True iff some node has directed paths to all others. Uses both
// rank(L) == N-1 and an explicit reachability search; a disagreement
// between the two raises a diagnostics error.
bool has_spanning_tree(const Digraph& g);

LaplacianBundle reduce(const Mat& L, int dropped_row, int n);

// Stacked disagreement: block i is l_(i,.)<n> * xhat, for every agent.
std::vector<double> disagreement(const Mat& L, int n, std::span<const double> xhat);

}  // namespace etcons::topology
