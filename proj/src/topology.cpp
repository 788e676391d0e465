#include "topology.hpp"

#include <cmath>
#include <string>

namespace etcons::topology {

void Digraph::validate() const {
  if (n_agents < 1) throw Error(ErrorKind::Invalid, "digraph: need at least one agent");
  if (weights.rows() != n_agents || weights.cols() != n_agents)
    throw_dim("digraph: weights must be N x N");
  for (int i = 0; i < n_agents; ++i) {
    if (weights(i, i) != 0.0)
      throw Error(ErrorKind::Invalid, "digraph: nonzero diagonal weight");
    for (int j = 0; j < n_agents; ++j)
      if (weights(i, j) < 0.0)
        throw Error(ErrorKind::Invalid, "digraph: negative weight");
  }
}

bool Digraph::has_binary_weights() const {
  for (double w : weights.entries())
    if (w != 0.0 && w != 1.0) return false;
  return true;
}

Digraph digraph_from_weights(Mat weights) {
  Digraph g{weights.rows(), std::move(weights)};
  g.validate();
  return g;
}

Mat build_laplacian(const Digraph& g) {
  g.validate();
  const int N = g.n_agents;
  Mat L(N, N);
  for (int i = 0; i < N; ++i) {
    double deg = 0.0;
    for (int j = 0; j < N; ++j) {
      deg += g.weights(i, j);
      L(i, j) = -g.weights(i, j);
    }
    L(i, i) = deg;
  }
  return L;
}

namespace {

// Edge j -> i exists iff a_ij > 0 (agent i receives from j); a root must
// reach every node along such edges.
bool reachability_spanning_tree(const Digraph& g) {
  const int N = g.n_agents;
  for (int root = 0; root < N; ++root) {
    std::vector<char> seen(N, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    int count = 1;
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      for (int i = 0; i < N; ++i) {
        if (!seen[i] && g.weights(i, j) > 0.0) {
          seen[i] = 1;
          ++count;
          stack.push_back(i);
        }
      }
    }
    if (count == N) return true;
  }
  return false;
}

}  // namespace

bool has_spanning_tree(const Digraph& g) {
  g.validate();
  Mat L = build_laplacian(g);
  bool by_rank = rank(L, kDefaultSvdTol) == g.n_agents - 1;
  bool by_reach = reachability_spanning_tree(g);
  if (by_rank != by_reach)
    throw Error(ErrorKind::Internal,
                "spanning-tree diagnostics disagree (rank vs reachability); "
                "check weight scaling against the SVD tolerance");
  return by_rank;
}

LaplacianBundle reduce(const Mat& L, int dropped_row, int n) {
  const int N = L.rows();
  if (L.cols() != N) throw_dim("reduce: Laplacian must be square");
  if (N < 2) throw Error(ErrorKind::Invalid, "reduce: need at least two agents");
  if (dropped_row < 0 || dropped_row >= N)
    throw Error(ErrorKind::Invalid, "reduce: dropped_row out of range");
  if (n < 1) throw Error(ErrorKind::Invalid, "reduce: state dimension must be >= 1");
  for (int i = 0; i < N; ++i) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += L(i, j);
    if (std::fabs(s) > 1e-12 * std::max(1.0, L.max_abs()))
      throw Error(ErrorKind::Invalid, "reduce: Laplacian row " + std::to_string(i) +
                                          " does not sum to zero");
  }
  if (rank(L, kDefaultSvdTol) != N - 1)
    throw Error(ErrorKind::NoSpanningTree,
                "reduce: rank(L) != N-1, network has no spanning tree");

  LaplacianBundle b;
  b.L = L;
  b.dropped_row = dropped_row;
  b.n = n;
  b.L_hat = Mat(N - 1, N);
  int r = 0;
  for (int i = 0; i < N; ++i) {
    if (i == dropped_row) continue;
    for (int j = 0; j < N; ++j) b.L_hat(r, j) = L(i, j);
    ++r;
  }

  // alpha = l_(dropped,.) * pinv(L_hat); exact because rank(L) = N-1
  Mat dropped = L.row(dropped_row);
  Mat alpha_row = dropped * pinv(b.L_hat);
  b.alpha.assign(alpha_row.entries().begin(), alpha_row.entries().end());
  Mat resid = dropped - alpha_row * b.L_hat;
  if (resid.frobenius_norm() > 1e-10 * std::max(1.0, dropped.frobenius_norm()))
    throw Error(ErrorKind::NoSpanningTree,
                "reduce: dropped row is not in the span of the kept rows");

  // m_ij = l_ij + alpha_j * l_(i,dropped), over kept rows and kept columns
  std::vector<int> kept;
  kept.reserve(N - 1);
  for (int j = 0; j < N; ++j)
    if (j != dropped_row) kept.push_back(j);
  b.M = Mat(N - 1, N - 1);
  for (int i = 0; i < N - 1; ++i)
    for (int j = 0; j < N - 1; ++j)
      b.M(i, j) = b.L_hat(i, kept[j]) + b.alpha[j] * b.L_hat(i, dropped_row);

  Mat L_n = kron(L, Mat::identity(n));
  b.lift = L_n * pinv(b.L_hat_n());
  return b;
}

std::vector<double> disagreement(const Mat& L, int n, std::span<const double> xhat) {
  const int N = L.rows();
  if (L.cols() != N) throw_dim("disagreement: Laplacian must be square");
  if (int(xhat.size()) != N * n) throw_dim("disagreement: xhat length != N*n");
  std::vector<double> out(size_t(N) * n, 0.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double lij = L(i, j);
      if (lij == 0.0) continue;
      for (int k = 0; k < n; ++k) out[size_t(i) * n + k] += lij * xhat[size_t(j) * n + k];
    }
  return out;
}

}  // namespace etcons::topology
