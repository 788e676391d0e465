#pragma once

// Dense row-major matrix kernel. Sizes here are desk scale (<= ~200x200),
// so everything is plain double storage with Eigen doing the factorizations.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace etcons {

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);  // zero-filled
  Mat(int rows, int cols, std::vector<double> entries);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(int k);
  static Mat diag(std::span<const double> d);
  static Mat col_vector(std::span<const double> v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }

  std::span<const double> entries() const { return entries_; }
  std::span<double> entries() { return entries_; }
  const double* data() const { return entries_.data(); }
  double* data() { return entries_.data(); }

  Mat transpose() const;
  Mat block(int row0, int col0, int nrows, int ncols) const;
  void set_block(int row0, int col0, const Mat& b);
  Mat row(int i) const;

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> entries_;
};

struct SymEig {
  std::vector<double> values;  // ascending
  Mat vectors;                 // orthonormal columns, a*V == V*diag(values)
};

inline constexpr double kDefaultSvdTol = 1e-10;

Mat kron(const Mat& a, const Mat& b);
Mat hadamard(const Mat& a, const Mat& b);
Mat pinv(const Mat& a, double tol = kDefaultSvdTol);
int rank(const Mat& a, double tol = kDefaultSvdTol);
bool is_positive_definite(const Mat& a);
SymEig sym_eig(const Mat& a);

// Solve a*x = b for square nonsingular a (partial-pivot LU).
Mat solve(const Mat& a, const Mat& b);
Mat inverse(const Mat& a);
std::vector<double> singular_values(const Mat& a);

// Largest/smallest eigenvalue of the symmetrized input; used for margin checks.
double sym_eig_max(const Mat& a);
double sym_eig_min(const Mat& a);

double vec_norm(std::span<const double> v);
double vec_dot(std::span<const double> a, std::span<const double> b);

}  // namespace etcons
