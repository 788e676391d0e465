#include "matkit.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <utility>

namespace etcons {

namespace {

using EMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EMap = Eigen::Map<EMat>;
using ECMap = Eigen::Map<const EMat>;

ECMap emap(const Mat& m) { return ECMap(m.data(), m.rows(), m.cols()); }
EMap emap(Mat& m) { return EMap(m.data(), m.rows(), m.cols()); }

Mat from_eigen(const Eigen::MatrixXd& e) {
  Mat out(int(e.rows()), int(e.cols()));
  emap(out) = e;
  return out;
}

void require_finite(const Mat& m, const char* op) {
  if (!m.all_finite())
    throw_domain(std::string(op) + ": non-finite entries");
}

// ||a - a^T||_F <= 1e-9 * max(1, ||a||_F)
bool symmetric_to_tol(const Mat& a) {
  double fro = a.frobenius_norm();
  double asym = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) {
      double d = a(i, j) - a(j, i);
      asym += 2.0 * d * d;
    }
  return std::sqrt(asym) <= 1e-9 * std::max(1.0, fro);
}

Mat symmetrized(const Mat& a) {
  Mat s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

}  // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) throw_dim("Mat: negative dimension");
}

Mat::Mat(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw_dim("Mat: negative dimension");
  if (entries_.size() != size_t(rows) * cols)
    throw_dim("Mat: entries length != rows*cols");
  if (!all_finite()) throw_domain("Mat: non-finite entries");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ > 0 ? int(rows.begin()->size()) : 0;
  entries_.reserve(size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw_dim("Mat: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw_domain("Mat: non-finite entries");
}

Mat Mat::identity(int k) {
  Mat m(k, k);
  for (int i = 0; i < k; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(std::span<const double> d) {
  Mat m(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::col_vector(std::span<const double> v) {
  Mat m(int(v.size()), 1);
  for (int i = 0; i < int(v.size()); ++i) m(i, 0) = v[i];
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    throw_dim("Mat::block out of range");
  Mat b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void Mat::set_block(int row0, int col0, const Mat& b) {
  if (row0 < 0 || col0 < 0 || row0 + b.rows() > rows_ || col0 + b.cols() > cols_)
    throw_dim("Mat::set_block out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

Mat Mat::row(int i) const { return block(i, 0, 1, cols_); }

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (double v : entries_) s += v * v;
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double s = 0.0;
  for (double v : entries_) s = std::max(s, std::fabs(v));
  return s;
}

bool Mat::all_finite() const {
  for (double v : entries_)
    if (!std::isfinite(v)) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_dim("Mat +: shape mismatch");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_dim("Mat -: shape mismatch");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& v : entries_) v *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw_dim("Mat *: inner dimension mismatch");
  Mat c(a.rows(), b.cols());
  emap(c) = emap(a) * emap(b);
  return c;
}

Mat kron(const Mat& a, const Mat& b) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      double aij = a(i, j);
      if (aij == 0.0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

Mat hadamard(const Mat& a, const Mat& b) {
  require_finite(a, "hadamard");
  require_finite(b, "hadamard");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw_dim("hadamard: shape mismatch");
  Mat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

Mat pinv(const Mat& a, double tol) {
  require_finite(a, "pinv");
  if (tol <= 0.0) throw_domain("pinv: tol must be > 0");
  if (a.empty()) return Mat(a.cols(), a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(emap(a),
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  Eigen::VectorXd inv_sv(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    inv_sv(k) = sv(k) > cutoff && sv(k) > 0.0 ? 1.0 / sv(k) : 0.0;
  Eigen::MatrixXd p = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
  return from_eigen(p);
}

int rank(const Mat& a, double tol) {
  require_finite(a, "rank");
  if (tol <= 0.0) throw_domain("rank: tol must be > 0");
  if (a.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(emap(a));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  double cutoff = tol * sv(0);
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++r;
  return r;
}

std::vector<double> singular_values(const Mat& a) {
  require_finite(a, "singular_values");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(emap(a));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

bool is_positive_definite(const Mat& a) {
  require_finite(a, "is_positive_definite");
  if (a.rows() != a.cols()) throw_dim("is_positive_definite: non-square");
  if (a.empty()) return false;
  if (!symmetric_to_tol(a)) return false;
  Mat s = symmetrized(a);
  Eigen::LLT<Eigen::MatrixXd> llt(emap(s));
  if (llt.info() != Eigen::Success) return false;
  // LLT may succeed on a singular boundary case; insist on positive pivots.
  for (int i = 0; i < s.rows(); ++i)
    if (llt.matrixL()(i, i) <= 0.0) return false;
  return true;
}

SymEig sym_eig(const Mat& a) {
  require_finite(a, "sym_eig");
  if (a.rows() != a.cols()) throw_dim("sym_eig: non-square");
  if (!symmetric_to_tol(a)) throw_domain("sym_eig: input not symmetric to tolerance");
  Mat s = symmetrized(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(emap(s));
  if (es.info() != Eigen::Success) throw_domain("sym_eig: eigensolver failed");
  SymEig out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + s.rows());
  out.vectors = from_eigen(es.eigenvectors());
  return out;
}

Mat solve(const Mat& a, const Mat& b) {
  require_finite(a, "solve");
  require_finite(b, "solve");
  if (a.rows() != a.cols()) throw_dim("solve: matrix not square");
  if (a.rows() != b.rows()) throw_dim("solve: rhs rows mismatch");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(emap(a));
  Eigen::MatrixXd x = lu.solve(emap(b));
  if (!x.allFinite()) throw_domain("solve: singular system");
  return from_eigen(x);
}

Mat inverse(const Mat& a) { return solve(a, Mat::identity(a.rows())); }

double sym_eig_max(const Mat& a) {
  Mat s = symmetrized(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(emap(s), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(s.rows() - 1);
}

double sym_eig_min(const Mat& a) {
  Mat s = symmetrized(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(emap(s), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double vec_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double vec_dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace etcons
