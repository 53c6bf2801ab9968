// Small dense linear algebra sized for this project (d up to ~100):
// row-major matrices, Cholesky solves, cyclic-Jacobi symmetric
// eigenvalues. Not a general-purpose library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace polid {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
// y += c * x
void axpy(double c, const Vec& x, Vec& y);

class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  Vec multiply(const Vec& x) const;
  void add_scaled(const Mat& other, double c);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

// Kronecker product, row-major layout: (A kron B)(i*p+k, j*q+l) = A(i,j)B(k,l).
Mat kron(const Mat& a, const Mat& b);

// Rank-one u v^T.
Mat outer(const Vec& u, const Vec& v);

// In-place lower Cholesky; returns false if the matrix is not positive
// definite (leaves the input partially overwritten).
bool cholesky_factor(Mat& a);

// Solves A x = b for symmetric positive definite A. Throws if not PD.
Vec cholesky_solve(Mat a, Vec b);

// All eigenvalues of a symmetric matrix, ascending. Throws if the input
// is not symmetric within sym_tol elementwise.
std::vector<double> sym_eigenvalues(const Mat& a, double sym_tol = 1e-9);

double min_eigenvalue_sym(const Mat& a, double sym_tol = 1e-9);
double max_eigenvalue_sym(const Mat& a, double sym_tol = 1e-9);

}  // namespace polid
