#include "polid/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace polid {

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

void axpy(double c, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Mat::multiply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Mat::multiply: size mismatch");
  Vec y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    const double* row = a_.data() + static_cast<std::size_t>(i) * cols_;
    for (int j = 0; j < cols_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

void Mat::add_scaled(const Mat& other, double c) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw std::invalid_argument("Mat::add_scaled: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * other.a_[i];
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Mat outer(const Vec& u, const Vec& v) {
  Mat out(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = u[i] * v[j];
  return out;
}

bool cholesky_factor(Mat& a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("cholesky_factor: matrix must be square");
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0)) return false;
    const double l = std::sqrt(d);
    a(j, j) = l;
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / l;
      a(j, i) = 0.0;
    }
  }
  return true;
}

Vec cholesky_solve(Mat a, Vec b) {
  const int n = a.rows();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("cholesky_solve: size mismatch");
  if (!cholesky_factor(a)) throw std::runtime_error("cholesky_solve: matrix not positive definite");
  // L y = b
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= a(i, k) * b[k];
    b[i] = s / a(i, i);
  }
  // L^T x = y
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= a(k, i) * b[k];
    b[i] = s / a(i, i);
  }
  return b;
}

std::vector<double> sym_eigenvalues(const Mat& a, double sym_tol) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("sym_eigenvalues: matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(a(i, j) - a(j, i)) > sym_tol)
        throw std::invalid_argument("sym_eigenvalues: matrix not symmetric");

  Mat m = a;
  // Symmetrize exactly so rotations stay consistent.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = v;
      m(j, i) = v;
    }

  double frob = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frob += m(i, j) * m(i, j);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    if (off <= 1e-28 * std::max(1.0, frob)) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        const double app = m(p, p);
        const double aqq = m(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = m(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue_sym(const Mat& a, double sym_tol) {
  return sym_eigenvalues(a, sym_tol).front();
}

double max_eigenvalue_sym(const Mat& a, double sym_tol) {
  return sym_eigenvalues(a, sym_tol).back();
}

}  // namespace polid
