#pragma once

// Small dense matrix helpers used by the grid model and the oracles.
// Row-major storage; sizes here are at most a few hundred, so plain
// O(n^3) Gaussian elimination is fine.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gridsel {

using Vec = std::vector<double>;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec multiply(const Vec& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    Vec y(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      double s = 0.0;
      const double* ai = &a_[static_cast<size_t>(i) * cols_];
      for (int j = 0; j < cols_; ++j) s += ai[j] * x[j];
      y[i] = s;
    }
    return y;
  }

  Mat multiply(const Mat& b) const {
    assert(cols_ == b.rows_);
    Mat c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        double v = (*this)(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
      }
    return c;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

inline double dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double sum(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

inline double norm1(const Mat& m) {
  double best = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    double col = 0.0;
    for (int i = 0; i < m.rows(); ++i) col += std::fabs(m(i, j));
    best = std::max(best, col);
  }
  return best;
}

// Inverts a square matrix with partial pivoting. Also reports the
// reciprocal condition number estimate 1 / (||A||_1 * ||inv(A)||_1).
struct InverseResult {
  Mat inverse;
  double rcond = 0.0;
};

inline InverseResult invert(const Mat& a) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("invert: matrix not square");
  Mat work = a;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1.0;

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(work(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::fabs(work(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return {Mat(), 0.0};
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(k, j), work(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    const double d = work(k, k);
    for (int j = 0; j < n; ++j) {
      work(k, j) /= d;
      inv(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = work(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        work(i, j) -= f * work(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  double denom = norm1(a) * norm1(inv);
  double rcond = denom > 0.0 ? 1.0 / denom : 0.0;
  return {std::move(inv), rcond};
}

}  // namespace gridsel
