#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<Rational>(cols, 0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

  const std::vector<Rational>& row(std::size_t i) const { return data_[i]; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  RationalMatrix operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (sgn(at(i, k)) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  /// In-place reduced row echelon form. Deterministic pivoting: first row with
  /// a nonzero entry in the leftmost unsettled column. Returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if (sgn(data_[i][c]) != 0) {
          sel = i;
          break;
        }
      if (sel == rows_) continue;
      std::swap(data_[r], data_[sel]);
      Rational inv = 1 / data_[r][c];
      for (std::size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || sgn(data_[i][c]) == 0) continue;
        Rational f = data_[i][c];
        for (std::size_t j = c; j < cols_; ++j) data_[i][j] -= f * data_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    RationalMatrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right kernel {x : Mx = 0}.
  std::vector<std::vector<Rational>> kernel() const {
    RationalMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<Rational> v(cols_, 0);
      v[fc] = 1;
      for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        v[pivots[pi]] = -m.at(pi, fc);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Rational det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square");
    RationalMatrix m = *this;
    Rational d = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t sel = rows_;
      for (std::size_t i = c; i < rows_; ++i)
        if (sgn(m.data_[i][c]) != 0) {
          sel = i;
          break;
        }
      if (sel == rows_) return 0;
      if (sel != c) {
        std::swap(m.data_[c], m.data_[sel]);
        d = -d;
      }
      d *= m.data_[c][c];
      Rational inv = 1 / m.data_[c][c];
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (sgn(m.data_[i][c]) == 0) continue;
        Rational f = m.data_[i][c] * inv;
        for (std::size_t j = c; j < cols_; ++j) m.data_[i][j] -= f * m.data_[c][j];
      }
    }
    return d;
  }

  RationalMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
    RationalMatrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
      throw std::invalid_argument("singular matrix");
    RationalMatrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> data_;
};

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline SparseVec to_sparse(const std::vector<Rational>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

/// Echelonized basis of a linear subspace of a finite-dimensional coordinate
/// space. Rows are kept pivot-normalized; insertion reduces incrementally, so
/// large spanning sets stay cheap. Deterministic: pivot is the first nonzero
/// coordinate in the fixed coordinate order.
class JetSubspace {
 public:
  explicit JetSubspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Reduce v against the current basis; returns the residual.
  SparseVec reduce(SparseVec v) const {
    for (;;) {
      if (v.empty()) return v;
      auto it = pivot_row_.find(v.front().first);
      if (it == pivot_row_.end()) {
        // Leading coordinate is not a pivot; try to reduce deeper entries too.
        SparseVec out;
        out.push_back(v.front());
        v.erase(v.begin());
        while (!v.empty()) {
          auto jt = pivot_row_.find(v.front().first);
          if (jt == pivot_row_.end()) {
            out.push_back(v.front());
            v.erase(v.begin());
          } else {
            v = axpy(v, rows_[jt->second], -v.front().second);
          }
        }
        return merge(out, v);
      }
      v = axpy(v, rows_[it->second], -v.front().second);
    }
  }

  /// Insert a vector; returns true if it enlarged the span.
  bool insert(SparseVec v) {
    check(v);
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational inv = 1 / v.front().second;
    for (auto& [i, c] : v) c *= inv;
    pivot_row_[v.front().first] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(SparseVec v) const {
    check(v);
    return reduce(std::move(v)).empty();
  }

  const std::vector<SparseVec>& basis() const { return rows_; }

  bool has_pivot(int coord) const { return pivot_row_.count(coord) > 0; }

 private:
  void check(const SparseVec& v) const {
    if (!v.empty() && v.back().first >= static_cast<int>(ambient_))
      throw std::invalid_argument("vector exceeds ambient dimension");
  }

  // v + f * w, both sorted sparse
  static SparseVec axpy(const SparseVec& v, const SparseVec& w, const Rational& f) {
    SparseVec r;
    r.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
      if (j >= w.size() || (i < v.size() && v[i].first < w[j].first)) {
        r.push_back(v[i++]);
      } else if (i >= v.size() || w[j].first < v[i].first) {
        Rational c = f * w[j].second;
        if (sgn(c) != 0) r.emplace_back(w[j].first, c);
        ++j;
      } else {
        Rational c = v[i].second + f * w[j].second;
        if (sgn(c) != 0) r.emplace_back(v[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  static SparseVec merge(SparseVec a, const SparseVec& b) {
    // a's indices all precede b's after the reduction loop
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::map<int, std::size_t> pivot_row_;
};

inline JetSubspace span(std::size_t ambient_dim, const std::vector<SparseVec>& vectors) {
  JetSubspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

inline long quotient_dim(std::size_t ambient_dim, const JetSubspace& sub) {
  if (sub.ambient_dim() != ambient_dim)
    throw std::invalid_argument("inconsistent ambient");
  return static_cast<long>(ambient_dim) - static_cast<long>(sub.dim());
}

}  // namespace germlab
