#pragma once

#include <stdexcept>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

/// Dense n x m matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars),
        data_(rows * cols, Polynomial(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  PolyMatrix transposed() const {
    PolyMatrix t(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    PolyMatrix r(rows_, o.cols_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        Polynomial s(nvars_);
        for (std::size_t k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  PolyMatrix operator+(const PolyMatrix& o) const {
    PolyMatrix r(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  PolyMatrix operator-(const PolyMatrix& o) const {
    PolyMatrix r(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  PolyMatrix truncated(int d) const {
    PolyMatrix r(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].truncated(d);
    return r;
  }

  /// Substitute the coordinate map given by phi into every entry.
  PolyMatrix substituted(const std::vector<Polynomial>& phi, int trunc = -1) const {
    std::size_t out_vars = phi.empty() ? 0 : phi[0].nvars();
    PolyMatrix r(rows_, cols_, out_vars);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r.at(i, j) = at(i, j).substitute(phi, trunc);
    return r;
  }

  bool is_zero() const {
    for (const auto& p : data_)
      if (!p.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Polynomial> data_;
};

/// Symmetric n x n matrix of polynomials vanishing at the origin.
class SymMatrixGerm {
 public:
  SymMatrixGerm() = default;
  SymMatrixGerm(std::size_t n, std::size_t nvars)
      : n_(n), nvars_(nvars), entries_(n * (n + 1) / 2, Polynomial(nvars)) {}

  std::size_t size() const { return n_; }
  std::size_t nvars() const { return nvars_; }

  const Polynomial& entry(std::size_t i, std::size_t j) const {
    return entries_[index(i, j)];
  }

  void set_entry(std::size_t i, std::size_t j, const Polynomial& p) {
    if (sgn(p.constant_term()) != 0)
      throw std::invalid_argument("germ entries must vanish at 0");
    entries_[index(i, j)] = p;
  }

  static SymMatrixGerm from_strings(std::size_t n, std::size_t nvars,
                                    const std::vector<std::vector<std::string>>& upper) {
    SymMatrixGerm a(n, nvars);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        a.set_entry(i, j, parse_polynomial(upper[i][j - i], nvars));
    return a;
  }

  PolyMatrix as_matrix() const {
    PolyMatrix m(n_, n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
    return m;
  }

  static SymMatrixGerm from_matrix(const PolyMatrix& m) {
    SymMatrixGerm a(m.rows(), m.nvars());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j) a.set_entry(i, j, m.at(i, j));
    return a;
  }

  SymMatrixGerm truncated(int d) const {
    SymMatrixGerm a(n_, nvars_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      a.entries_[k] = entries_[k].truncated(d);
    return a;
  }

  SymMatrixGerm operator+(const SymMatrixGerm& o) const {
    SymMatrixGerm a(n_, nvars_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      a.entries_[k] = entries_[k] + o.entries_[k];
    return a;
  }

  SymMatrixGerm operator-(const SymMatrixGerm& o) const {
    SymMatrixGerm a(n_, nvars_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      a.entries_[k] = entries_[k] - o.entries_[k];
    return a;
  }

  bool is_zero() const {
    for (const auto& p : entries_)
      if (!p.is_zero()) return false;
    return true;
  }

  int max_entry_degree() const {
    int d = 0;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
  }

  /// Exact determinant expansion (n <= 3 in practice, general cofactor).
  Polynomial det() const { return det_of(as_matrix()); }

  static Polynomial det_of(const PolyMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Polynomial(m.nvars());
    if (n == 1) return m.at(0, 0);
    Polynomial d(m.nvars());
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix sub(n - 1, n - 1, m.nvars());
      for (std::size_t i = 1; i < n; ++i) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          sub.at(i - 1, cc++) = m.at(i, c);
        }
      }
      Polynomial t = m.at(0, j) * det_of(sub);
      d += (j % 2 == 0) ? t : -t;
    }
    return d;
  }

  /// Directional derivative dA(V) = sum_k V_k dA/dx_k; a symmetric germ again
  /// when truncated so the constant term stays zero.
  SymMatrixGerm directional_derivative(const std::vector<Polynomial>& v, int trunc = -1) const {
    SymMatrixGerm r(n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        Polynomial s(nvars_);
        for (std::size_t k = 0; k < nvars_; ++k)
          s += v[k] * entry(i, j).derivative(k);
        if (trunc >= 0) s = s.truncated(trunc);
        r.entries_[r.index(i, j)] = s;  // may have constant term for general V
      }
    return r;
  }

  /// X^T A X as a plain polynomial matrix (symmetric by construction).
  PolyMatrix congruence(const PolyMatrix& x, int trunc = -1) const {
    PolyMatrix m = x.transposed() * as_matrix() * x;
    if (trunc >= 0) m = m.truncated(trunc);
    return m;
  }

  std::vector<std::vector<Rational>> evaluate(const std::vector<Rational>& x) const {
    std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m[i][j] = entry(i, j).evaluate(x);
    return m;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0, nvars_ = 0;
  std::vector<Polynomial> entries_;
};

/// Vector field jet: r polynomial components truncated to a common order.
struct VectorFieldJet {
  std::vector<Polynomial> components;
  int order = 0;

  std::size_t nvars() const { return components.size(); }

  /// Linear part as an r x r rational matrix: row i = gradient of component i
  /// at 0, i.e. entry (i,k) is the coefficient of x_{k+1} in component i.
  std::vector<std::vector<Rational>> linear_part() const {
    std::size_t r = components.size();
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        Monomial mo(r);
        mo.exp[k] = 1;
        m[i][k] = components[i].coeff(mo);
      }
    return m;
  }

  Polynomial divergence() const {
    Polynomial d(components.size());
    for (std::size_t i = 0; i < components.size(); ++i)
      d += components[i].derivative(i);
    return d.truncated(order - 1);
  }
};

inline Polynomial divergence(const std::vector<Polynomial>& v) {
  Polynomial d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d += v[i].derivative(i);
  return d;
}

}  // namespace germlab
