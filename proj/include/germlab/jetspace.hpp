#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "germlab/linalg.hpp"
#include "germlab/matrix_germ.hpp"
#include "germlab/polynomial.hpp"

namespace germlab {

/// All monomials in r variables with total degree in [dmin, dmax], in graded
/// lexicographic order.
inline std::vector<Monomial> monomials_up_to(std::size_t r, int dmin, int dmax) {
  std::vector<Monomial> out;
  Monomial m(r);
  // enumerate recursively
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var == r) {
      int d = m.degree();
      if (d >= dmin && d <= dmax) out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m.exp[var] = e;
      self(self, var + 1, remaining - e);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0, dmax);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return GradedLexLess()(a, b);
  });
  return out;
}

/// Coordinate chart for jets of maps (K^r,0) -> Sym_n with entry degrees in
/// [dmin, dmax]. Coordinates are grouped by monomial degree (graded-lex),
/// then by upper-triangle entry in row-major order, so homogeneous blocks of
/// the ambient space are contiguous.
class SymJetChart {
 public:
  SymJetChart(std::size_t n, std::size_t r, int dmin, int dmax)
      : n_(n), r_(r), dmin_(dmin), dmax_(dmax),
        monos_(monomials_up_to(r, dmin, dmax)) {
    entries_ = n * (n + 1) / 2;
    for (std::size_t k = 0; k < monos_.size(); ++k) mono_index_[key(monos_[k])] = k;
  }

  std::size_t dim() const { return entries_ * monos_.size(); }
  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  int dmax() const { return dmax_; }

  int coord(std::size_t entry, std::size_t mono_idx) const {
    return static_cast<int>(mono_idx * entries_ + entry);
  }

  /// entry index for upper-triangle position (i,j), i <= j
  std::size_t entry_index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::pair<std::size_t, std::size_t> entry_position(std::size_t e) const {
    for (std::size_t i = 0, k = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j, ++k)
        if (k == e) return {i, j};
    throw std::out_of_range("entry index");
  }

  const std::vector<Monomial>& monomials() const { return monos_; }

  /// Vectorize the upper triangle of a symmetric polynomial matrix; terms
  /// outside [dmin, dmax] are dropped.
  SparseVec to_vec(const PolyMatrix& m) const {
    std::map<int, Rational> acc;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        std::size_t e = entry_index(i, j);
        for (const auto& [mo, c] : m.at(i, j).terms()) {
          int d = mo.degree();
          if (d < dmin_ || d > dmax_) continue;
          acc[coord(e, mono_index_.at(key(mo)))] += c;
        }
      }
    SparseVec v;
    for (const auto& [i, c] : acc)
      if (sgn(c) != 0) v.emplace_back(i, c);
    return v;
  }

  SparseVec to_vec(const SymMatrixGerm& a) const { return to_vec(a.as_matrix()); }

  /// Rebuild a symmetric polynomial matrix from a coordinate vector.
  PolyMatrix from_vec(const SparseVec& v) const {
    PolyMatrix m(n_, n_, r_);
    for (const auto& [idx, c] : v) {
      std::size_t e = idx % entries_;
      std::size_t mi = idx / entries_;
      auto [i, j] = entry_position(e);
      m.at(i, j) = m.at(i, j) + Polynomial::term(r_, monos_[mi], c);
      if (i != j) m.at(j, i) = m.at(i, j);
    }
    return m;
  }

  /// Coordinate indices of the homogeneous degree-d block.
  std::vector<int> homogeneous_coords(int d) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < monos_.size(); ++k)
      if (monos_[k].degree() == d)
        for (std::size_t e = 0; e < entries_; ++e) out.push_back(coord(e, k));
    return out;
  }

 private:
  static std::vector<int> key(const Monomial& m) { return m.exp; }

  std::size_t n_, r_, entries_;
  int dmin_, dmax_;
  std::vector<Monomial> monos_;
  std::map<std::vector<int>, std::size_t> mono_index_;
};

/// Coordinate chart for scalar function jets with degrees in [dmin, dmax].
class FuncJetChart {
 public:
  FuncJetChart(std::size_t r, int dmin, int dmax)
      : r_(r), dmin_(dmin), dmax_(dmax), monos_(monomials_up_to(r, dmin, dmax)) {
    for (std::size_t k = 0; k < monos_.size(); ++k) mono_index_[monos_[k].exp] = k;
  }

  std::size_t dim() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t index_of(const Monomial& m) const { return mono_index_.at(m.exp); }

  SparseVec to_vec(const Polynomial& p) const {
    std::map<int, Rational> acc;
    for (const auto& [mo, c] : p.terms()) {
      int d = mo.degree();
      if (d < dmin_ || d > dmax_) continue;
      acc[static_cast<int>(mono_index_.at(mo.exp))] += c;
    }
    SparseVec v;
    for (const auto& [i, c] : acc)
      if (sgn(c) != 0) v.emplace_back(i, c);
    return v;
  }

  Polynomial from_vec(const SparseVec& v) const {
    Polynomial p(r_);
    for (const auto& [i, c] : v) p.add_term(monos_[i], c);
    return p;
  }

 private:
  std::size_t r_;
  int dmin_, dmax_;
  std::vector<Monomial> monos_;
  std::map<std::vector<int>, std::size_t> mono_index_;
};

}  // namespace germlab
