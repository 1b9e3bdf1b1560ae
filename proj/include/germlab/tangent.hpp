#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/jetspace.hpp"
#include "germlab/linalg.hpp"
#include "germlab/matrix_germ.hpp"

namespace germlab {

/// Which symmetry group acts:
///  - G: coordinate changes fixing 0 together with congruence by invertible
///    matrix families (V(0) = 0, U unrestricted).
///  - Ge: the extended version allowing constant vector fields.
///  - JetGroup: the induced action on k-jets. The constant part of the
///    congruence factor is restricted to lower-triangular matrices, the
///    subgroup preserving the bordered shape of a normalized leading entry;
///    this is the convention under which the bordered-quadratic stratum
///    dimensions come out as 11, 10, 9, 8, 7.
///  - UnipotentJetGroup: jet-level subgroup whose linear part is the
///    identity (V has zero linear part, U(0) = 0).
enum class GroupVariant { G, Ge, JetGroup, UnipotentJetGroup };

/// Tangent space to the group orbit through A, truncated to jets of degree
/// <= d, together with the chart it is expressed in.
struct TangentSpace {
  SymJetChart chart;
  JetSubspace sub;
};

/// Generators of the orbit tangent space, vectorized in `chart`. Tangent
/// vectors have the form dA(V) + U^T A + A U; monomial V components and
/// monomial-times-elementary U matrices generate the space over the scalars.
inline std::vector<SparseVec> tangent_generators(const SymMatrixGerm& a,
                                                 GroupVariant variant, int d,
                                                 const SymJetChart& chart) {
  std::size_t n = a.size(), r = a.nvars();
  int vmin = 0, umin = 0;
  switch (variant) {
    case GroupVariant::Ge: vmin = 0; umin = 0; break;
    case GroupVariant::G: vmin = 1; umin = 0; break;
    case GroupVariant::JetGroup: vmin = 1; umin = 1; break;
    case GroupVariant::UnipotentJetGroup: vmin = 2; umin = 1; break;
  }

  std::vector<SparseVec> gens;

  // Precompute the partial derivatives of the entries once.
  std::vector<PolyMatrix> da(r, PolyMatrix(n, n, r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) da[k].at(i, j) = a.entry(i, j).derivative(k);

  // dA(m e_k): entrywise m * dA/dx_k.
  for (const Monomial& m : monomials_up_to(r, vmin, d)) {
    Polynomial pm = Polynomial::term(r, m, 1);
    for (std::size_t k = 0; k < r; ++k) {
      PolyMatrix g(n, n, r);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          g.at(i, j) = (pm * da[k].at(i, j)).truncated(d);
          if (!g.at(i, j).is_zero()) nonzero = true;
        }
      if (!nonzero) continue;
      SparseVec v = chart.to_vec(g);
      if (!v.empty()) gens.push_back(std::move(v));
    }
  }

  // U = m E_{pq}: (U^T A + A U)_{ij} = m (delta_{jq} A_{ip} + delta_{iq} A_{pj}).
  // Entries of A have order >= 1, so monomials of degree >= d contribute
  // nothing after truncation.
  for (const Monomial& m : monomials_up_to(r, umin, d - 1)) {
    Polynomial pm = Polynomial::term(r, m, 1);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        PolyMatrix g(n, n, r);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) {
            Polynomial s(r);
            if (j == q) s += a.entry(i, p);
            if (i == q) s += a.entry(p, j);
            if (!s.is_zero()) g.at(i, j) = (pm * s).truncated(d);
          }
        SparseVec v = chart.to_vec(g);
        if (!v.empty()) gens.push_back(std::move(v));
      }
  }

  if (variant == GroupVariant::JetGroup) {
    // Constant lower-triangular U = E_{pq}, p >= q.
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q <= p; ++q) {
        PolyMatrix g(n, n, r);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) {
            Polynomial s(r);
            if (j == q) s += a.entry(i, p);
            if (i == q) s += a.entry(p, j);
            if (!s.is_zero()) g.at(i, j) = s.truncated(d);
          }
        SparseVec v = chart.to_vec(g);
        if (!v.empty()) gens.push_back(std::move(v));
      }
  }
  return gens;
}

inline TangentSpace tangent_space(const SymMatrixGerm& a, GroupVariant variant,
                                  int d) {
  SymJetChart chart(a.size(), a.nvars(), 0, d);
  JetSubspace sub(chart.dim());
  for (auto& g : tangent_generators(a, variant, d, chart)) sub.insert(std::move(g));
  return {chart, std::move(sub)};
}

/// True iff every coordinate basis vector of the homogeneous degree-d block
/// lies in the subspace.
inline bool top_block_covered(const SymJetChart& chart, const JetSubspace& sub,
                              int d) {
  for (int c : chart.homogeneous_coords(d))
    if (!sub.contains({{c, Rational(1)}})) return false;
  return true;
}

/// Codimension of the extended orbit tangent space in the space of all
/// symmetric-matrix germs, with a stabilization certificate.
struct CodimReport {
  long codim = -1;        ///< quotient dimension at the certified degree
  bool stabilized = false;
  int degree_used = 0;    ///< truncation degree at which the value is certified
  std::vector<long> trace;  ///< quotient dimension per truncation degree
};

/// Compute the extended-orbit codimension by raising the truncation degree
/// until the quotient dimension repeats and the whole top homogeneous block
/// lies in the truncated tangent space. Because the tangent space is a module
/// over function germs, covering one full homogeneous block certifies all
/// higher degrees, so the quotient dimension is exact from then on.
inline CodimReport ge_codimension(const SymMatrixGerm& a, int dmax = 14) {
  CodimReport rep;
  long prev = -1;
  int d0 = std::min(std::max(2, a.max_entry_degree()), dmax);
  for (int d = d0; d <= dmax; ++d) {
    TangentSpace t = tangent_space(a, GroupVariant::Ge, d);
    long q = quotient_dim(t.chart.dim(), t.sub);
    rep.trace.push_back(q);
    rep.degree_used = d;
    if (q == prev && top_block_covered(t.chart, t.sub, d)) {
      rep.codim = q;
      rep.stabilized = true;
      return rep;
    }
    prev = q;
  }
  rep.codim = prev;
  return rep;
}

/// Dimension of the jet-group orbit tangent space at the k-jet of A, inside
/// the space of k-jets of symmetric-matrix germs vanishing at the origin.
inline long orbit_tangent_dim_jet(const SymMatrixGerm& a, int k) {
  TangentSpace t = tangent_space(a.truncated(k), GroupVariant::JetGroup, k);
  return static_cast<long>(t.sub.dim());
}

/// A complete transversal at jet level k+1: monomial symmetric matrices
/// spanning a complement in the homogeneous degree-(k+1) block of the image
/// of the unipotent tangent space under projection to that block.
inline std::vector<PolyMatrix> complete_transversal(const SymMatrixGerm& a, int k) {
  SymMatrixGerm jet = a.truncated(k);
  SymJetChart top(a.size(), a.nvars(), k + 1, k + 1);
  JetSubspace w(top.dim());
  // Project each unipotent tangent generator to the top homogeneous block.
  SymJetChart full(a.size(), a.nvars(), 0, k + 1);
  for (const SparseVec& g :
       tangent_generators(jet, GroupVariant::UnipotentJetGroup, k + 1, full)) {
    PolyMatrix m = full.from_vec(g);
    PolyMatrix h(a.size(), a.size(), a.nvars());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        h.at(i, j) = m.at(i, j).homogeneous_part(k + 1);
    SparseVec v = top.to_vec(h);
    if (!v.empty()) w.insert(std::move(v));
  }
  std::vector<PolyMatrix> transversal;
  for (std::size_t c = 0; c < top.dim(); ++c)
    if (w.insert({{static_cast<int>(c), Rational(1)}}))
      transversal.push_back(top.from_vec({{static_cast<int>(c), Rational(1)}}));
  return transversal;
}

/// Infinitesimal sufficiency check for k-determinacy: at every jet level
/// k+1 <= D <= d_check, the whole top homogeneous block must lie in the
/// unipotent orbit tangent space at the D-jet of A.
inline bool determinacy_sufficient(const SymMatrixGerm& a, int k, int d_check) {
  for (int D = k + 1; D <= d_check; ++D) {
    TangentSpace t = tangent_space(a.truncated(D), GroupVariant::UnipotentJetGroup, D);
    if (!top_block_covered(t.chart, t.sub, D)) return false;
  }
  return true;
}

}  // namespace germlab
