#pragma once

#include <stdexcept>
#include <vector>

#include "germlab/tangent.hpp"

namespace germlab {

/// Exact determinant of the matrix family, as a polynomial germ.
inline Polynomial det_germ(const SymMatrixGerm& a) {
  return SymMatrixGerm::det_of(a.as_matrix());
}

/// Dimension report for a truncated local-algebra computation R/I.
struct LocalAlgebraReport {
  long dimension = -1;      ///< certified when stabilized, else a lower bound
  bool stabilized = false;
  int degree_used = 0;
  std::vector<long> trace;  ///< quotient dimension per truncation degree
};

namespace detail {

/// Quotient dimension of jets of order <= d by the span of all monomial
/// multiples of the generators, truncated to degree d.
inline long ideal_quotient_dim(const std::vector<Polynomial>& gens,
                               std::size_t r, int d) {
  FuncJetChart chart(r, 0, d);
  JetSubspace sub(chart.dim());
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    for (const Monomial& m : monomials_up_to(r, 0, d))
      sub.insert(chart.to_vec((Polynomial::term(r, m, 1) * g).truncated(d)));
  }
  return static_cast<long>(chart.dim()) - static_cast<long>(sub.dim());
}

/// Nakayama-type certificate: every monomial of degree exactly `deg` lies in
/// the ideal modulo terms of degree > deg (truncation to degree <= deg is
/// precisely the quotient by that tail). By Nakayama's lemma the ideal then
/// contains the full power of the maximal ideal of that degree.
inline bool ideal_covers_degree(const std::vector<Polynomial>& gens,
                                std::size_t r, int deg) {
  FuncJetChart chart(r, 0, deg);
  JetSubspace sub(chart.dim());
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    for (const Monomial& m : monomials_up_to(r, 0, deg))
      sub.insert(chart.to_vec((Polynomial::term(r, m, 1) * g).truncated(deg)));
  }
  for (const Monomial& m : monomials_up_to(r, deg, deg))
    if (!sub.contains(chart.to_vec(Polynomial::term(r, m, 1)))) return false;
  return true;
}

inline LocalAlgebraReport local_algebra_dim(const std::vector<Polynomial>& gens,
                                            std::size_t r, int dmax) {
  LocalAlgebraReport rep;
  long prev = -1;
  for (int d = 1; d <= dmax; ++d) {
    long q = ideal_quotient_dim(gens, r, d);
    rep.trace.push_back(q);
    rep.degree_used = d;
    rep.dimension = q;
    if (q == prev && ideal_covers_degree(gens, r, d)) {
      rep.stabilized = true;
      return rep;
    }
    prev = q;
  }
  return rep;
}

}  // namespace detail

/// Milnor number of a function germ with f(0) = 0: the dimension of the
/// local algebra modulo the Jacobian ideal, computed by certified truncation.
/// A non-isolated singularity never stabilizes and is reported as a lower
/// bound with stabilized = false.
inline LocalAlgebraReport milnor_number(const Polynomial& f, int dmax = 16) {
  if (sgn(f.constant_term()) != 0)
    throw std::invalid_argument("function germ must vanish at the origin");
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < f.nvars(); ++i) jac.push_back(f.derivative(i));
  return detail::local_algebra_dim(jac, f.nvars(), dmax);
}

/// First two Betti numbers of the Koszul complex on the given generators.
struct KoszulReport {
  long beta0 = -1;  ///< dim R/I
  long beta1 = -1;  ///< dim H1 of the Koszul complex
  bool stabilized = false;
  int degree_used = 0;
};

/// beta0 via the certified local-algebra dimension; beta1 degree by degree:
/// the kernel of the first boundary map on coefficient jets of order <= D is
/// computed exactly (no truncation loss: products of the coefficients with
/// the generators stay within degree D + max generator degree), and the image
/// of the second boundary map is intersected exactly with that coefficient
/// range by echelonizing with the out-of-range coordinates eliminated first.
/// The value is taken once two consecutive truncation degrees agree.
inline KoszulReport koszul_betti(const std::vector<Polynomial>& gens, int dmax = 12) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  std::size_t r = gens[0].nvars(), k = gens.size();
  for (const Polynomial& g : gens)
    if (sgn(g.constant_term()) != 0)
      throw std::invalid_argument("generators must vanish at the origin");
  int g = 1;
  for (const Polynomial& p : gens) g = std::max(g, p.degree());

  KoszulReport rep;
  LocalAlgebraReport b0 = detail::local_algebra_dim(gens, r, dmax + g);
  rep.beta0 = b0.dimension;

  long prev = -1;
  for (int d = 2; d <= dmax; ++d) {
    FuncJetChart low(r, 0, d), full(r, 0, d + g);
    // Coordinates of (jets of order <= d+g)^k, renumbered so that monomials
    // of degree > d come first; a reduced-echelon basis row with pivot in
    // the trailing block then lies entirely in the degree-<= d range.
    std::vector<std::size_t> rank(full.dim());
    {
      std::size_t next = 0;
      for (std::size_t m = 0; m < full.dim(); ++m)
        if (full.monomials()[m].degree() > d) rank[m] = next++;
      std::size_t high = next;
      for (std::size_t m = 0; m < full.dim(); ++m)
        if (full.monomials()[m].degree() <= d) rank[m] = next++;
      // coordinate of (component t, monomial m) = rank[m]*k + t
      // "low block" starts at high*k.
      JetSubspace im(full.dim() * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          for (const Monomial& m : monomials_up_to(r, 0, d)) {
            Polynomial pm = Polynomial::term(r, m, 1);
            Polynomial ci = pm * gens[i], cj = pm * gens[j];
            SparseVec v;
            for (const auto& [mo, c] : cj.terms())
              v.emplace_back(static_cast<int>(rank[full.index_of(mo)] * k + i), -c);
            for (const auto& [mo, c] : ci.terms())
              v.emplace_back(static_cast<int>(rank[full.index_of(mo)] * k + j), c);
            std::sort(v.begin(), v.end());
            im.insert(std::move(v));
          }
      long im_low = 0;
      for (const SparseVec& row : im.basis())
        if (row.front().first >= static_cast<int>(high * k)) ++im_low;

      // Kernel of (a_1..a_k) -> sum a_i g_i on coefficients of order <= d.
      RationalMatrix d1(full.dim(), k * low.dim());
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t m = 0; m < low.dim(); ++m) {
          Polynomial prod = Polynomial::term(r, low.monomials()[m], 1) * gens[t];
          for (const auto& [mo, c] : prod.terms())
            d1.at(full.index_of(mo), t * low.dim() + m) = c;
        }
      long ker_dim = static_cast<long>(k * low.dim() - d1.rank());

      long h1 = ker_dim - im_low;
      rep.degree_used = d;
      rep.beta1 = h1;
      if (h1 == prev && b0.stabilized) {
        rep.stabilized = true;
        return rep;
      }
      prev = h1;
    }
  }
  return rep;
}

/// The (n−1)×(n−1) minors of the family, upper triangle in row-major order
/// (the generating set fixed for the Koszul computation).
inline std::vector<Polynomial> corank_minors(const SymMatrixGerm& a) {
  std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("need a matrix of size at least 2");
  std::vector<Polynomial> out;
  PolyMatrix m = a.as_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      PolyMatrix sub(n - 1, n - 1, a.nvars());
      for (std::size_t p = 0, pp = 0; p < n; ++p) {
        if (p == i) continue;
        for (std::size_t q = 0, qq = 0; q < n; ++q) {
          if (q == j) continue;
          sub.at(pp, qq) = m.at(p, q);
          ++qq;
        }
        ++pp;
      }
      out.push_back(SymMatrixGerm::det_of(sub));
    }
  return out;
}

/// Check of the index identity μ(det∘A) = 𝒢ₑ-codim(A) − β1 + β0, with each
/// quantity computed independently. Meaningful in complex mode: the caller
/// passes the +-sign representative, and the rational linear algebra equals
/// the complex one dimension for dimension.
struct IndexIdentityReport {
  long mu = -1;
  long codim = -1;
  long beta0 = -1;
  long beta1 = -1;
  bool stabilized = false;
  bool holds = false;
};

inline IndexIdentityReport theorem27_check(const SymMatrixGerm& a, int dmax = 14) {
  IndexIdentityReport rep;
  LocalAlgebraReport mu = milnor_number(det_germ(a), dmax + 2);
  CodimReport codim = ge_codimension(a, dmax);
  KoszulReport kb = koszul_betti(corank_minors(a), dmax);
  rep.mu = mu.dimension;
  rep.codim = codim.codim;
  rep.beta0 = kb.beta0;
  rep.beta1 = kb.beta1;
  rep.stabilized = mu.stabilized && codim.stabilized && kb.stabilized;
  rep.holds = rep.stabilized && rep.mu == rep.codim - rep.beta1 + rep.beta0;
  return rep;
}

}  // namespace germlab
