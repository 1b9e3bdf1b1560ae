#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "germlab/jetspace.hpp"
#include "germlab/linalg.hpp"
#include "germlab/matrix_germ.hpp"

namespace germlab {

/// Weights λᵢ for the variables and quasi-degrees δᵢ for the matrix rows:
/// the germ is quasi-homogeneous for (λ, δ) when every monomial x^α of the
/// entry (i,j) satisfies ⟨λ,α⟩ = (δᵢ+δⱼ)/2, equivalently when the scaling
/// flow of E_λ = Σ λᵢxᵢ∂ᵢ rescales the entries with exponents (δᵢ+δⱼ)/2.
struct WeightSystem {
  std::vector<long> lambda;
  std::vector<long> delta;
};

/// Verify the weighted-degree equation monomial by monomial, and cross-check
/// it against the Euler relation dA(E_λ) = ½(diag(δ)·A + A·diag(δ)).
inline bool qh_check(const SymMatrixGerm& a, const WeightSystem& w) {
  std::size_t r = a.nvars(), n = a.size();
  if (w.lambda.size() != r || w.delta.size() != n)
    throw std::invalid_argument("weight system arity mismatch");
  long total = 0;
  for (long l : w.lambda) {
    if (l < 0) throw std::invalid_argument("weights must be non-negative");
    total += l;
  }
  if (total <= 0) throw std::invalid_argument("total weight must be positive");

  bool direct = true;
  for (std::size_t i = 0; i < n && direct; ++i)
    for (std::size_t j = i; j < n && direct; ++j)
      for (const auto& [m, c] : a.entry(i, j).terms())
        if (2 * m.weighted_degree(w.lambda) != w.delta[i] + w.delta[j]) {
          direct = false;
          break;
        }

  std::vector<Polynomial> euler;
  for (std::size_t k = 0; k < r; ++k)
    euler.push_back(rat(w.lambda[k]) * Polynomial::variable(r, k));
  SymMatrixGerm lhs = a.directional_derivative(euler);
  bool via_euler = true;
  for (std::size_t i = 0; i < n && via_euler; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Polynomial rhs = rat(w.delta[i] + w.delta[j], 2) * a.entry(i, j);
      if (!(lhs.entry(i, j) - rhs).is_zero()) {
        via_euler = false;
        break;
      }
    }
  if (direct != via_euler)
    throw std::logic_error("quasi-homogeneity checks disagree");
  return direct;
}

/// Given weights λ, derive quasi-degrees δ from the entries: every nonzero
/// entry must be λ-weighted homogeneous, and its weighted degree w must
/// satisfy δᵢ+δⱼ = 2w. Free degrees are set to 0. Returns nullopt when some
/// entry is inhomogeneous or the constraints are inconsistent.
inline std::optional<std::vector<Rational>> qh_derive_delta(
    const SymMatrixGerm& a, const std::vector<long>& lambda) {
  std::size_t n = a.size();
  struct Constraint {
    std::size_t i, j;
    long w;
  };
  std::vector<Constraint> cons;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Polynomial& p = a.entry(i, j);
      if (p.is_zero()) continue;
      long w = p.terms().begin()->first.weighted_degree(lambda);
      if (!p.is_weighted_homogeneous(lambda, w)) return std::nullopt;
      cons.push_back({i, j, w});
    }

  std::vector<Rational> delta(n, 0);
  std::vector<bool> set(n, false);
  for (;;) {
    bool progress = false;
    for (const Constraint& c : cons) {
      if (c.i == c.j) {
        Rational val = rat(c.w);
        if (set[c.i]) {
          if (delta[c.i] != val) return std::nullopt;
        } else {
          delta[c.i] = val;
          set[c.i] = true;
          progress = true;
        }
      } else if (set[c.i] && set[c.j]) {
        if (delta[c.i] + delta[c.j] != rat(2 * c.w)) return std::nullopt;
      } else if (set[c.i]) {
        delta[c.j] = rat(2 * c.w) - delta[c.i];
        set[c.j] = true;
        progress = true;
      } else if (set[c.j]) {
        delta[c.i] = rat(2 * c.w) - delta[c.j];
        set[c.i] = true;
        progress = true;
      }
    }
    if (progress) continue;
    // seed one vertex of an untouched constraint component with 0
    bool seeded = false;
    for (const Constraint& c : cons)
      if (!set[c.i] && !set[c.j]) {
        set[c.i] = true;
        seeded = true;
        break;
      }
    if (!seeded) break;
  }
  for (const Constraint& c : cons)
    if (delta[c.i] + delta[c.j] != rat(2 * c.w)) return std::nullopt;
  return delta;
}

namespace detail {

/// Visit compositions of s into r parts, each ≥ lo, in lexicographic order.
template <class F>
bool visit_compositions(long s, std::size_t r, long lo, std::vector<long>& cur,
                        F&& f) {
  if (r == 1) {
    if (s < lo) return false;
    cur.push_back(s);
    bool done = f(cur);
    cur.pop_back();
    return done;
  }
  for (long v = lo; v <= s - lo * static_cast<long>(r - 1); ++v) {
    cur.push_back(v);
    bool done = visit_compositions(s - v, r - 1, lo, cur, f);
    cur.pop_back();
    if (done) return true;
  }
  return false;
}

}  // namespace detail

/// Search for a weight system that makes the germ quasi-homogeneous in the
/// given coordinates (no congruence, no coordinate change). Deterministic:
/// strictly positive weights are preferred; within a pass, candidates are
/// ordered by total weight, then lexicographically; quasi-degrees follow
/// from the entries with free degrees set to 0. Failure is not a proof that
/// no quasi-homogeneous structure exists in other coordinates.
inline std::optional<WeightSystem> qh_find_diagonal(const SymMatrixGerm& a,
                                                    long max_total = 48) {
  std::size_t r = a.nvars();
  std::optional<WeightSystem> found;
  auto try_lambda = [&](const std::vector<long>& lambda) {
    auto delta = qh_derive_delta(a, lambda);
    if (!delta) return false;
    WeightSystem w;
    w.lambda = lambda;
    for (const Rational& d : *delta) {
      if (d.get_den() != 1) return false;
      w.delta.push_back(static_cast<long>(d.get_num().get_si()));
    }
    if (!qh_check(a, w)) return false;
    found = w;
    return true;
  };
  std::vector<long> cur;
  for (long s = static_cast<long>(r); s <= max_total; ++s)
    if (detail::visit_compositions(s, r, 1, cur, try_lambda)) return found;
  for (long s = 1; s <= max_total; ++s)
    if (detail::visit_compositions(s, r, 0, cur, try_lambda)) return found;
  return std::nullopt;
}

/// One solution of dA(V) = UᵀA + AU truncated to the jet order.
struct LdaPair {
  VectorFieldJet v;
  PolyMatrix u;
};

/// Jet-level model of the vector fields V admitting a matrix germ U with
/// dA(V) = UᵀA + AU: the kernel of (V,U) ↦ dA(V) − UᵀA − AU on jets of
/// order d, with helpers for the space of achievable linear parts of V.
struct LdaJets {
  int degree = 0;
  std::size_t nvars = 0;
  std::vector<LdaPair> basis;

  /// Basis (echelonized) of the span of linear parts of the V components,
  /// flattened row-major to length r².
  std::vector<std::vector<Rational>> linear_part_span() const {
    JetSubspace sub(nvars * nvars);
    for (const LdaPair& p : basis) {
      auto lp = p.v.linear_part();
      SparseVec v;
      for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t k = 0; k < nvars; ++k)
          if (sgn(lp[i][k]) != 0)
            v.push_back({static_cast<int>(i * nvars + k), lp[i][k]});
      sub.insert(v);
    }
    std::vector<std::vector<Rational>> out;
    for (const SparseVec& row : sub.basis()) {
      std::vector<Rational> dense(nvars * nvars, 0);
      for (const auto& [idx, val] : row) dense[idx] = val;
      out.push_back(dense);
    }
    return out;
  }

  /// True when some achievable linear part has nonzero trace.
  bool has_traceful_linear_part() const {
    for (const auto& row : linear_part_span()) {
      Rational tr = 0;
      for (std::size_t i = 0; i < nvars; ++i) tr += row[i * nvars + i];
      if (sgn(tr) != 0) return true;
    }
    return false;
  }
};

inline LdaJets lda_jets(const SymMatrixGerm& a, int d) {
  if (d < 1) throw std::invalid_argument("jet order must be at least 1");
  std::size_t r = a.nvars(), n = a.size();
  std::vector<Monomial> monos = monomials_up_to(r, 0, d);
  std::size_t nm = monos.size();
  SymJetChart chart(n, r, 0, d);

  std::vector<PolyMatrix> da;
  for (std::size_t k = 0; k < r; ++k) {
    PolyMatrix m(n, n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = a.entry(i, j).derivative(k);
    da.push_back(m);
  }
  PolyMatrix amat = a.as_matrix();

  std::size_t vcols = r * nm, ucols = n * n * nm;
  RationalMatrix sys(chart.dim(), vcols + ucols);
  auto fill = [&](const PolyMatrix& germ, std::size_t col, int s) {
    for (const auto& [idx, val] : chart.to_vec(germ))
      sys.at(idx, col) = s * val;
  };
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t mi = 0; mi < nm; ++mi) {
      Polynomial mp = Polynomial::term(r, monos[mi], 1);
      PolyMatrix germ(n, n, r);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          germ.at(i, j) = (mp * da[k].at(i, j)).truncated(d);
      fill(germ, k * nm + mi, 1);
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t mi = 0; mi < nm; ++mi) {
        Polynomial mp = Polynomial::term(r, monos[mi], 1);
        // U = m·E_{pq}: (UᵀA + AU)_{ij} = m(δ_{iq}A_{pj} + δ_{jq}A_{ip})
        PolyMatrix germ(n, n, r);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Polynomial s(r);
            if (i == q) s += amat.at(p, j);
            if (j == q) s += amat.at(i, p);
            germ.at(i, j) = (mp * s).truncated(d);
          }
        fill(germ, vcols + (p * n + q) * nm + mi, -1);
      }

  LdaJets out;
  out.degree = d;
  out.nvars = r;
  for (const std::vector<Rational>& k : sys.kernel()) {
    LdaPair pair;
    pair.v.order = d;
    for (std::size_t c = 0; c < r; ++c) {
      Polynomial comp(r);
      for (std::size_t mi = 0; mi < nm; ++mi)
        if (sgn(k[c * nm + mi]) != 0)
          comp += Polynomial::term(r, monos[mi], k[c * nm + mi]);
      pair.v.components.push_back(comp);
    }
    pair.u = PolyMatrix(n, n, r);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Polynomial e(r);
        for (std::size_t mi = 0; mi < nm; ++mi) {
          const Rational& val = k[vcols + (p * n + q) * nm + mi];
          if (sgn(val) != 0) e += Polynomial::term(r, monos[mi], val);
        }
        pair.u.at(p, q) = e;
      }
    out.basis.push_back(pair);
  }
  return out;
}

/// Membership of a concrete vector field in the V-parts at jet order d:
/// does some U solve dA(V) = UᵀA + AU up to degree d? Solved directly as a
/// linear system in U alone.
inline bool lda_contains_v(const SymMatrixGerm& a,
                           const std::vector<Polynomial>& v, int d) {
  std::size_t r = a.nvars(), n = a.size();
  std::vector<Monomial> monos = monomials_up_to(r, 0, d);
  std::size_t nm = monos.size();
  SymJetChart chart(n, r, 0, d);
  PolyMatrix amat = a.as_matrix();

  JetSubspace span(chart.dim());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t mi = 0; mi < nm; ++mi) {
        Polynomial mp = Polynomial::term(r, monos[mi], 1);
        PolyMatrix germ(n, n, r);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Polynomial s(r);
            if (i == q) s += amat.at(p, j);
            if (j == q) s += amat.at(i, p);
            germ.at(i, j) = (mp * s).truncated(d);
          }
        span.insert(chart.to_vec(germ));
      }
  SymMatrixGerm dav = a.directional_derivative(v, d);
  return span.contains(chart.to_vec(dav));
}

/// Outcome of the two-sided quasi-homogeneity decision procedure.
struct SqhCertificate {
  enum class Verdict { SQH, NotSQH, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<WeightSystem> weights;  ///< set for SQH
  int degree_used = 0;
  /// dims of the achievable linear-part space per jet order (obstruction path)
  std::vector<std::size_t> trace_history;
};

/// Decide quasi-homogeneity where possible: a diagonal weight search gives
/// the positive certificate; the negative certificate observes that any
/// quasi-homogeneous structure would contribute a vector field with
/// positive-trace linear part, and that the achievable linear parts are
/// invariant data — if, after the space stabilizes in the jet order, every
/// achievable linear part is traceless, no such structure exists.
inline SqhCertificate sqh_obstruction(const SymMatrixGerm& a, int dmax = 9) {
  SqhCertificate cert;
  if (auto w = qh_find_diagonal(a)) {
    cert.verdict = SqhCertificate::Verdict::SQH;
    cert.weights = w;
    return cert;
  }
  std::vector<std::vector<std::vector<Rational>>> spans;
  bool last_traceful = true;
  for (int d = 2; d <= dmax; ++d) {
    LdaJets jets = lda_jets(a, d);
    spans.push_back(jets.linear_part_span());
    cert.trace_history.push_back(spans.back().size());
    cert.degree_used = d;
    last_traceful = jets.has_traceful_linear_part();
    std::size_t k = spans.size();
    if (k >= 3 && spans[k - 1] == spans[k - 2] && spans[k - 2] == spans[k - 3]) {
      cert.verdict = last_traceful ? SqhCertificate::Verdict::Inconclusive
                                   : SqhCertificate::Verdict::NotSQH;
      return cert;
    }
  }
  cert.verdict = SqhCertificate::Verdict::Inconclusive;
  return cert;
}

}  // namespace germlab
