#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/quasihom.hpp"
#include "germlab/witness.hpp"

namespace germlab {

/// Span of the divergences of liftable vector fields (and their function
/// multiples) inside function jets of order ≤ d: the infinitesimal action of
/// the isotropy group on volume-form densities. Liftable fields are taken at
/// a higher jet order so that multiplying by monomials and taking div stays
/// accurate to degree d.
inline JetSubspace divergence_module(const SymMatrixGerm& a, int d,
                                     int lda_degree = -1) {
  if (lda_degree < 0) lda_degree = d + 4;
  if (lda_degree < d + 1)
    throw std::invalid_argument("liftable-field order too small for degree");
  std::size_t r = a.nvars();
  LdaJets jets = lda_jets(a, lda_degree);
  FuncJetChart chart(r, 0, d);
  JetSubspace sub(chart.dim());
  std::vector<Monomial> mults = monomials_up_to(r, 0, d);
  for (const LdaPair& pair : jets.basis)
    for (const Monomial& m : mults) {
      Polynomial mp = Polynomial::term(r, m, 1);
      std::vector<Polynomial> mv;
      for (const Polynomial& c : pair.v.components) mv.push_back(mp * c);
      sub.insert(chart.to_vec(divergence(mv).truncated(d)));
    }
  return sub;
}

/// Dimension of function jets of order ≤ d modulo the divergence span: the
/// space of volume-form moduli at this truncation.
inline long moduli_quotient_dim(const SymMatrixGerm& a, int d,
                                int lda_degree = -1) {
  JetSubspace sub = divergence_module(a, d, lda_degree);
  return static_cast<long>(sub.ambient_dim()) - static_cast<long>(sub.dim());
}

/// Search for a self-equivalence B = Xᵀ(A∘Φ)X = A with orientation-reversing
/// linear Φ and constant X, over entries in {−1, 0, 1}. A negative result is
/// only "not found within this budget", never a proof of absence.
struct OrientationSearchResult {
  bool found = false;
  CongruenceWitness witness;
  long candidates_checked = 0;
};

inline OrientationSearchResult orientation_reversing_search(
    const SymMatrixGerm& a, long budget = 5000000) {
  std::size_t r = a.nvars(), n = a.size();
  int deg = std::max(a.max_entry_degree(), 1);
  OrientationSearchResult out;

  // linear parts of A for the cheap prefilter: A1 = Σ C_k x_k
  std::vector<RationalMatrix> c1;
  for (std::size_t k = 0; k < r; ++k) {
    RationalMatrix m(n, n);
    Monomial mo(r);
    mo.exp[k] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.entry(i, j).coeff(mo);
    c1.push_back(m);
  }

  std::vector<int> mdig(r * r, 0), xdig(n * n, 0);
  auto next = [](std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (++v[i] <= 1) return true;
      v[i] = -1;
    }
    return false;
  };
  for (std::size_t i = 0; i < r * r; ++i) mdig[i] = -1;
  do {
    RationalMatrix l(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) l.at(i, j) = rat(mdig[i * r + j]);
    if (sgn(l.det()) >= 0) continue;
    std::vector<Polynomial> phi;
    for (std::size_t i = 0; i < r; ++i) {
      Polynomial p(r);
      for (std::size_t j = 0; j < r; ++j)
        p += l.at(i, j) * Polynomial::variable(r, j);
      phi.push_back(p);
    }
    for (std::size_t i = 0; i < n * n; ++i) xdig[i] = -1;
    do {
      if (out.candidates_checked++ > budget) return out;
      RationalMatrix x0(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x0.at(i, j) = rat(xdig[i * n + j]);
      if (sgn(x0.det()) == 0) continue;
      // prefilter on the linear part: X0ᵀ(Σ C_k Φ_k) X0 = Σ C_k x_k
      bool ok = true;
      for (std::size_t k = 0; k < r && ok; ++k) {
        RationalMatrix lhs(n, n);
        for (std::size_t m = 0; m < r; ++m)
          if (sgn(l.at(m, k)) != 0) {
            RationalMatrix t = c1[m];
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j)
                lhs.at(i, j) += l.at(m, k) * t.at(i, j);
          }
        lhs = x0.transposed() * lhs * x0;
        for (std::size_t i = 0; i < n && ok; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (lhs.at(i, j) != c1[k].at(i, j)) {
              ok = false;
              break;
            }
      }
      if (!ok) continue;
      CongruenceWitness w;
      w.phi = phi;
      w.x = PolyMatrix(n, n, r);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          w.x.at(i, j) = Polynomial::constant(r, x0.at(i, j));
      WitnessCheck chk = verify_congruence_witness(a, a, w, deg + 1);
      if (chk.holds && chk.orientation_sign < 0) {
        out.found = true;
        out.witness = w;
        return out;
      }
    } while (next(xdig));
  } while (next(mdig));
  return out;
}

/// Whether a classification-table class splits into a ± pair under
/// volume-preserving equivalence, with the weights of the associated
/// one-parameter scaling. Table-driven bookkeeping.
struct SplittingRecord {
  bool splits = false;
  std::vector<long> weights;  ///< scaling weights (λ1, λ2)
};

/// table: 2 for the planar list, 3 for the three-by-three list.
inline SplittingRecord unimodular_splitting(int table, int class_id, long l1 = 2,
                                            long l2 = 2) {
  if (table == 2) {
    switch (class_id) {
      case 1: return {false, {1, 1}};
      case 2: return {false, {1, 1}};
      case 3: return {false, {2, l1 + 1}};
      case 4: return {false, {l1, 1}};
      case 5: return {false, {l1 + l2, 2}};
      case 6: return {false, {4, 3}};
      case 7: return {false, {2, l1}};
      case 8: return {true, {l1 - 1, 1}};
      case 9: return {true, {2 * l1 - 1, 2}};
      case 10: return {true, {3, 2}};
    }
  } else if (table == 3) {
    switch (class_id) {
      case 1: return {false, {1, 1}};
      case 2: return {false, {1, 1}};
      case 3: return {false, {1, 1}};
      case 4: return {false, {l1 + l2, 2}};
      case 5: return {true, {l1, 1}};
      case 6: return {false, {4, 3}};
      case 7: return {true, {3, 2}};
      case 8: return {true, {3, 2}};
      case 9: return {true, {5, 3}};
      case 10: return {true, {5, 3}};
    }
  }
  throw std::invalid_argument("unknown class");
}

/// Symbolic model of the self-equivalence equation A∘Φ = XᵀAX through
/// x-degree k, with the low-order coefficients of Φ and X as formal
/// unknowns. Used to derive, coefficient identity by coefficient identity,
/// sign constraints on det dΦ(0).
///
/// Ring layout: variables 0..r−1 are x1..xr; the rest are unknowns —
/// the linear part L of Φ, higher Φ coefficients up to x-degree k, the
/// constant part X0 of X, and higher X coefficients up to x-degree k−1.
class IsotropyJetSystem {
 public:
  IsotropyJetSystem(const SymMatrixGerm& a, int k) : r_(a.nvars()), n_(a.size()), k_(k) {
    phi_monos_ = monomials_up_to(r_, 2, k_);
    x_monos_ = monomials_up_to(r_, 1, std::max(k_ - 1, 0));
    l_base_ = r_;
    phi_base_ = l_base_ + r_ * r_;
    x0_base_ = phi_base_ + r_ * phi_monos_.size();
    xh_base_ = x0_base_ + n_ * n_;
    nvars_ = xh_base_ + n_ * n_ * x_monos_.size();

    std::vector<Polynomial> phi;
    for (std::size_t i = 0; i < r_; ++i) {
      Polynomial p(nvars_);
      for (std::size_t j = 0; j < r_; ++j)
        p += Polynomial::variable(nvars_, l(i, j)) * xvar(j);
      for (std::size_t m = 0; m < phi_monos_.size(); ++m)
        p += Polynomial::variable(nvars_, phi_coeff(i, phi_monos_[m])) *
             xmono(phi_monos_[m]);
      phi.push_back(p);
    }
    PolyMatrix x(n_, n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Polynomial p = Polynomial::variable(nvars_, x0(i, j));
        for (std::size_t m = 0; m < x_monos_.size(); ++m)
          p += Polynomial::variable(nvars_, x_coeff(i, j, x_monos_[m])) *
               xmono(x_monos_[m]);
        x.at(i, j) = p;
      }

    PolyMatrix lifted(n_, n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        lifted.at(i, j) = lift(a.entry(i, j));
    PolyMatrix composed(n_, n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::vector<Polynomial> args = phi;
        for (std::size_t v = r_; v < nvars_; ++v)
          args.push_back(Polynomial::variable(nvars_, v));
        composed.at(i, j) = prune(lifted.at(i, j).substitute(args));
      }
    PolyMatrix rhs = x.transposed() * lifted * x;
    diff_ = PolyMatrix(n_, n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        diff_.at(i, j) = prune(composed.at(i, j) - prune(rhs.at(i, j)));
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t l(std::size_t i, std::size_t j) const { return l_base_ + i * r_ + j; }
  std::size_t x0(std::size_t i, std::size_t j) const { return x0_base_ + i * n_ + j; }
  std::size_t phi_coeff(std::size_t i, const Monomial& m) const {
    return phi_base_ + i * phi_monos_.size() + mono_index(phi_monos_, m);
  }
  std::size_t x_coeff(std::size_t i, std::size_t j, const Monomial& m) const {
    return xh_base_ + (i * n_ + j) * x_monos_.size() + mono_index(x_monos_, m);
  }
  Polynomial unknown(std::size_t v) const { return Polynomial::variable(nvars_, v); }

  /// Record a derived fact "variable = value" (value in the unknown ring);
  /// applied to every subsequently requested equation.
  void fact(std::size_t var, const Polynomial& value) { facts_[var] = value; }
  void fact(std::size_t var, const Rational& value) {
    facts_[var] = Polynomial::constant(nvars_, value);
  }

  /// Coefficient of the x-monomial `exps` in entry (i,j) of A∘Φ − XᵀAX,
  /// as a polynomial in the unknowns, with all recorded facts substituted.
  Polynomial equation(std::size_t i, std::size_t j,
                      std::initializer_list<int> exps) const {
    Monomial xm(nvars_);
    std::size_t v = 0;
    for (int e : exps) xm.exp[v++] = e;
    Polynomial out(nvars_);
    for (const auto& [m, c] : diff_.at(i, j).terms()) {
      bool match = true;
      for (std::size_t t = 0; t < r_; ++t)
        if (m.exp[t] != xm.exp[t]) {
          match = false;
          break;
        }
      if (!match) continue;
      Monomial rest = m;
      for (std::size_t t = 0; t < r_; ++t) rest.exp[t] = 0;
      out += Polynomial::term(nvars_, rest, c);
    }
    return apply_facts(out);
  }

  /// det of the linear part L of Φ, with facts substituted.
  Polynomial det_l() const {
    PolyMatrix m(r_, r_, nvars_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j) m.at(i, j) = unknown(l(i, j));
    return apply_facts(SymMatrixGerm::det_of(m));
  }

  /// det of the constant part X0 of X, with facts substituted.
  Polynomial det_x0() const {
    PolyMatrix m(n_, n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = unknown(x0(i, j));
    return apply_facts(SymMatrixGerm::det_of(m));
  }

  Polynomial apply_facts(const Polynomial& p) const {
    if (facts_.empty()) return p;
    std::vector<Polynomial> args;
    for (std::size_t v = 0; v < nvars_; ++v) {
      auto it = facts_.find(v);
      args.push_back(it == facts_.end() ? Polynomial::variable(nvars_, v)
                                        : it->second);
    }
    // iterate: facts may refer to other substituted variables
    Polynomial cur = p;
    for (int round = 0; round < 4; ++round) {
      Polynomial nxt = cur.substitute(args);
      if ((nxt - cur).is_zero()) break;
      cur = nxt;
    }
    return cur;
  }

 private:
  static std::size_t mono_index(const std::vector<Monomial>& list,
                                const Monomial& m) {
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i].exp == m.exp) return i;
    throw std::invalid_argument("monomial outside the modeled range");
  }
  Polynomial xvar(std::size_t j) const { return Polynomial::variable(nvars_, j); }
  Polynomial xmono(const Monomial& m) const {
    Monomial big(nvars_);
    for (std::size_t t = 0; t < r_; ++t) big.exp[t] = m.exp[t];
    return Polynomial::term(nvars_, big, 1);
  }
  Polynomial lift(const Polynomial& p) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : p.terms()) {
      Monomial big(nvars_);
      for (std::size_t t = 0; t < r_; ++t) big.exp[t] = m.exp[t];
      out += Polynomial::term(nvars_, big, c);
    }
    return out;
  }
  /// Drop terms of x-degree > k.
  Polynomial prune(const Polynomial& p) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : p.terms()) {
      int xd = 0;
      for (std::size_t t = 0; t < r_; ++t) xd += m.exp[t];
      if (xd <= k_) out += Polynomial::term(nvars_, m, c);
    }
    return out;
  }

  std::size_t r_, n_;
  int k_;
  std::vector<Monomial> phi_monos_, x_monos_;
  std::size_t l_base_, phi_base_, x0_base_, xh_base_, nvars_;
  PolyMatrix diff_{0, 0, 0};
  std::map<std::size_t, Polynomial> facts_;
};

}  // namespace germlab
