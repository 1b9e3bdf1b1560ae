#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/corpus.hpp"
#include "germlab/detinv.hpp"
#include "germlab/pencil.hpp"
#include "germlab/realsig.hpp"
#include "germlab/tangent.hpp"

namespace germlab {

/// Verification that a declared parameter stratum behaves as a single
/// jet-group orbit candidate: the orbit tangent dimension is constant on the
/// samples and the stratum's own tangent directions lie in each orbit
/// tangent space (the hypotheses of Mather's connectedness lemma).
struct StratumCheckReport {
  long dim = -1;
  bool dim_constant = false;
  bool directions_tangent = false;
  bool holds() const { return dim_constant && directions_tangent; }
};

/// `family` must be affine in the parameter vector, so the derivative along
/// a parameter direction v equals family(c + v) − family(c). Samples that
/// fail the stratum's defining condition throw.
inline StratumCheckReport mather_stratum_check(
    const std::function<SymMatrixGerm(const std::vector<Rational>&)>& family,
    const std::function<bool(const std::vector<Rational>&)>& in_stratum,
    const std::vector<std::vector<Rational>>& samples,
    const std::vector<std::vector<Rational>>& directions, int k) {
  if (samples.empty()) throw std::invalid_argument("need at least one sample");
  StratumCheckReport rep;
  rep.dim_constant = true;
  rep.directions_tangent = true;
  for (const std::vector<Rational>& c : samples) {
    if (!in_stratum(c))
      throw std::invalid_argument("sample violates the stratum condition");
    SymMatrixGerm jet = family(c).truncated(k);
    long d = orbit_tangent_dim_jet(jet, k);
    if (rep.dim < 0) rep.dim = d;
    if (d != rep.dim) rep.dim_constant = false;

    TangentSpace t = tangent_space(jet, GroupVariant::JetGroup, k);
    for (const std::vector<Rational>& v : directions) {
      std::vector<Rational> moved = c;
      for (std::size_t i = 0; i < c.size(); ++i) moved[i] += v[i];
      PolyMatrix deriv = family(moved).as_matrix() - family(c).as_matrix();
      SymMatrixGerm dg = SymMatrixGerm::from_matrix(deriv.truncated(k));
      if (!t.sub.contains(t.chart.to_vec(dg))) rep.directions_tangent = false;
    }
  }
  return rep;
}

/// Complete invariant tuple used for normal-form matching: 1-jet data,
/// codimension, local-algebra dimension of the corank-one minors, and the
/// component counts of the definite/mixed signature regions.
struct ClassInvariants {
  long codim = -1;
  bool codim_stabilized = false;
  int jet1_a = 0;     ///< n=2: 1-jet class id; n=3: dim of the 1-jet image
  int jet1_b = 0;     ///< n=2: unused; n=3: generic pencil rank
  int jet1_sign = 0;  ///< n=2: ± branch of the 1-jet class; n=3: det 2-jet type
  long jet2_dim = -1;  ///< jet-group orbit tangent dimension at order 2
  long jet3_dim = -1;  ///< ... and at order 3
  long beta0 = -1;
  long beta1 = -1;
  long mu = -1;        ///< Milnor number of the determinant (-1: unresolved)
  std::vector<long> regions;  ///< component count per signature triple
  std::vector<SignatureTriple> pencil_arcs;  ///< 1-jet pencil arc signatures
  int kernel_quad = 9;  ///< sign of the kernel-direction quadratic (9: n/a)

  bool matches(const ClassInvariants& o) const {
    return codim == o.codim && jet1_a == o.jet1_a && jet1_b == o.jet1_b &&
           jet1_sign == o.jet1_sign && jet2_dim == o.jet2_dim &&
           jet3_dim == o.jet3_dim && beta0 == o.beta0 && beta1 == o.beta1 &&
           mu == o.mu && regions == o.regions && pencil_arcs == o.pencil_arcs &&
           kernel_quad == o.kernel_quad;
  }
};

namespace detail {

inline RationalMatrix linear_coeff(const SymMatrixGerm& a, std::size_t var) {
  std::size_t n = a.size();
  Monomial m(a.nvars());
  m.exp[var] = 1;
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a.entry(i, j).coeff(m);
  return out;
}

/// Evaluate the degree-2 homogeneous part of p at the direction w.
inline Rational quadratic_part_at(const Polynomial& p,
                                  const std::vector<Rational>& w) {
  Rational out = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 2) continue;
    Rational v = c;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (int e = 0; e < m.exp[i]; ++e) v *= w[i];
    out += v;
  }
  return out;
}

/// For a 2x2 germ whose 1-jet spans a single rank-one matrix S: the sign of
/// u^T Q(w) u, where w is the kernel direction of the 1-jet in the plane, u
/// spans the matrix kernel of S, and Q(w) is the quadratic coefficient of the
/// germ along w. The sign is a congruence invariant separating the normal
/// forms with and without an x2^2 term in the cokernel slot. Returns 9 when
/// the 1-jet is not of this shape.
inline int kernel_quadratic_sign(const SymMatrixGerm& a,
                                 const RationalMatrix& c0,
                                 const RationalMatrix& d0) {
  auto is_zero = [](const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m.at(i, j)) != 0) return false;
    return true;
  };
  bool c_zero = is_zero(c0), d_zero = is_zero(d0);
  if (c_zero && d_zero) return 9;
  std::vector<Rational> w(2, 0);  // direction with vanishing 1-jet
  RationalMatrix s = c0;
  if (c_zero) {
    s = d0;
    w = {1, 0};
  } else {
    // need d0 proportional to c0: d0 = lambda * c0
    Rational lambda = 0;
    for (std::size_t i = 0; i < 2 && sgn(lambda) == 0; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (sgn(c0.at(i, j)) != 0) {
          lambda = d0.at(i, j) / c0.at(i, j);
          break;
        }
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (d0.at(i, j) != lambda * c0.at(i, j)) return 9;
    w = {-lambda, 1};
  }
  if (sgn(s.det()) != 0) return 9;  // span matrix must be rank one
  std::vector<std::vector<Rational>> ker = s.kernel();
  if (ker.size() != 1) return 9;
  RationalMatrix q(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      q.at(i, j) = quadratic_part_at(a.entry(i, j), w);
  Rational c2 = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c2 += ker[0][i] * q.at(i, j) * ker[0][j];
  return sgn(c2);
}

// only the open, nondegenerate signature regions: their component counts
// are stable under the grid proxy, unlike the measure-zero degenerate loci
inline std::vector<SignatureTriple> region_targets(int n) {
  std::vector<SignatureTriple> out;
  for (int p = n; p >= 0; --p) out.push_back({p, 0, n - p});
  return out;
}

/// Invariants other than codimension (which the caller supplies: computed
/// for inputs, taken from the table for corpus entries).
inline ClassInvariants partial_invariants(const SymMatrixGerm& a, int dmax) {
  ClassInvariants inv;
  RationalMatrix c0 = linear_coeff(a, 0), d0 = linear_coeff(a, 1);
  if (a.size() == 2) {
    OneJetClass jc = classify_one_jet(c0, d0);
    inv.jet1_a = jc.class_id;
    inv.jet1_sign = jc.sign;
  } else {
    OneJetInvariantsN3 jc = one_jet_invariants_n3({c0, d0});
    inv.jet1_a = jc.image_dim;
    inv.jet1_b = jc.generic_rank;
    inv.jet1_sign = static_cast<int>(jc.det2);
  }
  // orbit tangent dimensions of the truncated jets under the full group
  // (these are congruence-invariant, unlike the normalization subgroup
  // used for the stratum tables)
  inv.jet2_dim = static_cast<long>(
      tangent_space(a.truncated(2), GroupVariant::G, 2).sub.dim());
  inv.jet3_dim = static_cast<long>(
      tangent_space(a.truncated(3), GroupVariant::G, 3).sub.dim());
  inv.pencil_arcs = pencil_signature_arcs(c0, d0);
  if (a.size() == 2 && inv.jet1_a == 2)
    inv.kernel_quad = kernel_quadratic_sign(a, c0, d0);
  KoszulReport kb = koszul_betti(corank_minors(a), dmax);
  inv.beta0 = kb.stabilized ? kb.beta0 : -1;
  inv.beta1 = kb.stabilized ? kb.beta1 : -1;
  LocalAlgebraReport m = milnor_number(det_germ(a), dmax + 2);
  inv.mu = m.stabilized ? m.dimension : -1;
  GridSpec grid{1, rat(1, 20), 0};
  SignatureField field = signature_field(a, grid);
  for (const SignatureTriple& t : region_targets(static_cast<int>(a.size())))
    inv.regions.push_back(component_count(field, t));
  return inv;
}

}  // namespace detail

inline ClassInvariants germ_class_invariants(const SymMatrixGerm& a, int dmax = 12) {
  ClassInvariants inv = detail::partial_invariants(a, dmax);
  CodimReport c = ge_codimension(a, dmax);
  inv.codim = c.codim;
  inv.codim_stabilized = c.stabilized;
  return inv;
}

struct ClassifyReport {
  bool resolved = false;
  std::string reason;
  CorpusEntry match;
  ClassInvariants invariants;
};

/// Match a germ against the built-in normal-form tables by complete
/// invariants. Requires two variables and matrix size 2 or 3.
inline ClassifyReport classify_germ(const SymMatrixGerm& a, long max_codim = 8,
                                    int dmax = 12) {
  if (a.nvars() != 2 || (a.size() != 2 && a.size() != 3))
    throw std::invalid_argument("classification covers 2x2 and 3x3 families of two variables");
  ClassifyReport rep;
  rep.invariants = germ_class_invariants(a, dmax);
  if (!rep.invariants.codim_stabilized) {
    rep.reason = "codimension did not stabilize within the degree budget";
    return rep;
  }
  if (rep.invariants.codim > max_codim) {
    rep.reason = "codimension exceeds the requested bound";
    return rep;
  }

  static std::map<std::string, ClassInvariants> cache;
  std::string table = a.size() == 2 ? "sym2" : "sym3";
  std::vector<const CorpusEntry*> matches;
  static const std::vector<CorpusEntry> corpus = builtin_corpus();
  for (const CorpusEntry& e : corpus) {
    if (e.table != table || e.codim != rep.invariants.codim) continue;
    auto it = cache.find(e.name);
    if (it == cache.end()) {
      ClassInvariants inv = detail::partial_invariants(e.germ, dmax);
      inv.codim = e.codim;
      inv.codim_stabilized = true;
      it = cache.emplace(e.name, std::move(inv)).first;
    }
    if (it->second.matches(rep.invariants)) matches.push_back(&e);
  }
  if (matches.empty()) {
    rep.reason = "no table entry shares the invariant tuple";
    return rep;
  }
  for (const CorpusEntry* m : matches)
    if (m->class_id != matches[0]->class_id || m->l1 != matches[0]->l1 ||
        m->l2 != matches[0]->l2) {
      rep.reason = "invariants are ambiguous between distinct normal forms";
      return rep;
    }
  rep.resolved = true;
  rep.match = *matches[0];
  return rep;
}

}  // namespace germlab
