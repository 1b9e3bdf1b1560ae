#pragma once

#include <stdexcept>
#include <utility>

#include "germlab/witness.hpp"

namespace germlab {

/// Equivalence class of a binary quadratic form under linear coordinate
/// change and multiplication by a positive function.
enum class QuadraticClass { Zero, RankOnePos, RankOneNeg, Indefinite, PosDef, NegDef };

inline const char* to_string(QuadraticClass c) {
  switch (c) {
    case QuadraticClass::Zero: return "Zero";
    case QuadraticClass::RankOnePos: return "RankOnePos";
    case QuadraticClass::RankOneNeg: return "RankOneNeg";
    case QuadraticClass::Indefinite: return "Indefinite";
    case QuadraticClass::PosDef: return "PosDef";
    case QuadraticClass::NegDef: return "NegDef";
  }
  return "?";
}

/// Classify a homogeneous binary quadratic form by rank and signature of its
/// Gram matrix.
inline QuadraticClass classify_quadratic(const Polynomial& q) {
  if (q.nvars() != 2) throw std::invalid_argument("binary form expected");
  if (q.is_zero()) return QuadraticClass::Zero;
  if (q.order() != 2 || q.degree() != 2)
    throw std::invalid_argument("form must be homogeneous of degree 2");
  Rational a = q.coeff(Monomial{2, 0});
  Rational b = q.coeff(Monomial{1, 1});
  Rational c = q.coeff(Monomial{0, 2});
  Rational det4 = 4 * a * c - b * b;  // 4·det(Gram)
  if (sgn(det4) < 0) return QuadraticClass::Indefinite;
  if (sgn(det4) > 0)
    return sgn(a) > 0 ? QuadraticClass::PosDef : QuadraticClass::NegDef;
  // rank one: sign of the nonzero eigenvalue = sign of the trace
  return sgn(a + c) > 0 ? QuadraticClass::RankOnePos : QuadraticClass::RankOneNeg;
}

/// e = e0·t² with e0 a squarefree integer (sign preserved); returns (e0, t).
inline std::pair<Rational, Rational> squarefree_split(const Rational& e) {
  if (sgn(e) == 0) return {Rational(0), Rational(1)};
  Integer num = e.get_num(), den = e.get_den();
  Integer n = num * den;  // e = n / den², same square class as n
  Rational t(1, den);
  int s = sgn(n);
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      t *= Rational(p);
    }
  }
  return {Rational(s * n), t};
}

/// Result of classifying a 1-jet C·x1 + D·x2 of a Sym₂-valued germ.
struct OneJetClass {
  int class_id = 0;            ///< 1..6
  int sign = 0;                ///< ±1 for the two-branch classes (3, 5), 0 otherwise
  Rational modulus = 1;        ///< square-class scale of the representative (±1 when canonical)
  int rank_dA0 = 0;            ///< dim span{C, D}
  QuadraticClass det2 = QuadraticClass::Zero;  ///< class of det(C x1 + D x2)
  CongruenceWitness witness;   ///< maps the input onto representative()

  /// The (possibly square-class-scaled) representative the witness reaches.
  SymMatrixGerm representative() const {
    Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
    Polynomial zero(2);
    SymMatrixGerm r(2, 2);
    switch (class_id) {
      case 1: break;
      case 2: r.set_entry(0, 0, x1); break;
      case 3:
        r.set_entry(0, 0, x2);
        r.set_entry(0, 1, x1);
        break;
      case 5:
        r.set_entry(0, 0, x1);
        r.set_entry(1, 1, modulus * x1);
        break;
      case 4:
        if (witness.canonical) {
          r.set_entry(0, 0, x1);
          r.set_entry(1, 1, x2);
        } else {
          r.set_entry(0, 0, x1);
          r.set_entry(0, 1, x2);
          r.set_entry(1, 1, modulus * x1);
        }
        break;
      case 6:
        r.set_entry(0, 0, x1);
        r.set_entry(0, 1, x2);
        r.set_entry(1, 1, modulus * x1);
        break;
      default: throw std::logic_error("bad class id");
    }
    return r;
  }
};

namespace detail {

/// Accumulates a chain of linear coordinate changes and constant congruences
/// acting on a pencil (C, D).
struct PencilReduction {
  RationalMatrix c, d;
  RationalMatrix l = RationalMatrix::identity(2);  // cumulative Φ matrix
  RationalMatrix x = RationalMatrix::identity(2);  // cumulative X

  PencilReduction(RationalMatrix c0, RationalMatrix d0)
      : c(std::move(c0)), d(std::move(d0)) {}

  /// Φ(x) = M·x, i.e. new pencil coefficient of x_j is Σ_i M_{ij}·(old coeff i).
  void coord(const RationalMatrix& m) {
    if (sgn(m.det()) == 0) throw std::logic_error("singular coordinate change");
    RationalMatrix nc(2, 2), nd(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        nc.at(i, j) = m.at(0, 0) * c.at(i, j) + m.at(1, 0) * d.at(i, j);
        nd.at(i, j) = m.at(0, 1) * c.at(i, j) + m.at(1, 1) * d.at(i, j);
      }
    c = nc;
    d = nd;
    l = l * m;
  }

  void congr(const RationalMatrix& m) {
    if (sgn(m.det()) == 0) throw std::logic_error("singular congruence");
    c = m.transposed() * c * m;
    d = m.transposed() * d * m;
    x = x * m;
  }

  CongruenceWitness witness(bool canonical) const {
    CongruenceWitness w;
    for (std::size_t i = 0; i < 2; ++i) {
      Polynomial p(2);
      for (std::size_t k = 0; k < 2; ++k)
        p += l.at(i, k) * Polynomial::variable(2, k);
      w.phi.push_back(p);
    }
    w.x = PolyMatrix(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        w.x.at(i, j) = Polynomial::constant(2, x.at(i, j));
    w.canonical = canonical;
    return w;
  }
};

/// X with XᵀSX = diag for symmetric 2x2 S of full rank.
inline RationalMatrix congruence_diagonalize(const RationalMatrix& s) {
  RationalMatrix x = RationalMatrix::identity(2);
  Rational a = s.at(0, 0), b = s.at(0, 1), c = s.at(1, 1);
  if (sgn(a) == 0 && sgn(c) == 0) {
    // hyperbolic: (x1+x2, x1-x2) splits it
    x.at(0, 0) = 1; x.at(0, 1) = 1; x.at(1, 0) = 1; x.at(1, 1) = -1;
    return x;
  }
  if (sgn(a) == 0) {
    // swap to put the nonzero entry first
    RationalMatrix sw(2, 2);
    sw.at(0, 1) = 1;
    sw.at(1, 0) = 1;
    RationalMatrix rest = congruence_diagonalize(sw.transposed() * s * sw);
    return sw * rest;
  }
  // clear the off-diagonal with a shear
  x.at(0, 1) = -b / a;
  return x;
}

/// rank-one symmetric S = σ·v·vᵀ
inline std::pair<Rational, std::vector<Rational>> rank_one_split(const RationalMatrix& s) {
  Rational a = s.at(0, 0), b = s.at(0, 1), c = s.at(1, 1);
  if (sgn(a) != 0) return {1 / a, {a, b}};
  // a = 0 forces b = 0 for rank one
  return {c, {Rational(0), Rational(1)}};
}

}  // namespace detail

/// Classify the 1-jet C·x1 + D·x2 under constant congruence and linear
/// coordinate change, producing an exact witness onto the class
/// representative (square-class-scaled when the verbatim one is rationally
/// unreachable).
inline OneJetClass classify_one_jet(const RationalMatrix& c0, const RationalMatrix& d0) {
  using detail::PencilReduction;
  OneJetClass out;
  PencilReduction red(c0, d0);

  // invariants
  {
    RationalMatrix span(2, 6);
    for (std::size_t i = 0, k = 0; i < 2; ++i)
      for (std::size_t j = i; j < 2; ++j, ++k) {
        span.at(0, k) = c0.at(i, j);
        span.at(1, k) = d0.at(i, j);
      }
    out.rank_dA0 = static_cast<int>(span.rank());
  }
  Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
  Polynomial det_form(2);
  {
    PolyMatrix a(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        a.at(i, j) = c0.at(i, j) * x1 + d0.at(i, j) * x2;
    det_form = SymMatrixGerm::det_of(a);
  }
  out.det2 = classify_quadratic(det_form);

  auto scale_coord = [&](std::size_t var, const Rational& f) {
    // x_var -> f · x_var
    RationalMatrix m = RationalMatrix::identity(2);
    m.at(var, var) = f;
    red.coord(m);
  };

  if (out.rank_dA0 == 0) {
    out.class_id = 1;
    out.witness = red.witness(true);
    return out;
  }

  if (out.rank_dA0 == 1) {
    // A = ℓ(x)·S
    RationalMatrix s = red.c;
    Rational alpha = 1, beta = 0;
    bool c_zero = sgn(red.c.at(0, 0)) == 0 && sgn(red.c.at(0, 1)) == 0 &&
                  sgn(red.c.at(1, 1)) == 0;
    if (c_zero) {
      s = red.d;
      alpha = 0;
      beta = 1;
    } else {
      // β from any nonzero entry of S
      for (std::size_t i = 0; i < 2 && sgn(beta) == 0; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          if (sgn(s.at(i, j)) != 0) {
            beta = red.d.at(i, j) / s.at(i, j);
            break;
          }
    }
    if (sgn(s.det()) == 0) {
      // class 2: S = σ v vᵀ; send v to e1, then ℓ to x1
      out.class_id = 2;
      auto [sigma, v] = detail::rank_one_split(s);
      Rational vv = v[0] * v[0] + v[1] * v[1];
      RationalMatrix x(2, 2);
      x.at(0, 0) = v[0] / vv; x.at(1, 0) = v[1] / vv;
      x.at(0, 1) = -v[1];     x.at(1, 1) = v[0];
      red.congr(x);
      // now A = σℓ(x)E11 with ℓ = αx1+βx2: pick Φ with σℓ∘Φ = x1
      // σ(α Φ1 + β Φ2) = x1: with α ≠ 0 take Φ2 = x2, Φ1 = (x1/σ − βx2)/α
      RationalMatrix m(2, 2);
      if (sgn(alpha) != 0) {
        m.at(0, 0) = 1 / (sigma * alpha);
        m.at(0, 1) = -beta / alpha;
        m.at(1, 1) = 1;
      } else {
        m.at(0, 1) = 1;
        m.at(1, 0) = 1 / (sigma * beta);
      }
      red.coord(m);
      out.witness = red.witness(true);
      return out;
    }
    // class 5: S invertible
    out.class_id = 5;
    RationalMatrix x = detail::congruence_diagonalize(s);
    red.congr(x);
    RationalMatrix sd = x.transposed() * s * x;
    Rational d1 = sd.at(0, 0), d2 = sd.at(1, 1);
    // ℓ∘Φ = x1/d1 so the (1,1) entry becomes x1
    RationalMatrix m(2, 2);
    if (sgn(alpha) != 0) {
      m.at(0, 0) = 1 / (alpha * d1);
      m.at(0, 1) = -beta / alpha;
      m.at(1, 1) = 1;
    } else {
      m.at(0, 1) = 1;
      m.at(1, 0) = 1 / (beta * d1);
    }
    red.coord(m);
    // A = diag(x1, e·x1); strip the square class of e
    Rational e = d2 / d1;
    auto [e0, t] = squarefree_split(e);
    if (t != 1) {
      RationalMatrix sc = RationalMatrix::identity(2);
      sc.at(1, 1) = 1 / t;
      red.congr(sc);
    }
    out.sign = sgn(e0);
    out.modulus = e0;
    out.witness = red.witness(e0 == 1 || e0 == -1);
    return out;
  }

  // rank_dA0 == 2
  if (out.det2 == QuadraticClass::RankOneNeg || out.det2 == QuadraticClass::RankOnePos) {
    if (out.det2 == QuadraticClass::RankOnePos)
      throw std::logic_error("full pencil with rank-one positive determinant form");
    out.class_id = 3;
    // kernel direction k of the determinant form; send e2 to k
    Rational a = det_form.coeff(Monomial{2, 0});
    Rational b = det_form.coeff(Monomial{1, 1});
    std::vector<Rational> k =
        sgn(a) != 0 ? std::vector<Rational>{-b / (2 * a), Rational(1)}
                    : std::vector<Rational>{Rational(1), Rational(0)};
    RationalMatrix m = RationalMatrix::identity(2);
    m.at(0, 1) = k[0];
    m.at(1, 1) = k[1];
    if (sgn(m.det()) == 0) {  // k parallel to e1: swap axes instead
      m = RationalMatrix(2, 2);
      m.at(0, 1) = k[0];
      m.at(1, 1) = k[1];
      m.at(0, 0) = 0;
      m.at(1, 0) = 1;
    }
    red.coord(m);
    // now D is rank one (det A(e2) = 0): normalize to E11
    auto [sigma, v] = detail::rank_one_split(red.d);
    Rational vv = v[0] * v[0] + v[1] * v[1];
    RationalMatrix x(2, 2);
    x.at(0, 0) = v[0] / vv; x.at(1, 0) = v[1] / vv;
    x.at(0, 1) = -v[1];     x.at(1, 1) = v[0];
    red.congr(x);
    scale_coord(1, 1 / sigma);  // x2 -> x2/σ makes D = E11
    // C = (c11, c12; c12, 0), c12 ≠ 0
    Rational c12 = red.c.at(0, 1);
    scale_coord(0, 1 / c12);
    // absorb the (1,1) corner: x2 -> x2 − c11'·x1 where c11' is the current
    // x1-coefficient of the corner entry
    RationalMatrix sh = RationalMatrix::identity(2);
    sh.at(1, 0) = -red.c.at(0, 0);
    red.coord(sh);
    out.witness = red.witness(true);
    return out;
  }

  if (out.det2 == QuadraticClass::Zero)
    throw std::logic_error("full pencil with identically zero determinant form");
  if (out.det2 == QuadraticClass::PosDef)
    throw std::logic_error("positive definite determinant form is unreachable");

  // Indefinite -> class 4, NegDef -> class 6; shared reduction.
  out.class_id = out.det2 == QuadraticClass::Indefinite ? 4 : 6;
  // make C invertible
  if (sgn(red.c.det()) == 0) {
    RationalMatrix m = RationalMatrix::identity(2);
    if (sgn(red.d.det()) != 0) {
      m = RationalMatrix(2, 2);
      m.at(0, 1) = 1;
      m.at(1, 0) = 1;
    } else {
      m.at(1, 0) = 1;  // x1 -> x1, new C = C + D
    }
    red.coord(m);
  }
  red.congr(detail::congruence_diagonalize(red.c));
  // kill the (1,1) x2-coefficient: x1 -> x1 − (D11/C11)·x2
  {
    RationalMatrix sh = RationalMatrix::identity(2);
    sh.at(0, 1) = -red.d.at(0, 0) / red.c.at(0, 0);
    red.coord(sh);
  }
  Rational b = red.d.at(0, 1);
  if (sgn(b) == 0) {
    // already diagonal: A = diag(d1·x1, d2·x1 + c·x2) with c ≠ 0
    Rational d1 = red.c.at(0, 0), d2 = red.c.at(1, 1), cc = red.d.at(1, 1);
    scale_coord(0, 1 / d1);
    RationalMatrix m = RationalMatrix::identity(2);
    m.at(0, 1) = 0;
    m.at(1, 0) = -(d2 / d1) / cc;
    m.at(1, 1) = 1 / cc;
    red.coord(m);
    out.witness = red.witness(true);
    return out;
  }
  scale_coord(1, 1 / b);
  scale_coord(0, 1 / red.c.at(0, 0));
  // A = (x1, x2; x2, e·x1 + f·x2): shear X = I + t·E01 with t = −f/2 and
  // x2 -> x2 − t·x1 leaves (x1, x2; x2, (e + f²/4)·x1)
  {
    Rational f = red.d.at(1, 1);
    Rational t = -f / 2;
    RationalMatrix sh = RationalMatrix::identity(2);
    sh.at(0, 1) = t;
    red.congr(sh);
    RationalMatrix m = RationalMatrix::identity(2);
    m.at(1, 0) = -t;
    red.coord(m);
  }
  Rational e = red.c.at(1, 1);
  auto [e0, t] = squarefree_split(e);
  if (t != 1) {
    RationalMatrix sc = RationalMatrix::identity(2);
    sc.at(1, 1) = 1 / t;
    red.congr(sc);
    scale_coord(1, t);
  }
  out.modulus = e0;
  if (out.class_id == 4 && e0 == 1) {
    // (x1, x2; x2, x1) -> diag(x1, x2)
    RationalMatrix x(2, 2);
    x.at(0, 0) = 1; x.at(0, 1) = 1; x.at(1, 0) = 1; x.at(1, 1) = -1;
    red.congr(x);
    RationalMatrix m(2, 2);
    m.at(0, 0) = rat(1, 4); m.at(0, 1) = rat(1, 4);
    m.at(1, 0) = rat(1, 4); m.at(1, 1) = rat(-1, 4);
    red.coord(m);
    out.witness = red.witness(true);
    return out;
  }
  out.witness = red.witness(out.class_id == 6 && e0 == -1);
  return out;
}

/// Exact invariants of an n=3 1-jet given by its symmetric coefficient
/// matrices: the dimension of their span in Sym₃, the rank of the pencil at
/// a generic rational direction, and the class of the degree-2 jet of the
/// determinant (Zero for a genuine cubic).
struct OneJetInvariantsN3 {
  int image_dim = 0;
  int generic_rank = 0;
  QuadraticClass det2 = QuadraticClass::Zero;
};

inline OneJetInvariantsN3 one_jet_invariants_n3(const std::vector<RationalMatrix>& coeffs) {
  OneJetInvariantsN3 out;
  if (coeffs.empty()) return out;
  std::size_t n = coeffs[0].rows();
  RationalMatrix span(coeffs.size(), n * (n + 1) / 2);
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    for (std::size_t i = 0, k = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++k) span.at(m, k) = coeffs[m].at(i, j);
  out.image_dim = static_cast<int>(span.rank());

  // deterministic generic direction: x_k = primes^k keeps ranks maximal
  std::vector<long> dirs = {1, 3, 5, 7};
  int best = 0;
  for (long shift = 0; shift < 3; ++shift) {
    RationalMatrix at(n, n);
    for (std::size_t m = 0; m < coeffs.size(); ++m)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          at.at(i, j) += rat(dirs[(m + shift) % dirs.size()]) * coeffs[m].at(i, j);
    best = std::max(best, static_cast<int>(at.rank()));
  }
  out.generic_rank = best;

  PolyMatrix a(n, n, coeffs.size());
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a.at(i, j) += coeffs[m].at(i, j) * Polynomial::variable(coeffs.size(), m);
  Polynomial det = SymMatrixGerm::det_of(a).truncated(2);
  if (!det.is_zero() && coeffs.size() == 2) out.det2 = classify_quadratic(det);
  return out;
}

}  // namespace germlab
