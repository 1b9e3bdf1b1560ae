#pragma once

#include <stdexcept>
#include <vector>

#include "germlab/linalg.hpp"
#include "germlab/matrix_germ.hpp"

namespace germlab {

/// An explicit equivalence B = Xᵀ (A∘Φ) X: a coordinate change Φ (one
/// polynomial per source variable, vanishing at 0, invertible linear part)
/// and a polynomial matrix family X, invertible at 0.
struct CongruenceWitness {
  std::vector<Polynomial> phi;
  PolyMatrix x;
  /// False when the witness targets a square-class-scaled representative
  /// rather than the verbatim table entry (exact rational reduction to the
  /// verbatim entry would need an irrational square root).
  bool canonical = true;
};

struct WitnessCheck {
  bool holds = false;
  int orientation_sign = 0;  ///< sign of det dΦ(0)
};

inline RationalMatrix linear_part_matrix(const std::vector<Polynomial>& phi) {
  std::size_t r = phi.size();
  RationalMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      Monomial mo(r);
      mo.exp[k] = 1;
      m.at(i, k) = phi[i].coeff(mo);
    }
  return m;
}

inline RationalMatrix value_at_zero(const PolyMatrix& x) {
  RationalMatrix m(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m.at(i, j) = x.at(i, j).constant_term();
  return m;
}

/// Verify B = Xᵀ(A∘Φ)X up to total degree d (exactly when d < 0 and both
/// sides are polynomial of bounded degree: callers pass a degree covering
/// every term of interest).
inline WitnessCheck verify_congruence_witness(const SymMatrixGerm& a,
                                              const SymMatrixGerm& b,
                                              const CongruenceWitness& w, int d) {
  for (const Polynomial& p : w.phi)
    if (sgn(p.constant_term()) != 0)
      throw std::invalid_argument("coordinate change must fix the origin");
  Rational jac = linear_part_matrix(w.phi).det();
  if (sgn(jac) == 0) throw std::invalid_argument("coordinate change is singular at 0");
  if (sgn(value_at_zero(w.x).det()) == 0)
    throw std::invalid_argument("matrix family is singular at 0");

  PolyMatrix moved = a.as_matrix().substituted(w.phi, d);
  PolyMatrix rhs = (w.x.transposed() * moved * w.x).truncated(d);
  PolyMatrix diff = b.as_matrix().truncated(d) - rhs;
  WitnessCheck out;
  out.holds = diff.is_zero();
  out.orientation_sign = sgn(jac);
  return out;
}

}  // namespace germlab
