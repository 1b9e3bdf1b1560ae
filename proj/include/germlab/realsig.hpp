#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/matrix_germ.hpp"
#include "germlab/linalg.hpp"

namespace germlab {

/// Eigenvalue sign counts (n₁ positive, n₂ zero, n₃ negative) of a real
/// symmetric matrix; n₁ + n₂ + n₃ = n.
struct SignatureTriple {
  int pos = 0;
  int zero = 0;
  int neg = 0;
  bool operator==(const SignatureTriple&) const = default;
  bool operator<(const SignatureTriple& o) const {
    return std::tie(pos, zero, neg) < std::tie(o.pos, o.zero, o.neg);
  }
};

/// Exact signature of a symmetric rational matrix via Descartes' rule on the
/// characteristic polynomial: all roots are real, so the number of positive
/// roots equals the number of sign changes in the coefficient sequence, and
/// the multiplicity of 0 is the trailing-zero count.
inline SignatureTriple signature_of(const RationalMatrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("signature of non-square");
  // characteristic polynomial det(t·I − M) in one variable
  PolyMatrix cm(n, n, 1);
  Polynomial t = Polynomial::variable(1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cm.at(i, j) = Polynomial::constant(1, -m.at(i, j));
      if (i == j) cm.at(i, j) += t;
    }
  Polynomial chi = SymMatrixGerm::det_of(cm);
  std::vector<Rational> c(n + 1, 0);
  for (const auto& [mo, coef] : chi.terms()) c[mo.exp[0]] = coef;

  SignatureTriple s;
  while (s.zero < static_cast<int>(n) && sgn(c[s.zero]) == 0) ++s.zero;
  int prev = 0;
  for (std::size_t k = s.zero; k <= n; ++k) {
    int sg = sgn(c[k]);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++s.pos;
    prev = sg;
  }
  s.neg = static_cast<int>(n) - s.zero - s.pos;
  return s;
}

/// Signature of the family evaluated at an exact rational point.
inline SignatureTriple signature_at(const SymMatrixGerm& a,
                                    const std::vector<Rational>& x) {
  std::size_t n = a.size();
  RationalMatrix m(n, n);
  auto vals = a.evaluate(x);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vals[i][j];
  return signature_of(m);
}

/// Square sampling grid on the plane: points (i·h, j·h) with |i|,|j| ≤ ρ/h,
/// restricted to the disk of radius ρ and punctured by the closed ε-disk
/// (ε = 0 still removes the exact origin).
struct GridSpec {
  Rational radius = 1;
  Rational step = rat(1, 100);
  Rational puncture = 0;
};

/// Exact signature sampled over a grid; cells in row-major order with x2
/// decreasing (top row first) and x1 increasing, the plotting convention.
struct SignatureField {
  GridSpec grid;
  long half = 0;  ///< grid index range is [-half, half] in both axes
  std::vector<SignatureTriple> cells;  ///< (2·half+1)² entries
  std::vector<bool> included;          ///< inside the punctured disk

  std::size_t index(long i, long j) const {
    // i: x1 index, j: x2 index
    return static_cast<std::size_t>((half - j) * (2 * half + 1) + (i + half));
  }
};

inline SignatureField signature_field(const SymMatrixGerm& a, const GridSpec& g) {
  if (a.nvars() != 2) throw std::invalid_argument("grid sampling needs two variables");
  if (sgn(g.step) <= 0 || sgn(g.radius) <= 0)
    throw std::invalid_argument("grid radius and step must be positive");
  SignatureField f;
  f.grid = g;
  Rational ratio = g.radius / g.step;
  Integer half_i = ratio.get_num() / ratio.get_den();  // floor, both positive
  f.half = half_i.get_si();
  long w = 2 * f.half + 1;
  f.cells.resize(static_cast<std::size_t>(w * w));
  f.included.resize(static_cast<std::size_t>(w * w), false);
  Rational r2 = g.radius * g.radius, e2 = g.puncture * g.puncture;
  for (long j = f.half; j >= -f.half; --j)
    for (long i = -f.half; i <= f.half; ++i) {
      Rational x = g.step * i, y = g.step * j;
      Rational d2 = x * x + y * y;
      std::size_t idx = f.index(i, j);
      if (d2 > r2 || d2 <= e2) continue;
      f.included[idx] = true;
      f.cells[idx] = signature_at(a, {x, y});
    }
  return f;
}

/// Number of 4-connected components of the cells carrying the target
/// signature inside the punctured disk. Returns 0 when no cell matches.
inline long component_count(const SignatureField& f, const SignatureTriple& target) {
  long w = 2 * f.half + 1;
  std::vector<long> parent(static_cast<std::size_t>(w * w), -1);
  auto find = [&](long v) {
    while (parent[v] != v) { parent[v] = parent[parent[v]]; v = parent[v]; }
    return v;
  };
  auto match = [&](std::size_t idx) { return f.included[idx] && f.cells[idx] == target; };
  long count = 0;
  for (long j = f.half; j >= -f.half; --j)
    for (long i = -f.half; i <= f.half; ++i) {
      std::size_t idx = f.index(i, j);
      if (!match(idx)) continue;
      parent[idx] = static_cast<long>(idx);
      ++count;
      // union with the already-initialized neighbors (left and above)
      if (i > -f.half && match(f.index(i - 1, j))) {
        long a = find(static_cast<long>(idx)), b = find(static_cast<long>(f.index(i - 1, j)));
        if (a != b) { parent[a] = b; --count; }
      }
      if (j < f.half && match(f.index(i, j + 1))) {
        long a = find(static_cast<long>(idx)), b = find(static_cast<long>(f.index(i, j + 1)));
        if (a != b) { parent[a] = b; --count; }
      }
    }
  return count;
}

inline long component_count(const SymMatrixGerm& a, const SignatureTriple& target,
                            const GridSpec& g) {
  return component_count(signature_field(a, g), target);
}

/// CSV dump: one "x1,x2,n1,n2,n3" row per included grid cell, exact rationals.
inline std::string signature_csv(const SignatureField& f) {
  std::ostringstream out;
  out << "x1,x2,n1,n2,n3\n";
  for (long j = f.half; j >= -f.half; --j)
    for (long i = -f.half; i <= f.half; ++i) {
      std::size_t idx = f.index(i, j);
      if (!f.included[idx]) continue;
      Rational x = f.grid.step * i, y = f.grid.step * j;
      const SignatureTriple& s = f.cells[idx];
      out << x << "," << y << "," << s.pos << "," << s.zero << "," << s.neg << "\n";
    }
  return out.str();
}

/// Deterministic SVG: one square per included cell, colored by signature
/// (red channel ∝ positive count, blue ∝ negative, green ∝ zero); the
/// horizontal axis is x1, x2 increases upward.
inline std::string signature_svg(const SignatureField& f, int cell_px = 4) {
  long w = 2 * f.half + 1;
  long side = w * cell_px;
  int n = 0;
  for (std::size_t idx = 0; idx < f.cells.size(); ++idx)
    if (f.included[idx]) { n = f.cells[idx].pos + f.cells[idx].zero + f.cells[idx].neg; break; }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
      << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " " << side
      << "\">\n";
  out << "<rect width=\"" << side << "\" height=\"" << side
      << "\" fill=\"white\"/>\n";
  for (long j = f.half; j >= -f.half; --j)
    for (long i = -f.half; i <= f.half; ++i) {
      std::size_t idx = f.index(i, j);
      if (!f.included[idx]) continue;
      const SignatureTriple& s = f.cells[idx];
      int scale = n > 0 ? 255 / n : 0;
      int r = s.pos * scale, g = s.zero * scale, b = s.neg * scale;
      long px = (i + f.half) * cell_px, py = (f.half - j) * cell_px;
      out << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell_px
          << "\" height=\"" << cell_px << "\" fill=\"rgb(" << r << "," << g
          << "," << b << ")\"/>\n";
    }
  // axes through the origin; horizontal = x1
  long mid = f.half * cell_px + cell_px / 2;
  out << "<line x1=\"0\" y1=\"" << mid << "\" x2=\"" << side << "\" y2=\""
      << mid << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << mid << "\" y1=\"0\" x2=\"" << mid << "\" y2=\""
      << side << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "</svg>\n";
  return out.str();
}

namespace detail {

/// Dense univariate rational polynomial, low degree first.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Rational uni_eval(const UniPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(Rational(static_cast<long>(i)) * p[i]);
  uni_trim(d);
  return d;
}

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  uni_trim(a);
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    uni_trim(a);
  }
  return a;
}

inline UniPoly uni_div(UniPoly a, const UniPoly& b) {
  uni_trim(a);
  UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    uni_trim(a);
  }
  uni_trim(q);
  return q;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> ch{p};
  UniPoly d = uni_derivative(p);
  if (!d.empty()) ch.push_back(std::move(d));
  while (ch.back().size() > 1) {
    UniPoly r = uni_rem(ch[ch.size() - 2], ch.back());
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    ch.push_back(std::move(r));
  }
  return ch;
}

inline int sign_variations_at(const std::vector<UniPoly>& ch, const Rational& x) {
  int var = 0, prev = 0;
  for (const UniPoly& q : ch) {
    int s = sgn(uni_eval(q, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

/// Strictly interleaving sample points of the real roots of p: for roots
/// r_1 < ... < r_k returns s_0 < r_1 < s_1 < ... < r_k < s_k with
/// p(s_i) != 0. A root-free polynomial yields a single sample.
inline std::vector<Rational> uni_root_gaps(UniPoly p) {
  uni_trim(p);
  if (p.empty()) throw std::invalid_argument("root isolation needs a nonzero polynomial");
  UniPoly g = uni_gcd(p, uni_derivative(p));
  if (g.size() > 1) p = uni_div(p, g);  // square-free part, same roots

  Rational bound = 1;
  for (const Rational& c : p) {
    Rational a = abs(c / p.back());
    if (a > bound) bound = a;
  }
  bound += 1;  // Cauchy bound: all real roots lie in (-bound, bound)

  std::vector<UniPoly> ch = sturm_chain(p);
  // disjoint intervals (lo, hi], one root each, in increasing order
  std::vector<std::pair<Rational, Rational>> iv;
  std::function<void(const Rational&, const Rational&, int, int)> split =
      [&](const Rational& lo, const Rational& hi, int vlo, int vhi) {
        int count = vlo - vhi;
        if (count == 0) return;
        if (count == 1) {
          iv.emplace_back(lo, hi);
          return;
        }
        Rational mid = (lo + hi) / 2;
        int vm = sign_variations_at(ch, mid);
        split(lo, mid, vlo, vm);
        split(mid, hi, vm, vhi);
      };
  split(-bound, bound, sign_variations_at(ch, -bound),
        sign_variations_at(ch, bound));

  std::vector<Rational> samples{-bound};
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
    // shrink the next interval until it clears this one, then sample between
    std::pair<Rational, Rational>& nxt = iv[i + 1];
    while (!(nxt.first > iv[i].second)) {
      Rational mid = (nxt.first + nxt.second) / 2;
      if (sign_variations_at(ch, nxt.first) - sign_variations_at(ch, mid) == 1)
        nxt.second = mid;
      else
        nxt.first = mid;
    }
    samples.push_back((iv[i].second + nxt.first) / 2);
  }
  if (!iv.empty()) samples.push_back(bound);
  return samples;
}

}  // namespace detail

/// Multiset (sorted) of constant-signature arcs of the matrix pencil
/// {a C + b D} over the circle of directions (a, b). Arcs are the maximal
/// direction intervals on which the pencil is nondegenerate; the multiset is
/// invariant under congruence of the pencil and linear changes of (a, b).
/// Returns an empty list when the determinant vanishes identically.
inline std::vector<SignatureTriple> pencil_signature_arcs(
    const RationalMatrix& c, const RationalMatrix& d) {
  std::size_t n = c.rows();
  if (n != c.cols() || n != d.rows() || n != d.cols())
    throw std::invalid_argument("pencil needs two square matrices of equal size");
  PolyMatrix pm(n, n, 1);
  Polynomial t = Polynomial::variable(1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pm.at(i, j) = Polynomial::constant(1, c.at(i, j)) + d.at(i, j) * t;
  Polynomial p = SymMatrixGerm::det_of(pm);  // det(C + t D)

  detail::UniPoly coeffs(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Monomial m(1);
    m.exp[0] = static_cast<int>(k);
    coeffs[k] = p.coeff(m);
  }
  detail::uni_trim(coeffs);
  if (coeffs.empty()) return {};  // everywhere-degenerate pencil

  std::vector<Rational> samples = detail::uni_root_gaps(coeffs);
  std::vector<SignatureTriple> half;
  for (const Rational& s : samples) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = c.at(i, j) + s * d.at(i, j);
    half.push_back(signature_of(m));
  }
  auto flip = [](SignatureTriple s) {
    std::swap(s.pos, s.neg);
    return s;
  };

  std::size_t k = half.size() - 1;  // number of degenerate directions (1, t)
  std::vector<SignatureTriple> arcs;
  if (sgn(d.det()) != 0) {
    // direction (0, 1) is nondegenerate: the outermost t-intervals continue
    // through it onto the antipodal copy, merging into single arcs
    if (k == 0) return {half[0]};
    arcs.push_back(half[0]);
    arcs.push_back(half[k]);
    for (std::size_t i = 1; i < k; ++i) {
      arcs.push_back(half[i]);
      arcs.push_back(flip(half[i]));
    }
  } else {
    for (const SignatureTriple& s : half) {
      arcs.push_back(s);
      arcs.push_back(flip(s));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace germlab
