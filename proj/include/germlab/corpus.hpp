#pragma once

#include <string>
#include <vector>

#include "germlab/matrix_germ.hpp"

namespace germlab {

/// One instantiated normal form from the built-in classification tables.
struct CorpusEntry {
  std::string table;  ///< "sym2" (2x2 families) or "sym3" (3x3 families)
  int class_id = 0;
  int l1 = 0, l2 = 0;  ///< exponent parameters; 0 when the class has none
  int s1 = +1, s2 = +1;  ///< sign choices of the ± branches
  long codim = 0;      ///< extended-group codimension from the table
  SymMatrixGerm germ{2, 2};
  std::string name;
};

namespace detail {

inline std::string entry_name(const CorpusEntry& e) {
  std::string s = e.table + " class " + std::to_string(e.class_id);
  bool open = false;
  auto sep = [&]() -> std::string {
    if (!open) { open = true; return " ("; }
    return ", ";
  };
  std::string tail;
  if (e.l1) tail += sep() + "l1=" + std::to_string(e.l1);
  if (e.l2) tail += sep() + "l2=" + std::to_string(e.l2);
  if (e.s1 < 0 || e.s2 < 0) tail += sep() + std::string(e.s1 > 0 ? "+" : "-") +
                                    std::string(e.s2 > 0 ? "+" : "-");
  if (open) tail += ")";
  return s + tail;
}

inline void push2(std::vector<CorpusEntry>& out, int cls, int l1, int l2,
                  int s1, int s2, long codim, const std::string& a11,
                  const std::string& a12, const std::string& a22) {
  CorpusEntry e;
  e.table = "sym2";
  e.class_id = cls;
  e.l1 = l1; e.l2 = l2; e.s1 = s1; e.s2 = s2;
  e.codim = codim;
  e.germ = SymMatrixGerm::from_strings(2, 2, {{a11, a12}, {a22}});
  e.name = entry_name(e);
  out.push_back(std::move(e));
}

inline void push3(std::vector<CorpusEntry>& out, int cls, int l1, int l2,
                  int s1, int s2, long codim,
                  const std::vector<std::vector<std::string>>& upper) {
  CorpusEntry e;
  e.table = "sym3";
  e.class_id = cls;
  e.l1 = l1; e.l2 = l2; e.s1 = s1; e.s2 = s2;
  e.codim = codim;
  e.germ = SymMatrixGerm::from_strings(3, 2, upper);
  e.name = entry_name(e);
  out.push_back(std::move(e));
}

inline std::string sgn_str(int s) { return s > 0 ? "" : "-"; }

}  // namespace detail

/// Every 2x2 normal form of codimension < 9 and corank at most 1,
/// instantiated for exponents up to 4.
inline std::vector<CorpusEntry> corpus_sym2() {
  using detail::push2;
  using detail::sgn_str;
  std::vector<CorpusEntry> out;
  push2(out, 1, 0, 0, 1, 1, 1, "x1", "0", "x2");
  push2(out, 2, 0, 0, 1, 1, 1, "x1", "x2", "-x1");
  for (int l = 2; l <= 4; ++l)
    for (int s : {+1, -1})
      push2(out, 3, l, 0, s, 1, l, "x1", "x2",
            sgn_str(s) + "x1^" + std::to_string(l));
  for (int l = 2; l <= 4; ++l)
    push2(out, 4, l, 0, 1, 1, 2 * l - 1, "x1", "x2^" + std::to_string(l), "x1");
  for (int l1 = 2; l1 <= 4; ++l1)
    for (int l2 = 2; l2 <= l1; ++l2)
      for (int s1 : {+1, -1})
        for (int s2 : {+1, -1}) {
          // flipping x2 negates the odd-exponent entries: with an odd
          // exponent present only the relative/remaining sign matters
          if (l1 % 2 == 1) {
            if (s1 < 0) continue;
          } else if (l2 % 2 == 1 && s2 < 0) {
            continue;
          }
          if (l1 == l2 && s1 < s2) continue;  // symmetric pair
          push2(out, 5, l1, l2, s1, s2, l1 + l2 - 1,
                sgn_str(s1) + "x2^" + std::to_string(l1), "x1",
                sgn_str(s2) + "x2^" + std::to_string(l2));
        }
  for (int s : {+1, -1})
    push2(out, 6, 0, 0, s, 1, 6, "x1", "x2^2", sgn_str(s) + "x1^2");
  for (int l = 2; l <= 4; ++l)
    for (int s1 : {+1, -1})
      for (int s2 : {+1, -1}) {
        push2(out, 7, l, 0, s1, s2, l + 2, "x1", "0",
              sgn_str(s1) + "x2^2 " + (s2 > 0 ? "+" : "-") + " x1^" +
                  std::to_string(l));
      }
  for (int l = 3; l <= 4; ++l)
    for (int s : {+1, -1})
      push2(out, 8, l, 0, s, 1, 2 * l, "x1", "0",
            "x1*x2 " + std::string(s > 0 ? "+" : "-") + " x2^" +
                std::to_string(l));
  for (int l = 2; l <= 3; ++l)
    push2(out, 9, l, 0, 1, 1, 2 * l + 1, "x1", "x2^" + std::to_string(l),
          "x1*x2");
  for (int s : {+1, -1})
    push2(out, 10, 0, 0, s, 1, 7, "x1", "0", sgn_str(s) + "x1^2 + x2^3");
  return out;
}

/// Every 3x3 normal form of codimension < 9, instantiated for exponents
/// up to 3.
inline std::vector<CorpusEntry> corpus_sym3() {
  using detail::push3;
  using detail::sgn_str;
  std::vector<CorpusEntry> out;
  push3(out, 1, 0, 0, 1, 1, 4, {{"x1", "0", "0"}, {"x2", "0"}, {"x1-x2"}});
  // the + branch of diag(x1, x2, ±(x1+x2)) is linearly equivalent to the
  // entry above (substitute x1 -> x1+x2 and permute rows 1 and 3), so only
  // the - branch is a distinct class
  push3(out, 2, 0, 0, -1, 1, 4,
        {{"x1", "0", "0"}, {"x2", "0"}, {"-(x1+x2)"}});
  for (int s : {+1, -1})
    push3(out, 3, 0, 0, s, 1, 4,
          {{sgn_str(s) + "x1", "0", "0"}, {"x1", "x2"}, {"-x1"}});
  for (int l1 = 2; l1 <= 3; ++l1)
    for (int l2 = 1; l2 <= l1; ++l2)
      for (int s1 : {+1, -1})
        for (int s2 : {+1, -1}) {
          // the third diagonal entry pins the sign of x2, so no odd-exponent
          // sign coincidence here; only the l1 = l2 swap is redundant
          if (l1 == l2 && s1 < s2) continue;
          push3(out, 4, l1, l2, s1, s2, l1 + l2 + 2,
                {{sgn_str(s1) + "x2^" + std::to_string(l1), "x1", "0"},
                 {sgn_str(s2) + "x2^" + std::to_string(l2), "0"},
                 {"x2"}});
        }
  for (int l = 2; l <= 3; ++l)
    push3(out, 5, l, 0, 1, 1, 2 * l + 2,
          {{"x1", "x2^" + std::to_string(l), "0"}, {"x1", "0"}, {"x2"}});
  for (int s : {+1, -1})
    push3(out, 6, 0, 0, s, 1, 6,
          {{"0", "x2", "x1"}, {"x1", "0"}, {sgn_str(s) + "x2^2"}});
  push3(out, 7, 0, 0, 1, 1, 7, {{"0", "x2", "x1"}, {"x1", "0"}, {"x1*x2"}});
  for (int s : {+1, -1})
    push3(out, 8, 0, 0, s, 1, 7,
          {{"x2", "x1", "0"}, {sgn_str(s) + "x2^2", "0"}, {"x1"}});
  push3(out, 9, 0, 0, 1, 1, 8, {{"0", "x2", "x1"}, {"x1", "0"}, {"x2^3"}});
  push3(out, 10, 0, 0, 1, 1, 8, {{"x2", "x1", "0"}, {"0", "x2^2"}, {"x1"}});
  return out;
}

inline std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out = corpus_sym2();
  std::vector<CorpusEntry> three = corpus_sym3();
  out.insert(out.end(), three.begin(), three.end());
  return out;
}

/// The two-branch quadratic-tail family diag(x1, x1x2 ∓ x2²) whose
/// positive-definite locus has one connected region (first) and two (second).
inline SymMatrixGerm single_region_family() {
  return SymMatrixGerm::from_strings(2, 2, {{"x1", "0"}, {"x1*x2 - x2^2"}});
}
inline SymMatrixGerm two_region_family() {
  return SymMatrixGerm::from_strings(2, 2, {{"x1", "0"}, {"x1*x2 + x2^2"}});
}

/// The four-parameter bordered two-jet family
/// (x1, c1 x2²; c1 x2², c2 x2² + c3 x1 x2 + c4 x1²), affine in c.
inline SymMatrixGerm bordered_two_jet_family(const std::vector<Rational>& c) {
  if (c.size() != 4) throw std::invalid_argument("family takes 4 parameters");
  Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
  SymMatrixGerm a(2, 2);
  a.set_entry(0, 0, x1);
  a.set_entry(0, 1, c[0] * x2 * x2);
  a.set_entry(1, 1, c[1] * x2 * x2 + c[2] * x1 * x2 + c[3] * x1 * x1);
  return a;
}

}  // namespace germlab
