#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "germlab/pencil.hpp"

using namespace germlab;

namespace {

RationalMatrix sym2(long a, long b, long c) {
  RationalMatrix m(2, 2);
  m.at(0, 0) = rat(a);
  m.at(0, 1) = m.at(1, 0) = rat(b);
  m.at(1, 1) = rat(c);
  return m;
}

RationalMatrix random_invertible(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (;;) {
    RationalMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = rat(coeff(rng));
    if (sgn(m.det()) != 0) return m;
  }
}

/// Transform the pencil by a random congruence and linear coordinate change.
std::pair<RationalMatrix, RationalMatrix> moved_pencil(const RationalMatrix& c,
                                                       const RationalMatrix& d,
                                                       std::mt19937& rng) {
  RationalMatrix x = random_invertible(rng);
  RationalMatrix l = random_invertible(rng);
  RationalMatrix ct = x.transposed() * c * x;
  RationalMatrix dt = x.transposed() * d * x;
  RationalMatrix nc(2, 2), nd(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      nc.at(i, j) = l.at(0, 0) * ct.at(i, j) + l.at(1, 0) * dt.at(i, j);
      nd.at(i, j) = l.at(0, 1) * ct.at(i, j) + l.at(1, 1) * dt.at(i, j);
    }
  return {nc, nd};
}

SymMatrixGerm pencil_germ(const RationalMatrix& c, const RationalMatrix& d) {
  Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
  SymMatrixGerm a(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = i; j < 2; ++j)
      a.set_entry(i, j, c.at(i, j) * x1 + d.at(i, j) * x2);
  return a;
}

void check_witness(const RationalMatrix& c, const RationalMatrix& d,
                   const OneJetClass& cls) {
  WitnessCheck chk =
      verify_congruence_witness(pencil_germ(c, d), cls.representative(), cls.witness, 4);
  CHECK(chk.holds);
}

}  // namespace

TEST_CASE("quadratic form classes by rank and signature") {
  CHECK(classify_quadratic(parse_polynomial("-x1^2 - x2^2", 2)) == QuadraticClass::NegDef);
  CHECK(classify_quadratic(parse_polynomial("x1*x2", 2)) == QuadraticClass::Indefinite);
  CHECK(classify_quadratic(Polynomial(2)) == QuadraticClass::Zero);
  CHECK(classify_quadratic(parse_polynomial("x1^2 + 4*x1*x2 + 4*x2^2", 2)) ==
        QuadraticClass::RankOnePos);
  CHECK(classify_quadratic(parse_polynomial("-9*x2^2", 2)) == QuadraticClass::RankOneNeg);
  CHECK(classify_quadratic(parse_polynomial("2*x1^2 + x2^2", 2)) == QuadraticClass::PosDef);
  // invariant under multiplication by positive constants
  CHECK(classify_quadratic(parse_polynomial("7/3*x1*x2", 2)) == QuadraticClass::Indefinite);
  CHECK_THROWS(classify_quadratic(parse_polynomial("x1", 2)));
  CHECK_THROWS(classify_quadratic(parse_polynomial("x1^2 + x1", 2)));
}

TEST_CASE("squarefree split preserves value and strips squares") {
  auto [e0, t] = squarefree_split(rat(12));
  CHECK(e0 == 3);
  CHECK(t == 2);
  auto [f0, u] = squarefree_split(rat(-9, 2));
  CHECK(f0 * u * u == rat(-9, 2));
  CHECK(f0 == -2);
  CHECK(squarefree_split(rat(1)).first == 1);
}

TEST_CASE("one-jet representatives classify to their own class") {
  CHECK(classify_one_jet(sym2(0, 0, 0), sym2(0, 0, 0)).class_id == 1);
  CHECK(classify_one_jet(sym2(1, 0, 0), sym2(0, 0, 0)).class_id == 2);
  {
    // (x2, x1; x1, 0)
    OneJetClass c = classify_one_jet(sym2(0, 1, 0), sym2(1, 0, 0));
    CHECK(c.class_id == 3);
    CHECK(c.det2 == QuadraticClass::RankOneNeg);
  }
  CHECK(classify_one_jet(sym2(1, 0, 0), sym2(0, 0, 1)).class_id == 4);
  {
    OneJetClass c = classify_one_jet(sym2(1, 0, 1), sym2(0, 0, 0));
    CHECK(c.class_id == 5);
    CHECK(c.sign == 1);
    CHECK(c.rank_dA0 == 1);
  }
  {
    OneJetClass c = classify_one_jet(sym2(1, 0, -1), sym2(0, 0, 0));
    CHECK(c.class_id == 5);
    CHECK(c.sign == -1);
  }
  {
    // (x1, x2; x2, -x1)
    OneJetClass c = classify_one_jet(sym2(1, 0, -1), sym2(0, 1, 0));
    CHECK(c.class_id == 6);
    CHECK(c.det2 == QuadraticClass::NegDef);
    CHECK(c.witness.canonical);
  }
}

TEST_CASE("classification is invariant under congruence and coordinate change") {
  std::mt19937 rng(271828);
  std::vector<std::pair<RationalMatrix, RationalMatrix>> reps = {
      {sym2(0, 0, 0), sym2(0, 0, 0)}, {sym2(1, 0, 0), sym2(0, 0, 0)},
      {sym2(0, 1, 0), sym2(1, 0, 0)}, {sym2(1, 0, 0), sym2(0, 0, 1)},
      {sym2(1, 0, 1), sym2(0, 0, 0)}, {sym2(1, 0, -1), sym2(0, 0, 0)},
      {sym2(1, 0, -1), sym2(0, 1, 0)}};
  for (const auto& [c, d] : reps) {
    OneJetClass base = classify_one_jet(c, d);
    check_witness(c, d, base);
    for (int iter = 0; iter < 25; ++iter) {
      auto [ct, dt] = moved_pencil(c, d, rng);
      OneJetClass moved = classify_one_jet(ct, dt);
      CHECK(moved.class_id == base.class_id);
      CHECK(moved.sign == base.sign);
      CHECK(moved.rank_dA0 == base.rank_dA0);
      CHECK(moved.det2 == base.det2);
      check_witness(ct, dt, moved);
    }
  }
}

TEST_CASE("square-class obstructions are reported, not hidden") {
  {
    // ray through diag(1,3): same class as diag(x1, x1) over the reals only
    OneJetClass c = classify_one_jet(sym2(1, 0, 3), sym2(0, 0, 0));
    CHECK(c.class_id == 5);
    CHECK(c.sign == 1);
    CHECK_FALSE(c.witness.canonical);
    CHECK(c.modulus == 3);
    check_witness(sym2(1, 0, 3), sym2(0, 0, 0), c);
  }
  {
    // det form 2x1² − x2²: indefinite with irrational eigendirections
    OneJetClass c = classify_one_jet(sym2(1, 0, 2), sym2(0, 1, 0));
    CHECK(c.class_id == 4);
    CHECK_FALSE(c.witness.canonical);
    check_witness(sym2(1, 0, 2), sym2(0, 1, 0), c);
  }
  {
    // det form −3x1² − x2²: negative definite, not a sum of two squares scale
    OneJetClass c = classify_one_jet(sym2(1, 0, -3), sym2(0, 1, 0));
    CHECK(c.class_id == 6);
    CHECK_FALSE(c.witness.canonical);
    CHECK(c.modulus == -3);
    check_witness(sym2(1, 0, -3), sym2(0, 1, 0), c);
  }
  {
    // det form 4x1² − x2² has rational roots: fully canonical class 4
    OneJetClass c = classify_one_jet(sym2(1, 0, 4), sym2(0, 1, 0));
    CHECK(c.class_id == 4);
    CHECK(c.witness.canonical);
    check_witness(sym2(1, 0, 4), sym2(0, 1, 0), c);
  }
}

TEST_CASE("three by three one-jet invariants") {
  auto sym3 = [](std::initializer_list<long> v) {
    RationalMatrix m(3, 3);
    auto it = v.begin();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        m.at(i, j) = m.at(j, i) = rat(*it++);
      }
    return m;
  };
  {
    // diag(x1, x2, x1−x2)
    auto inv = one_jet_invariants_n3(
        {sym3({1, 0, 0, 0, 0, 1}), sym3({0, 0, 0, 1, 0, -1})});
    CHECK(inv.image_dim == 2);
    CHECK(inv.generic_rank == 3);
  }
  {
    auto inv = one_jet_invariants_n3({RationalMatrix(3, 3), RationalMatrix(3, 3)});
    CHECK(inv.image_dim == 0);
    CHECK(inv.generic_rank == 0);
  }
  {
    // ((0, x2, x1); (x2, x1, 0); (x1, 0, 0))
    auto inv = one_jet_invariants_n3(
        {sym3({0, 0, 1, 1, 0, 0}), sym3({0, 1, 0, 0, 0, 0})});
    CHECK(inv.image_dim == 2);
    CHECK(inv.generic_rank == 3);
  }
}
