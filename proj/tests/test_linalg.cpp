#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "germlab/linalg.hpp"

using namespace germlab;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat(coeff(rng));
  return m;
}

}  // namespace

TEST_CASE("kernel vectors are annihilated and complete the rank") {
  std::mt19937 rng(424242);
  for (int iter = 0; iter < 40; ++iter) {
    RationalMatrix m = random_matrix(rng, 4, 6);
    auto ker = m.kernel();
    CHECK(m.rank() + ker.size() == 6);
    for (const auto& v : ker)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        CHECK(sgn(s) == 0);
      }
  }
}

TEST_CASE("determinant is multiplicative and detects singularity") {
  std::mt19937 rng(1);
  for (int iter = 0; iter < 40; ++iter) {
    RationalMatrix a = random_matrix(rng, 3, 3);
    RationalMatrix b = random_matrix(rng, 3, 3);
    CHECK((a * b).det() == a.det() * b.det());
    CHECK((sgn(a.det()) == 0) == (a.rank() < 3));
  }
}

TEST_CASE("inverse round trips") {
  std::mt19937 rng(2);
  int done = 0;
  while (done < 20) {
    RationalMatrix a = random_matrix(rng, 3, 3);
    if (sgn(a.det()) == 0) continue;
    RationalMatrix p = a * a.inverse();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(p.at(i, j) == (i == j ? 1 : 0));
    ++done;
  }
}

TEST_CASE("rref produces identity block on pivot columns") {
  RationalMatrix m(3, 4);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3; m.at(0, 3) = 4;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6; m.at(1, 3) = 8;
  m.at(2, 1) = 1; m.at(2, 2) = 1; m.at(2, 3) = 0;
  auto pivots = m.rref();
  REQUIRE(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(2, 0) == 0);
  CHECK(m.at(2, 3) == 0);
}

TEST_CASE("incremental echelon span agrees with dense rank") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t dim = 12, nvec = 9;
    RationalMatrix m(nvec, dim);
    JetSubspace sub(dim);
    for (std::size_t i = 0; i < nvec; ++i) {
      std::vector<Rational> v(dim, 0);
      for (std::size_t j = 0; j < dim; ++j)
        if (rng() % 3 == 0) v[j] = rat(coeff(rng));
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = v[j];
      sub.insert(to_sparse(v));
    }
    CHECK(sub.dim() == m.rank());
    // membership: each original row must reduce to zero
    for (std::size_t i = 0; i < nvec; ++i) {
      std::vector<Rational> v(dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] = m.at(i, j);
      CHECK(sub.contains(to_sparse(v)));
    }
  }
}

TEST_CASE("echelon membership rejects vectors outside the span") {
  JetSubspace sub(4);
  sub.insert({{0, rat(1)}, {1, rat(2)}});
  sub.insert({{1, rat(1)}, {3, rat(-1)}});
  CHECK(sub.dim() == 2);
  CHECK(sub.contains({{0, rat(2)}, {1, rat(5)}, {3, rat(-1)}}));
  CHECK_FALSE(sub.contains({{2, rat(1)}}));
  CHECK_FALSE(sub.contains({{0, rat(1)}, {1, rat(2)}, {2, rat(1)}}));
  CHECK_FALSE(sub.insert({{0, rat(3)}, {1, rat(6)}}));
  CHECK(sub.insert({{2, rat(7)}}));
  CHECK(sub.dim() == 3);
}

TEST_CASE("quotient dimension counts missing directions") {
  JetSubspace sub(5);
  sub.insert({{1, rat(1)}});
  sub.insert({{3, rat(1)}, {4, rat(2)}});
  CHECK(quotient_dim(5, sub) == 3);
}
