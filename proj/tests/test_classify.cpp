#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "germlab/classify.hpp"

using namespace germlab;

namespace {

SymMatrixGerm germ2(const std::string& a11, const std::string& a12,
                    const std::string& a22) {
  return SymMatrixGerm::from_strings(2, 2, {{a11, a12}, {a22}});
}

using Params = std::vector<Rational>;

StratumCheckReport check_stratum(const std::function<bool(const Params&)>& cond,
                                 const std::vector<Params>& samples,
                                 const std::vector<Params>& dirs) {
  auto fam = [](const Params& c) { return bordered_two_jet_family(c); };
  return mather_stratum_check(fam, cond, samples, dirs, 2);
}

Rational disc(const Params& c) { return 4 * c[1] * c[3] - c[2] * c[2]; }

}  // namespace

TEST_CASE("orbit dimension strata of the bordered two-jet family") {
  // generic stratum: c2(4 c2 c4 - c3^2) != 0, dimension 11
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) { return sgn(c[1] * disc(c)) != 0; },
        {{1, 1, 1, 1}, {0, 1, 0, -1}, {0, -1, 0, 1}},
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(r.dim == 11);
    CHECK(r.holds());
  }
  // vanishing discriminant with c2 != 0, dimension 10
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) { return sgn(disc(c)) == 0 && sgn(c[1]) != 0; },
        {{1, 1, 2, 1}, {1, 2, 4, 2}, {0, 1, 0, 0}}, {{1, 0, 0, 0}});
    CHECK(r.dim == 10);
    CHECK(r.holds());
  }
  // c2 = 0 with c1 c3 != 0, dimension 10
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) { return sgn(c[1]) == 0 && sgn(c[0] * c[2]) != 0; },
        {{1, 0, 1, 0}, {2, 0, 3, 5}, {1, 0, -1, 2}},
        {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(r.dim == 10);
    CHECK(r.holds());
  }
  // c1 = c2 = 0 with c3 != 0, dimension 9
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) {
          return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) != 0;
        },
        {{0, 0, 1, 0}, {0, 0, 2, 5}, {0, 0, -1, 1}},
        {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(r.dim == 9);
    CHECK(r.holds());
  }
  // c2 = c3 = 0 with c1 c4 != 0, dimension 9
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) {
          return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[0] * c[3]) != 0;
        },
        {{1, 0, 0, 1}, {3, 0, 0, -2}, {1, 0, 0, -1}},
        {{1, 0, 0, 0}, {0, 0, 0, 1}});
    CHECK(r.dim == 9);
    CHECK(r.holds());
  }
  // c1 = c2 = c3 = 0 with c4 != 0, dimension 8
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) {
          return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 &&
                 sgn(c[3]) != 0;
        },
        {{0, 0, 0, 1}, {0, 0, 0, -2}, {0, 0, 0, 3}}, {{0, 0, 0, 1}});
    CHECK(r.dim == 8);
    CHECK(r.holds());
  }
  // c2 = c3 = c4 = 0 with c1 != 0, dimension 8
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) {
          return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0 &&
                 sgn(c[0]) != 0;
        },
        {{1, 0, 0, 0}, {-3, 0, 0, 0}, {rat(1, 2), 0, 0, 0}}, {{1, 0, 0, 0}});
    CHECK(r.dim == 8);
    CHECK(r.holds());
  }
  // the single point c = 0, dimension 7, vacuously constant
  {
    StratumCheckReport r = check_stratum(
        [](const Params& c) {
          return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 &&
                 sgn(c[3]) == 0;
        },
        {{0, 0, 0, 0}}, {});
    CHECK(r.dim == 7);
    CHECK(r.holds());
  }
  // a sample violating the declared condition throws
  CHECK_THROWS_AS(
      check_stratum([](const Params& c) { return sgn(c[1]) != 0; },
                    {{0, 0, 0, 0}}, {}),
      std::invalid_argument);
}

TEST_CASE("invariant tuples separate the built-in normal forms") {
  std::vector<CorpusEntry> corpus = builtin_corpus();
  std::vector<ClassInvariants> invs;
  for (const CorpusEntry& e : corpus) {
    ClassInvariants inv = ::germlab::detail::partial_invariants(e.germ, 12);
    inv.codim = e.codim;
    inv.codim_stabilized = true;
    CHECK(inv.beta0 >= 0);  // minors generate a finite-colength ideal
    invs.push_back(std::move(inv));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (corpus[i].table != corpus[j].table) continue;
      if (!invs[i].matches(invs[j])) continue;
      INFO(corpus[i].name << " vs " << corpus[j].name);
      // colliding tuples may only occur between sign branches of one class
      CHECK(corpus[i].class_id == corpus[j].class_id);
      CHECK(corpus[i].l1 == corpus[j].l1);
      CHECK(corpus[i].l2 == corpus[j].l2);
    }
}

TEST_CASE("classification of germs equivalent to table entries") {
  // a swapped variant of the cusp family matches class 3 with exponent 3
  ClassifyReport r1 = classify_germ(germ2("x2", "x1", "x2^3"));
  REQUIRE(r1.resolved);
  CHECK(r1.match.table == "sym2");
  CHECK(r1.match.class_id == 3);
  CHECK(r1.match.l1 == 3);

  // the corrected product-tail normal form is recognized directly
  ClassifyReport r2 = classify_germ(germ2("x1", "0", "x1*x2+x2^3"));
  REQUIRE(r2.resolved);
  CHECK(r2.match.class_id == 8);
  CHECK(r2.match.l1 == 3);
  CHECK(r2.match.s1 == 1);

  // a table representative is a fixed point of the matcher
  ClassifyReport r3 = classify_germ(germ2("x1", "x2^2", "x1*x2"));
  REQUIRE(r3.resolved);
  CHECK(r3.match.class_id == 9);
  CHECK(r3.match.l1 == 2);

  // matching is stable under an exact group move: constant congruence
  // together with a linear volume-preserving change of the plane
  SymMatrixGerm a = germ2("x1", "x2^2", "x1*x2");
  std::vector<Polynomial> rot = {parse_polynomial("3/5*x1 - 4/5*x2", 2),
                                 parse_polynomial("4/5*x1 + 3/5*x2", 2)};
  PolyMatrix x(2, 2, 2);
  x.at(0, 0) = parse_polynomial("1", 2);
  x.at(0, 1) = parse_polynomial("-2", 2);
  x.at(1, 0) = parse_polynomial("1", 2);
  x.at(1, 1) = parse_polynomial("3", 2);
  SymMatrixGerm moved = SymMatrixGerm::from_matrix(
      x.transposed() * a.as_matrix().substituted(rot) * x);
  ClassifyReport r4 = classify_germ(moved);
  REQUIRE(r4.resolved);
  CHECK(r4.match.name == r3.match.name);

  // a three by three representative round-trips as well
  SymMatrixGerm t = SymMatrixGerm::from_strings(
      3, 2, {{"0", "x2", "x1"}, {"x1", "0"}, {"x1*x2"}});
  ClassifyReport r5 = classify_germ(t);
  REQUIRE(r5.resolved);
  CHECK(r5.match.table == "sym3");
  CHECK(r5.match.class_id == 7);
}

TEST_CASE("classification reports honest failure modes") {
  // infinite codimension never stabilizes
  ClassifyReport r1 = classify_germ(SymMatrixGerm(2, 2));
  CHECK_FALSE(r1.resolved);
  CHECK(r1.reason.find("stabilize") != std::string::npos);

  // the codimension budget is respected
  ClassifyReport r2 = classify_germ(germ2("x1", "x2^2", "x1*x2"), 3);
  CHECK_FALSE(r2.resolved);
  CHECK(r2.reason.find("bound") != std::string::npos);

  CHECK_THROWS_AS(classify_germ(SymMatrixGerm::from_strings(2, 3, {{"x1", "x2"}, {"x3"}})),
                  std::invalid_argument);
}
