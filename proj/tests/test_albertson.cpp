#include <catch2/catch.hpp>

#include <cmath>

#include "crossmap/albertson.hpp"
#include "crossmap/bounds.hpp"

using namespace crossmap;
using namespace crossmap::albertson;

namespace {

long p_mills(double p) { return std::llround(p * 1000.0); }

struct Row {
  long n, m, p_mills, bound;
};

// Verification table for r = 18 (left) and r = 19 (right).
const Row kTable18[] = {
    {23, 228, 555, 1073}, {24, 240, 556, 1132}, {25, 251, 560, 1176},
    {26, 261, 567, 1204}, {27, 270, 576, 1217}, {28, 278, 586, 1218},
    {29, 285, 599, 1206}, {30, 291, 613, 1183}, {31, 296, 628, 1151},
    {32, 300, 646, 1111}, {33, 303, 665, 1064}, {34, 305, 686, 1010},
};
const Row kTable19[] = {
    {24, 251, 523, 1321}, {25, 264, 524, 1397}, {26, 276, 527, 1455},
    {27, 287, 533, 1495}, {28, 297, 540, 1518}, {29, 306, 548, 1527},
    {30, 314, 558, 1520}, {31, 321, 570, 1501}, {32, 327, 583, 1471},
    {33, 332, 597, 1430}, {34, 336, 613, 1380}, {35, 339, 631, 1322},
    {36, 341, 650, 1259}, {37, 349, 656, 1269}, {38, 358, 659, 1292},
};

}  // namespace

TEST_CASE("critical edge bound formulas") {
  CHECK(*gallai(23, 18) == ratio(227));
  CHECK(*ks(35, 18) == ratio(625, 2));
  CHECK(ceil_to_long(*ks(35, 18)) == 313);
  CHECK(!dirac(18, 18));  // needs n >= r+2
  CHECK(*dirac(23, 18) == ratio(203));
  CHECK(!gallai(36, 18));  // beyond 2r-1
  CHECK(*bt_gallai(23, 18) == ratio(455, 2));
}

TEST_CASE("critical_edge_bounds collects applicable forms") {
  auto b = critical_edge_bounds(23, 18);
  CHECK(b.trivial == ratio(23 * 17, 2));
  REQUIRE(b.dirac);
  CHECK(*b.dirac == ratio(203));
  REQUIRE(b.ks);
  REQUIRE(b.gallai);
  CHECK(*b.gallai == ratio(227));
  auto at_2r1 = critical_edge_bounds(35, 18);  // n = 2r-1 drops the KS form
  CHECK_FALSE(at_2r1.ks.has_value());
  REQUIRE(at_2r1.gallai);
}

TEST_CASE("min_edges_critical mirrors the f_r(n) recursion") {
  CHECK(min_edges_critical(18, 18) == 153);
  CHECK_FALSE(min_edges_critical(19, 18).has_value());  // no graph on r+1
  CHECK(min_edges_critical(23, 18) == 227);
  CHECK(min_edges_critical(17, 18) == 0);
  CHECK(min_edges_critical(2, 2) == 1);  // K_2
}

TEST_CASE("m_lower_nosub splits at n = 2r-2") {
  CHECK(m_lower_nosub(23, 18) == 228);
  CHECK(m_lower_nosub(34, 18) == 305);
  CHECK(m_lower_nosub(35, 18) == 313);  // KS side, no 2r-1 exclusion
  CHECK(m_lower_nosub(37, 19) == 349);
  CHECK_THROWS_AS(m_lower_nosub(18, 18), std::invalid_argument);
}

TEST_CASE("zarankiewicz values") {
  CHECK(zarankiewicz(5) == 1);
  CHECK(zarankiewicz(6) == 3);
  CHECK(zarankiewicz(7) == 9);
  CHECK(zarankiewicz(17) == 784);
  CHECK(zarankiewicz(18) == 1008);
  CHECK(zarankiewicz(19) == 1296);
}

TEST_CASE("cr_detailed at p = 1 equals the linear form exactly") {
  for (auto [n, m] : {std::pair<long, long>{9, 40}, {23, 228}, {57, 400}}) {
    double lhs = cr_detailed(n, m, 1.0);
    double rhs = to_double(bounds::linear_bound(5, n, m));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cr_detailed checkpoint values") {
  CHECK(static_cast<long>(std::ceil(cr_detailed(36, 348, 0.635))) == 1343);
  CHECK(cr_detailed_intended_range(9));
  CHECK_FALSE(cr_detailed_intended_range(8));
  CHECK_THROWS_AS(cr_detailed(36, 348, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cr_detailed(36, 348, 1.5), std::invalid_argument);
}

TEST_CASE("cr_simplified checkpoint values") {
  CHECK(static_cast<long>(std::ceil(cr_simplified(23, 228, 0.555))) == 1073);
  CHECK(static_cast<long>(std::ceil(cr_simplified(36, 341, 0.650))) == 1259);
  // dropping the tail costs at most 0.05 against the p = 1 linear form
  double diff = to_double(bounds::linear_bound(5, 30, 200)) -
                cr_simplified(30, 200, 1.0);
  CHECK(diff == Approx(0.05).margin(1e-12));
}

TEST_CASE("optimize_p reproduces the printed choices") {
  auto a = optimize_p(23, 228);
  CHECK(p_mills(a.p) == 555);
  CHECK(a.bound == 1073);
  auto b = optimize_p(29, 306);
  CHECK(p_mills(b.p) == 548);
  CHECK(b.bound == 1527);
  auto c = optimize_p(34, 305);
  CHECK(p_mills(c.p) == 686);
  CHECK(c.bound == 1010);
}

TEST_CASE("optimize_p agrees with a golden-section search") {
  for (auto [n, m] : {std::pair<long, long>{23, 228}, {30, 314}, {38, 358}}) {
    auto opt = optimize_p(n, m);
    // unrounded stationary point by direct maximization
    double lo = 0.05, hi = 1.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    for (int it = 0; it < 200; ++it) {
      if (cr_simplified(n, m, a) < cr_simplified(n, m, b)) lo = a;
      else hi = b;
      a = hi - gr * (hi - lo);
      b = lo + gr * (hi - lo);
    }
    double p_star = 0.5 * (lo + hi);
    CHECK(std::abs(std::round(p_star * 1000.0) / 1000.0 - opt.p) < 1e-6);
  }
}

TEST_CASE("table r=18 matches all twelve printed rows") {
  auto rows = table(18, 23, 34);
  REQUIRE(rows.size() == 12);
  for (size_t i = 0; i < rows.size(); ++i) {
    INFO("row n=" << kTable18[i].n);
    CHECK(rows[i].n == kTable18[i].n);
    CHECK(rows[i].m == kTable18[i].m);
    CHECK(p_mills(rows[i].p) == kTable18[i].p_mills);
    CHECK(rows[i].bound == kTable18[i].bound);
  }
}

TEST_CASE("table r=19 matches all fifteen printed rows") {
  auto rows = table(19, 24, 38);
  REQUIRE(rows.size() == 15);
  for (size_t i = 0; i < rows.size(); ++i) {
    INFO("row n=" << kTable19[i].n);
    CHECK(rows[i].n == kTable19[i].n);
    CHECK(rows[i].m == kTable19[i].m);
    CHECK(p_mills(rows[i].p) == kTable19[i].p_mills);
    CHECK(rows[i].bound == kTable19[i].bound);
  }
}

TEST_CASE("threshold solves the break-even system") {
  auto t17 = threshold(17);
  CHECK(t17.p_star == Approx(0.727523979840676).margin(1e-6));
  CHECK(t17.n_star == Approx(31.5627659574468).margin(1e-6));
  CHECK(t17.p_rounded == 0.727);
  CHECK(t17.coeff_a == Approx(15.3896636507376).margin(1e-9));
  CHECK(t17.coeff_b == Approx(298.258502516192).margin(1e-9));

  auto t18 = threshold(18);
  CHECK(t18.p_star == Approx(0.690689920492434).margin(1e-6));
  CHECK(t18.n_star == Approx(34.4659498207885).margin(1e-6));
  CHECK(t18.coeff_a == Approx(18.7463154231188).margin(1e-9));
  CHECK(t18.coeff_b == Approx(361.887598221377).margin(1e-9));

  auto t19 = threshold(19);
  CHECK(t19.p_star == Approx(0.659831121833534).margin(1e-6));
  CHECK(t19.n_star == Approx(38.2051696284330).margin(1e-6));
  CHECK(t19.coeff_a == Approx(22.7249538544304).margin(1e-9));
  CHECK(t19.coeff_b == Approx(427.789066289688).margin(1e-9));
}

TEST_CASE("join case at r=19, n=36") {
  CHECK(join_case_min_edges(19, 36) == 348);
  // the single-vertex branch: 1*35 + 313
  CHECK(35 + ceil_to_long(*ks(35, 18)) == 348);
  CHECK_THROWS_AS(join_case_min_edges(19, 30), std::invalid_argument);
}

TEST_CASE("counterexample size check for r=19") {
  auto rep = counterexample_check(19);
  CHECK(rep.zr_ok);
  CHECK(19L * 18 * 17 * 16 == 93024);
  CHECK(93024.0 / 64.0 == Approx(1453.5));
  REQUIRE(rep.ranges.size() == 3);
  CHECK(rep.ranges[0].k == 47);
  CHECK(rep.ranges[1].k == 41);
  CHECK(rep.ranges[2].k == 40);
  for (const auto& rc : rep.ranges) {
    CHECK(rc.h_ok);
    CHECK(rc.coeff_ok);
    CHECK(rc.min_coeff >= 1.0 / 64.0);
  }
  CHECK(rep.holds);
  CHECK_THROWS_AS(counterexample_check(18), std::invalid_argument);
}

TEST_CASE("optimize_p domain errors") {
  CHECK_THROWS_AS(optimize_p(1, 1), std::domain_error);  // no stationary point
  CHECK_THROWS_AS(optimize_p(30, 0), std::invalid_argument);
}

TEST_CASE("verify runs for every supported r") {
  for (long r = 5; r <= 19; ++r) {
    auto v = verify(r);
    CHECK(v.r == r);
    CHECK(v.z == zarankiewicz(r));
    bool subdivision = false, threshold_tail = false;
    for (const auto& c : v.covered) {
      if (c.how == "subdivision") subdivision = c.n_lo == r && c.n_hi == r + 4;
      if (c.how == "threshold") threshold_tail = !c.n_hi.has_value();
    }
    CHECK(subdivision);
    CHECK(threshold_tail);
    if (r <= 18) CHECK(v.complete);
  }
  CHECK_THROWS_AS(verify(4), std::invalid_argument);
  CHECK_THROWS_AS(verify(20), std::invalid_argument);
}

TEST_CASE("verify per r") {
  auto v18 = verify(18);
  CHECK(v18.complete);
  CHECK(v18.exceptions.empty());
  CHECK(v18.rows.size() == 12);  // threshold at 34.47 leaves 23..34

  auto v19 = verify(19);
  CHECK_FALSE(v19.complete);
  CHECK(v19.exceptions == std::vector<long>{37, 38});
  REQUIRE(v19.join_m.has_value());
  CHECK(*v19.join_m == 348);
  CHECK(*v19.join_bound == 1343);

  auto v17 = verify(17);
  CHECK(v17.complete);
  CHECK(v17.rows.empty());
  bool has_external = false;
  for (const auto& c : v17.covered)
    if (c.how == "external" && c.n_lo == 22 && c.n_hi == 31) has_external = true;
  CHECK(has_external);
}
