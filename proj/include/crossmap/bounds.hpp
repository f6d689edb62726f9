#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossmap/rational.hpp"

namespace crossmap::bounds {

// The five linear lower bounds on the crossing number of a graph with n > 2
// vertices and m edges, evaluated exactly.
inline Rational linear_bound(int id, long n, long m) {
  if (n <= 2) throw std::invalid_argument("linear bounds require n > 2");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  Rational s = ratio(n - 2);
  switch (id) {
    case 1: return ratio(m) - 3 * s;
    case 2: return ratio(7 * m, 3) - ratio(25, 3) * s;
    case 3: return ratio(4 * m) - ratio(103, 6) * s;
    case 4: return ratio(5 * m) - 25 * s;
    case 5: return ratio(5 * m) - ratio(139, 6) * s;
    default: throw std::invalid_argument("formula id must be in 1..5");
  }
}

struct LinearBest {
  Rational value;  // clamped at zero
  int formula;     // attaining formula id, 0 when clamped
};

// Max of the five linear bounds, clamped below at zero.  Ties go to the
// higher id, matching the half-open density intervals on which each formula
// is best.
inline LinearBest linear_best(long n, long m) {
  LinearBest best{linear_bound(1, n, m), 1};
  for (int id = 2; id <= 5; ++id) {
    Rational v = linear_bound(id, n, m);
    if (v >= best.value) best = {v, id};
  }
  if (best.value < 0) return {ratio(0), 0};
  return best;
}

// The edge-removal recursion behind formula (5):
// 5(m - 6(n-2)) + 24(n-2) - (103/6)(n-2) = 5m - (139/6)(n-2), checked exactly.
inline bool edge_removal_identity_check(long n, long m) {
  Rational s = ratio(n - 2);
  Rational lhs = 5 * (ratio(m) - 6 * s) + 4 * (6 * s) - ratio(103, 6) * s;
  Rational rhs = ratio(5 * m) - ratio(139, 6) * s;
  return lhs == rhs;
}

struct CrossingLemmaResult {
  double value;
  bool dense;  // m >= 6.95n, where the clean m^3/(29 n^2) form applies
};

inline CrossingLemmaResult crossing_lemma(long n, long m) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  double cubic = double(m) * double(m) * double(m) / (29.0 * double(n) * double(n));
  if (20 * m >= 139 * n) return {cubic, true};  // exact test for m >= 6.95 n
  return {std::max(0.0, cubic - 35.0 * double(n) / 29.0), false};
}

// The constant in the dense branch: 5/p^2 - 139/(6 p^3) at p = 139/20,
// computed symbolically.  Exceeds 1/29 by cross-multiplication.
inline Rational crossing_lemma_constant() {
  Rational p = ratio(139, 20);
  Rational c = ratio(5) / (p * p) - ratio(139) / (6 * p * p * p);
  if (c != ratio(2000, 57963))
    throw std::logic_error("crossing lemma constant mismatch");
  if (!(c > ratio(1, 29))) throw std::logic_error("constant does not beat 1/29");
  return c;
}

inline double multigraph_bound(long n, long m, long t) {
  if (t < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
  double v = double(m) * double(m) * double(m) /
                 (29.0 * double(t) * double(n) * double(n)) -
             35.0 / 29.0 * double(n) * double(t) * double(t);
  return std::max(0.0, v);
}

struct EdgeCountBound {
  std::string rule;
  double value;
};

struct MaxEdgesReport {
  std::vector<EdgeCountBound> applicable;
  double best;
  std::string best_rule;
};

// Upper bounds on the number of edges of an n-vertex topological graph with
// at most k crossings per edge; the report carries every applicable family
// and their minimum.
inline MaxEdgesReport max_edges(long n, long k) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  MaxEdgesReport rep;
  auto add = [&](std::string rule, double value) {
    rep.applicable.push_back({std::move(rule), value});
  };
  if (k == 0) add("3n-6", 3.0 * n - 6);
  if (k >= 1 && k <= 4) add("(k+3)(n-2)", double(k + 3) * (n - 2));
  if (k == 3) add("5.5n-11", 5.5 * n - 11);
  if (k == 4) add("6n-12", 6.0 * n - 12);
  if (k >= 2) add("3.81*sqrt(k)*n", 3.81 * std::sqrt(double(k)) * n);
  if (k >= 1) add("4.108*sqrt(k)*n", 4.108 * std::sqrt(double(k)) * n);
  rep.best = rep.applicable.front().value;
  rep.best_rule = rep.applicable.front().rule;
  for (const auto& item : rep.applicable)
    if (item.value < rep.best) {
      rep.best = item.value;
      rep.best_rule = item.rule;
    }
  return rep;
}

// Point-line incidence bound 2.44 m^{2/3} n^{2/3} + m + n.
inline double incidences(long m_lines, long n_points) {
  if (m_lines < 0 || n_points < 0)
    throw std::invalid_argument("counts must be nonnegative");
  return 2.44 * std::pow(double(m_lines), 2.0 / 3.0) *
             std::pow(double(n_points), 2.0 / 3.0) +
         m_lines + n_points;
}

}  // namespace crossmap::bounds
