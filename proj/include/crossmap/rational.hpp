#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace crossmap {

// Exact rational arithmetic.  All charge accounting and the linear
// crossing-number bounds run on these; no floating point is allowed to leak
// into a conservation check or a certificate.
using Rational = mpq_class;

inline Rational ratio(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses a plain decimal literal ("6.95", "-0.05", "3.81") into an exact
// rational, so constants taken from printed formulas do not drift.
inline Rational rational_from_decimal(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational q(text);
    q.canonicalize();
    return q;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Rational num(digits);
  Rational den(1);
  for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  Rational q = num / den;
  q.canonicalize();
  return q;
}

// Serializes as "p/q" with an explicit denominator, lowest terms, q > 0.
inline std::string pq_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline long floor_to_long(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!r.fits_slong_p()) throw std::overflow_error("floor_to_long overflow");
  return r.get_si();
}

inline long ceil_to_long(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!r.fits_slong_p()) throw std::overflow_error("ceil_to_long overflow");
  return r.get_si();
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace crossmap
