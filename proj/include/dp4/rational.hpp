#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dp4 {

/// Exact rational number. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) as long as every constructor path goes through
/// make_rational or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for malformed input anywhere in the library.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (a computed dimension or
/// count differs from what the construction forces).
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw input_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw input_error("empty rational");
  auto slash = s.find('/');
  Integer num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational '" + s + "'");
  }
  return make_rational(num, den);
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Rational power with integer exponent (negative allowed for nonzero base).
inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1, b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Uniform small integer in [lo, hi]; used by every seeded generator.
inline long random_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_small_rational(std::mt19937_64& rng, long bound = 9) {
  return Rational(random_int(rng, -bound, bound));
}

}  // namespace dp4
