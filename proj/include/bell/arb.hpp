#pragma once

// Exact integer and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace bell {

using ArbInt = mpz_class;
using ArbRat = mpq_class;  // GMP keeps mpq values canonical: gcd(num,den)=1, den>0

// Number of bits in |x|; 0 for x == 0.
inline std::size_t bit_length(const ArbInt& x) {
  return mpz_sgn(x.get_mpz_t()) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Natural log of |x| from the exponent and the leading limbs, accurate to
// ~1e-15 relative for any magnitude. x must be nonzero.
double log_abs(const ArbInt& x);

// Natural log of |x| for a nonzero rational.
double log_abs(const ArbRat& x);

inline double to_double(const ArbRat& x) { return mpq_get_d(x.get_mpq_t()); }

inline std::string to_string(const ArbInt& x) { return x.get_str(10); }
std::string to_string(const ArbRat& x);

ArbInt factorial(unsigned n);
ArbInt binomial(unsigned n, unsigned k);

// Parses a base-10 signed integer; throws std::invalid_argument on junk.
ArbInt parse_int(const std::string& text);

inline ArbRat make_rat(const ArbInt& num, const ArbInt& den) {
  ArbRat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace bell
