#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mukai {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// num/den with the denominator's sign folded into the numerator. The
// two-argument Rat constructor misreads a negative denominator of an
// unbounded integer type as singular, so never hand it one.
inline Rat rat_frac(const Int& num, const Int& den) {
  return den < 0 ? Rat(-num, -den) : Rat(num, den);
}

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// floor(sqrt(n)); n must be >= 0
Int isqrt_floor(const Int& n);
bool is_perfect_square(const Int& n, Int* root = nullptr);

// Rational bounds lo <= sqrt(q) < hi with hi - lo <= 2^-bits; q >= 0.
Rat sqrt_lower(const Rat& q, unsigned bits);
Rat sqrt_upper(const Rat& q, unsigned bits);

// Fixed-point decimal with `digits` fractional digits; ties round away from zero.
std::string rat_to_decimal(const Rat& q, unsigned digits);

int sign_of(const Int& n);
int sign_of(const Rat& q);

}
