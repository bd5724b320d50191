#include "mukai/numeric.hpp"

#include <stdexcept>

namespace mukai {

Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);  // d > 0 by normalization
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// sqrt(n/d) = sqrt(n*d)/d, bracketed via the integer square root of n*d*4^bits.
Rat sqrt_lower(const Rat& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt_lower: negative argument");
  Int n = rat_num(q), d = rat_den(q);
  Int t = isqrt_floor((n * d) << (2 * bits));
  return Rat(t, d << bits);
}

Rat sqrt_upper(const Rat& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt_upper: negative argument");
  Int n = rat_num(q), d = rat_den(q);
  Int t = isqrt_floor((n * d) << (2 * bits));
  return Rat(t + 1, d << bits);
}

std::string rat_to_decimal(const Rat& q, unsigned digits) {
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Rat t = q * scale;
  Int n = rat_num(t), d = rat_den(t);
  Int rounded;  // round to nearest, ties away from zero
  if (n >= 0)
    rounded = (2 * n + d) / (2 * d);
  else
    rounded = -((-2 * n + d) / (2 * d));
  bool neg = rounded < 0;
  Int mag = neg ? Int(-rounded) : rounded;
  Int ip = mag / scale, fp = mag % scale;
  std::string out = neg ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    std::string f = fp.str();
    out += '.';
    out += std::string(digits - f.size(), '0');
    out += f;
  }
  return out;
}

int sign_of(const Int& n) { return n.sign(); }
int sign_of(const Rat& q) { return q.sign(); }

}
