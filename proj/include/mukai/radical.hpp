#pragma once

#include "mukai/numeric.hpp"

#include <map>
#include <optional>
#include <string>

namespace mukai {

// Exact value a + sum_i q_i sqrt(d_i) with the d_i distinct square-free
// integers >= 2 and the q_i nonzero rationals. The form is canonical, so
// equality of values is equality of fields.
class RadicalValue {
 public:
  RadicalValue() = default;
  RadicalValue(const Rat& a) : a_(a) {}
  RadicalValue(const Int& a) : a_(a) {}
  RadicalValue(int a) : a_(a) {}

  static RadicalValue sqrt_of(const Rat& q);  // q >= 0

  const Rat& rational_part() const { return a_; }
  const std::map<Int, Rat>& radical_terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && a_ == 0; }

  // Exact sign. Values with up to two radical terms are decided by squaring;
  // more terms fall back to interval refinement.
  int sign() const;

  // lo <= value <= hi with width at most (1 + sum |q_i|) * 2^-bits.
  void interval(unsigned bits, Rat* lo, Rat* hi) const;

  RadicalValue& operator+=(const RadicalValue& o);
  RadicalValue& operator-=(const RadicalValue& o);
  friend RadicalValue operator+(RadicalValue a, const RadicalValue& b) { return a += b; }
  friend RadicalValue operator-(RadicalValue a, const RadicalValue& b) { return a -= b; }
  friend RadicalValue operator-(const RadicalValue& a);
  friend RadicalValue operator*(const RadicalValue& a, const RadicalValue& b);
  bool operator==(const RadicalValue&) const = default;

 private:
  void add_term(const Int& d, const Rat& q);  // d square-free or 1
  Rat a_;
  std::map<Int, Rat> terms_;
};

enum class Ordering { Less, Equal, Greater };

const char* ordering_name(Ordering o);

struct ComparisonCertificate {
  Ordering ord;
  std::string method;  // "exact" (canonical form / squaring) or "interval"
  unsigned bits;       // refinement depth of the recorded interval (0 = none)
  Rat diff_lo, diff_hi;  // certified enclosure of lhs - rhs
};

// Decides the order of two radical values. Equality is exact (canonical
// forms coincide); strict order is exact for differences with at most two
// radical terms and certified by interval separation otherwise.
ComparisonCertificate compare_radicals(const RadicalValue& a, const RadicalValue& b,
                                       unsigned max_bits = 1024);

// sqrt(a + q sqrt(d)) = sqrt(x) + sqrt(y) when a^2 - q^2 d is a perfect
// rational square; nullopt when the standard denesting does not apply.
std::optional<RadicalValue> sqrt_denest(const RadicalValue& v);

// Certified integer floor (exact for rationals, interval-refined otherwise).
Int floor_certified(const RadicalValue& v, unsigned max_bits = 65536);

}
