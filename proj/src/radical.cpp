#include "mukai/radical.hpp"

#include "mukai/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace mukai {

namespace {

// n = f^2 * m with m square-free. Trial division; radicands stay small in
// practice (well under 2^64), so the fast path covers everything we see.
void extract_square_free(const Int& n, Int* f, Int* m) {
  if (n == 0) {
    *f = 0;
    *m = 1;
    return;
  }
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t v = static_cast<std::uint64_t>(n);
    std::uint64_t fu = 1, mu = 1;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
      if (v % p != 0) continue;
      unsigned e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      for (unsigned i = 0; i < e / 2; ++i) fu *= p;
      if (e % 2 == 1) mu *= p;
    }
    *f = fu;
    *m = mu * v;
    return;
  }
  Int v = n, fb = 1, mb = 1;
  for (Int p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p != 0) continue;
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) fb *= p;
    if (e % 2 == 1) mb *= p;
  }
  *f = fb;
  *m = mb * v;
}

// Sign of a + q*sqrt(d) with d square-free >= 2. Exact via squaring.
int sign_one_term(const Rat& a, const Rat& q, const Int& d) {
  if (q == 0) return sign_of(a);
  if (a == 0) return sign_of(q);
  int sa = sign_of(a), sq = sign_of(q);
  if (sa == sq) return sa;
  Rat aa = a * a;
  Rat qq = q * q * d;
  if (aa > qq) return sa;
  if (aa < qq) return sq;
  return 0;  // a^2 = q^2 d cannot happen for square-free d >= 2
}

}  // namespace

RadicalValue RadicalValue::sqrt_of(const Rat& q) {
  if (q < 0) throw std::domain_error("sqrt_of: negative argument");
  RadicalValue out;
  if (q == 0) return out;
  Int n = rat_num(q), d = rat_den(q);
  Int f, m;
  extract_square_free(n * d, &f, &m);
  // sqrt(n/d) = sqrt(n d)/d = (f/d) sqrt(m)
  Rat coeff(f, d);
  if (m == 1) {
    out.a_ = coeff;
  } else {
    out.terms_[m] = coeff;
  }
  return out;
}

void RadicalValue::add_term(const Int& d, const Rat& q) {
  if (q == 0) return;
  if (d == 1) {
    a_ += q;
    return;
  }
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, q);
  } else {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalValue& RadicalValue::operator+=(const RadicalValue& o) {
  a_ += o.a_;
  for (const auto& [d, q] : o.terms_) add_term(d, q);
  return *this;
}

RadicalValue& RadicalValue::operator-=(const RadicalValue& o) {
  a_ -= o.a_;
  for (const auto& [d, q] : o.terms_) add_term(d, -q);
  return *this;
}

RadicalValue operator-(const RadicalValue& a) {
  RadicalValue out;
  out.a_ = -a.a_;
  for (const auto& [d, q] : a.terms_) out.terms_.emplace(d, -q);
  return out;
}

RadicalValue operator*(const RadicalValue& a, const RadicalValue& b) {
  RadicalValue out;
  out.a_ = a.a_ * b.a_;
  for (const auto& [d, q] : b.terms_) out.add_term(d, a.a_ * q);
  for (const auto& [d, q] : a.terms_) out.add_term(d, b.a_ * q);
  for (const auto& [d1, q1] : a.terms_) {
    for (const auto& [d2, q2] : b.terms_) {
      // sqrt(d1) sqrt(d2) = g sqrt(uv), g = gcd(d1,d2); u,v coprime and
      // square-free, so uv is square-free (possibly 1).
      Int g = boost::multiprecision::gcd(d1, d2);
      Int uv = (d1 / g) * (d2 / g);
      out.add_term(uv, q1 * q2 * g);
    }
  }
  return out;
}

int RadicalValue::sign() const {
  if (terms_.empty()) return sign_of(a_);
  if (terms_.size() == 1) {
    const auto& [d, q] = *terms_.begin();
    return sign_one_term(a_, q, d);
  }
  if (terms_.size() == 2) {
    auto it = terms_.begin();
    const auto& [d1, q1] = *it;
    const auto& [d2, q2] = *++it;
    // w = q1 sqrt(d1) + q2 sqrt(d2): like signs decide; otherwise the term
    // with larger square dominates (q1^2 d1 = q2^2 d2 would force d1 = d2).
    int sw;
    if (sign_of(q1) == sign_of(q2)) {
      sw = sign_of(q1);
    } else {
      Rat m1 = q1 * q1 * d1, m2 = q2 * q2 * d2;
      sw = m1 > m2 ? sign_of(q1) : (m1 < m2 ? sign_of(q2) : 0);
    }
    if (a_ == 0) return sw;
    int sa = sign_of(a_);
    if (sw == 0 || sw == sa) return sa;
    // Opposite signs: compare a^2 with w^2, a one-term value.
    RadicalValue w;
    w.terms_ = terms_;
    RadicalValue t = RadicalValue(a_ * a_) - w * w;
    int st = t.sign();  // w^2 has one radical term
    if (st > 0) return sa;
    if (st < 0) return sw;
    return 0;  // a^2 = w^2 with opposite signs would make the value 0
  }
  // Three or more independent radicals: refine an enclosure. A nonzero
  // value separates from 0 at finite precision.
  for (unsigned bits = 128; bits <= 1024; bits *= 2) {
    Rat lo, hi;
    interval(bits, &lo, &hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw Error(ErrorCode::UndecidedComparison,
              "sign of radical value undecided at 1024 bits");
}

void RadicalValue::interval(unsigned bits, Rat* lo, Rat* hi) const {
  *lo = a_;
  *hi = a_;
  for (const auto& [d, q] : terms_) {
    Rat sl = sqrt_lower(Rat(d), bits);
    Rat sh = sqrt_upper(Rat(d), bits);
    if (q > 0) {
      *lo += q * sl;
      *hi += q * sh;
    } else {
      *lo += q * sh;
      *hi += q * sl;
    }
  }
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

ComparisonCertificate compare_radicals(const RadicalValue& a, const RadicalValue& b,
                                       unsigned max_bits) {
  ComparisonCertificate cert;
  RadicalValue d = a - b;
  if (d.is_zero()) {
    cert.ord = Ordering::Equal;
    cert.method = "exact";
    cert.bits = 0;
    cert.diff_lo = 0;
    cert.diff_hi = 0;
    return cert;
  }
  unsigned bits = std::min(128u, max_bits);
  if (d.radical_terms().size() <= 2) {
    int s = d.sign();
    cert.ord = s > 0 ? Ordering::Greater : Ordering::Less;
    cert.method = "exact";
    // Record an enclosure as well, refined toward separation when cheap.
    for (;;) {
      d.interval(bits, &cert.diff_lo, &cert.diff_hi);
      cert.bits = bits;
      if (cert.diff_lo > 0 || cert.diff_hi < 0 || bits >= max_bits) break;
      bits = std::min(bits * 2, max_bits);
    }
    return cert;
  }
  cert.method = "interval";
  for (;;) {
    d.interval(bits, &cert.diff_lo, &cert.diff_hi);
    cert.bits = bits;
    if (cert.diff_lo > 0) {
      cert.ord = Ordering::Greater;
      return cert;
    }
    if (cert.diff_hi < 0) {
      cert.ord = Ordering::Less;
      return cert;
    }
    if (bits >= max_bits) break;
    bits = std::min(bits * 2, max_bits);
  }
  throw Error(ErrorCode::UndecidedComparison,
              "comparison undecided at " + std::to_string(max_bits) + " bits");
}

std::optional<RadicalValue> sqrt_denest(const RadicalValue& v) {
  if (v.radical_terms().size() != 1) {
    if (v.is_rational() && v.rational_part() >= 0)
      return RadicalValue::sqrt_of(v.rational_part());
    return std::nullopt;
  }
  const Rat& a = v.rational_part();
  const auto& [d, q] = *v.radical_terms().begin();
  if (v.sign() < 0) return std::nullopt;
  // sqrt(a + q sqrt(d)) = sqrt(x) + sqrt(y) with x + y = a, xy = q^2 d / 4,
  // provided disc = a^2 - q^2 d is a perfect rational square.
  Rat disc = a * a - q * q * d;
  if (disc < 0) return std::nullopt;
  Int dn = rat_num(disc), dd = rat_den(disc);
  if (!is_perfect_square(dn) || !is_perfect_square(dd)) return std::nullopt;
  Rat f(isqrt_floor(dn), isqrt_floor(dd));
  Rat x = (a + f) / 2, y = (a - f) / 2;
  if (x < 0 || y < 0) return std::nullopt;
  RadicalValue root = RadicalValue::sqrt_of(x);
  if (q > 0) {
    root += RadicalValue::sqrt_of(y);
  } else {
    root -= RadicalValue::sqrt_of(y);
  }
  if (root.sign() < 0) return std::nullopt;
  return root;
}

Int floor_certified(const RadicalValue& v, unsigned max_bits) {
  if (v.is_rational()) return rat_floor(v.rational_part());
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    Rat lo, hi;
    v.interval(bits, &lo, &hi);
    Int fl = rat_floor(lo), fh = rat_floor(hi);
    if (fl == fh) return fl;
  }
  throw Error(ErrorCode::UndecidedComparison, "floor undecided: value too close to an integer");
}

}  // namespace mukai
