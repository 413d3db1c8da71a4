#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ftsp {

/// Exact dyadic rational num / 2^exp, normalized so that exp == 0 or num is odd.
///
/// This is the coordinate domain of all piecewise-linear maps in this project.
/// Values are immutable after construction apart from assignment; all
/// arithmetic is exact.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long n) : num_(n), exp_(0) {}
  Dyadic(mpz_class n, unsigned e) : num_(std::move(n)), exp_(e) { normalize(); }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1); }
  static Dyadic half() { return Dyadic(1, 1); }

  const mpz_class& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const { return Dyadic(-num_, exp_, already_normal{}); }
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  /// Multiply by 2^e (e may be negative).
  Dyadic shifted(long e) const;

  std::strong_ordering operator<=>(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const { return exp_ == o.exp_ && num_ == o.num_; }

  /// "p/q" with q a power of two, e.g. "3/8"; integers print without "/".
  std::string str() const;
  mpq_class to_mpq() const;

  double approx() const { return mpq_get_d(to_mpq().get_mpq_t()); }

 private:
  struct already_normal {};
  Dyadic(mpz_class n, unsigned e, already_normal) : num_(std::move(n)), exp_(e) {}
  void normalize();

  mpz_class num_;
  unsigned exp_;
};

/// Parse exact rational "p/q" or "p" (arbitrary precision, canonicalized).
mpq_class parse_rational(const std::string& s);

/// Canonical p/q. GMP's two-argument mpq constructor does not reduce, and
/// its comparisons and arithmetic assume reduced operands, so fractions are
/// built through this instead.
mpq_class make_rational(long num, long den);

/// Canonical "p/q" form, denominator always printed.
std::string rational_str(const mpq_class& q);

}  // namespace ftsp
