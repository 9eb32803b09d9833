#pragma once

// Base-field scalars. A scalar-field policy F exposes
//   using Scalar;  zero(), one(), from_rational(mpq_class), is_zero(),
//   is_one(), is_negative(), format(), describe()
// and Scalar supports + - * / and ==.  Two policies exist: the rationals
// (GMP) and a prime field Z/p.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "typeseq/error.hpp"

namespace typeseq {

/// Residue modulo a word-sized prime. The modulus travels with the value so
/// that the usual operators work without a context object.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(static_cast<std::uint32_t>(s), a.modulus_);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t s = std::uint64_t{a.value_} + a.modulus_ - b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(static_cast<std::uint32_t>(s), a.modulus_);
  }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % a.modulus_),
               a.modulus_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

  Fp inverse() const;

 private:
  static Fp raw(std::uint32_t v, std::uint32_t m) {
    Fp r;
    r.value_ = v;
    r.modulus_ = m;
    return r;
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 1;
};

struct RationalField {
  using Scalar = mpq_class;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return Scalar(v); }
  Scalar from_rational(const mpq_class& q) const { return q; }
  static bool is_zero(const Scalar& x) { return sgn(x) == 0; }
  static bool is_one(const Scalar& x) { return x == 1; }
  static bool is_negative(const Scalar& x) { return sgn(x) < 0; }
  /// Lowest terms, denominator omitted when 1.
  std::string format(const Scalar& x) const { return x.get_str(); }
  std::string describe() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
  using Scalar = Fp;

  explicit PrimeField(std::uint32_t prime);

  std::uint32_t p;

  Scalar zero() const { return Fp(0, p); }
  Scalar one() const { return Fp(1, p); }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  static bool is_zero(const Scalar& x) { return x.value() == 0; }
  static bool is_one(const Scalar& x) { return x.value() == 1; }
  static bool is_negative(const Scalar&) { return false; }
  std::string format(const Scalar& x) const { return std::to_string(x.value()); }
  std::string describe() const { return "F_" + std::to_string(p); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

bool is_prime(std::uint64_t n);

}  // namespace typeseq
