#include "typeseq/scalar.hpp"

namespace typeseq {

Fp Fp::inverse() const {
  if (value_ == 0) throw Error(ErrorCode::field, "inverse", "division by zero in F_" + std::to_string(modulus_));
  // extended Euclid on (value, modulus)
  std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  std::int64_t r = x0 % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  return Fp(static_cast<std::uint64_t>(r), modulus_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime))
    throw Error(ErrorCode::field, "base-field", std::to_string(prime) + " is not prime");
}

Fp PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return Fp(static_cast<std::uint64_t>(r), p);
}

Fp PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0)
    throw Error(ErrorCode::field, "base-field",
                "denominator of " + q.get_str() + " vanishes in F_" + std::to_string(p));
  return Fp(num.get_ui(), p) / Fp(den.get_ui(), p);
}

}  // namespace typeseq
