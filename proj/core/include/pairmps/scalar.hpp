#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>

#include "pairmps/bytes.hpp"

namespace pairmps::group {

// Element of Z_q where q is the (prime) group order of the active backend.
// Immutable value type; all arithmetic is mod q. A default-constructed
// Scalar is empty and only assignable.
class Scalar {
 public:
  Scalar() = default;

  static Scalar reduce(const mpz_class& v, std::shared_ptr<const mpz_class> q);
  static Scalar from_u64(std::uint64_t v, std::shared_ptr<const mpz_class> q);

  const mpz_class& value() const;
  const mpz_class& modulus() const;
  bool is_zero() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws for zero

  bool operator==(const Scalar& other) const;

 private:
  Scalar(mpz_class v, std::shared_ptr<const mpz_class> q);
  void require_same_modulus(const Scalar& other) const;

  mpz_class value_;
  std::shared_ptr<const mpz_class> q_;
};

}  // namespace pairmps::group
