#include "pairmps/scalar.hpp"

#include "pairmps/errors.hpp"

namespace pairmps::group {

namespace {
void require(bool cond, const char* what) {
  if (!cond) throw Error(Errc::internal, what);
}
}  // namespace

Scalar::Scalar(mpz_class v, std::shared_ptr<const mpz_class> q)
    : value_(std::move(v)), q_(std::move(q)) {}

Scalar Scalar::reduce(const mpz_class& v, std::shared_ptr<const mpz_class> q) {
  require(q != nullptr && *q > 1, "scalar modulus unset");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q->get_mpz_t());
  return Scalar(std::move(r), std::move(q));
}

Scalar Scalar::from_u64(std::uint64_t v, std::shared_ptr<const mpz_class> q) {
  mpz_class big;
  mpz_import(big.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return reduce(big, std::move(q));
}

const mpz_class& Scalar::value() const {
  require(q_ != nullptr, "use of empty scalar");
  return value_;
}

const mpz_class& Scalar::modulus() const {
  require(q_ != nullptr, "use of empty scalar");
  return *q_;
}

bool Scalar::is_zero() const { return value() == 0; }

void Scalar::require_same_modulus(const Scalar& other) const {
  require(q_ != nullptr && other.q_ != nullptr, "use of empty scalar");
  require(*q_ == *other.q_, "scalar modulus mismatch");
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same_modulus(other);
  return reduce(value_ + other.value_, q_);
}

Scalar Scalar::operator-(const Scalar& other) const {
  require_same_modulus(other);
  return reduce(value_ - other.value_, q_);
}

Scalar Scalar::operator*(const Scalar& other) const {
  require_same_modulus(other);
  return reduce(value_ * other.value_, q_);
}

Scalar Scalar::operator-() const {
  require(q_ != nullptr, "use of empty scalar");
  return reduce(-value_, q_);
}

Scalar Scalar::inverse() const {
  require(q_ != nullptr, "use of empty scalar");
  if (value_ == 0) throw Error(Errc::internal, "inverse of zero scalar");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), q_->get_mpz_t()) == 0) {
    throw Error(Errc::internal, "scalar not invertible");
  }
  return Scalar(std::move(inv), q_);
}

bool Scalar::operator==(const Scalar& other) const {
  require_same_modulus(other);
  return value_ == other.value_;
}

}  // namespace pairmps::group
