#include "pairmps/group.hpp"

#include "pairmps/errors.hpp"
#include "pairmps/mock_backend.hpp"
#include "pairmps/ss512_backend.hpp"
#include "mpz_codec.hpp"

namespace pairmps::group {

const char* backend_kind_name(BackendKind kind) {
  return kind == BackendKind::production ? "production" : "mock";
}

BackendKind backend_kind_from_name(std::string_view name) {
  if (name == "production") return BackendKind::production;
  if (name == "mock") return BackendKind::mock;
  throw Error(Errc::invalid_config, "unknown backend kind '" + std::string(name) + "'");
}

const detail::G1Rep& G1Element::rep() const {
  if (!rep_) throw Error(Errc::internal, "use of empty G1 element");
  return *rep_;
}

const detail::GtRep& GtElement::rep() const {
  if (!rep_) throw Error(Errc::internal, "use of empty Gt element");
  return *rep_;
}

G1Element Backend::g1_sub(const G1Element& a, const G1Element& b) const {
  return g1_add(a, g1_neg(b));
}

bool Backend::g1_is_identity(const G1Element& a) const {
  return a == g1_identity();
}

bool Backend::gt_is_identity(const GtElement& x) const {
  return x == gt_identity();
}

Scalar Backend::random_scalar(RandomSource& rng) const {
  // Twice the scalar width before reduction keeps the mod-q bias negligible.
  const std::size_t draw = descriptor_.scalar_bytes * 2;
  for (;;) {
    Bytes buf = rng.bytes(draw);
    mpz_class v;
    mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 0, 0, buf.data());
    Scalar s = Scalar::reduce(v, descriptor_.order);
    if (!s.is_zero()) return s;
  }
}

Scalar Backend::scalar_from_u64(std::uint64_t v) const {
  return Scalar::from_u64(v, descriptor_.order);
}

Scalar Backend::scalar_reduce(const mpz_class& v) const {
  return Scalar::reduce(v, descriptor_.order);
}

Bytes Backend::encode_scalar(const Scalar& s) const {
  if (s.modulus() != *descriptor_.order) {
    throw Error(Errc::internal, "scalar from a different group");
  }
  return encode_mpz_fixed(s.value(), descriptor_.scalar_bytes);
}

Scalar Backend::decode_scalar(ByteView bytes) const {
  if (bytes.size() != descriptor_.scalar_bytes) {
    throw Error(Errc::malformed_encoding, "scalar encoding has wrong length");
  }
  mpz_class v = decode_mpz(bytes);
  if (v >= *descriptor_.order) {
    throw Error(Errc::malformed_encoding, "scalar encoding out of range");
  }
  return Scalar::reduce(v, descriptor_.order);
}

std::shared_ptr<const Backend> make_backend(BackendKind kind) {
  return kind == BackendKind::production ? make_ss512_backend() : make_mock_backend();
}

}  // namespace pairmps::group
