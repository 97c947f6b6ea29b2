#include "pairmps/mock_backend.hpp"

#include <memory>

#include "pairmps/errors.hpp"
#include "mpz_codec.hpp"

namespace pairmps::group {
namespace {

constexpr std::size_t kMockWidth = 8;  // fixed-width big-endian u64

struct MockG1 final : detail::G1Rep {
  mpz_class v;  // residue mod q; P = 1, identity = 0
  explicit MockG1(mpz_class value) : v(std::move(value)) {}
  bool equals(const detail::G1Rep& other) const override {
    auto* o = dynamic_cast<const MockG1*>(&other);
    return o != nullptr && v == o->v;
  }
};

struct MockGt final : detail::GtRep {
  mpz_class v;  // residue mod q; "product" is addition, identity = 0
  explicit MockGt(mpz_class value) : v(std::move(value)) {}
  bool equals(const detail::GtRep& other) const override {
    auto* o = dynamic_cast<const MockGt*>(&other);
    return o != nullptr && v == o->v;
  }
};

class MockBackend final : public Backend {
 public:
  explicit MockBackend(GroupDescriptor d) : Backend(std::move(d)) {}

  G1Element g1(mpz_class v) const {
    return G1Element(std::make_shared<MockG1>(std::move(v)));
  }
  GtElement gt(mpz_class v) const {
    return GtElement(std::make_shared<MockGt>(std::move(v)));
  }
  const mpz_class& q() const { return *descriptor_.order; }

  static const mpz_class& g1v(const G1Element& a) {
    auto* rep = dynamic_cast<const MockG1*>(&a.rep());
    if (rep == nullptr) throw Error(Errc::internal, "G1 element from a different backend");
    return rep->v;
  }
  static const mpz_class& gtv(const GtElement& x) {
    auto* rep = dynamic_cast<const MockGt*>(&x.rep());
    if (rep == nullptr) throw Error(Errc::internal, "Gt element from a different backend");
    return rep->v;
  }

  G1Element g1_identity() const override { return g1(0); }
  G1Element generator() const override { return g1(1); }

  G1Element g1_add(const G1Element& a, const G1Element& b) const override {
    return g1((g1v(a) + g1v(b)) % q());
  }
  G1Element g1_neg(const G1Element& a) const override {
    return g1((q() - g1v(a)) % q());
  }
  G1Element g1_mul(const G1Element& a, const Scalar& k) const override {
    return g1(g1v(a) * k.value() % q());
  }

  GtElement gt_identity() const override { return gt(0); }
  GtElement gt_mul(const GtElement& a, const GtElement& b) const override {
    return gt((gtv(a) + gtv(b)) % q());
  }
  GtElement gt_exp(const GtElement& x, const Scalar& k) const override {
    return gt(gtv(x) * k.value() % q());
  }

  GtElement pair(const G1Element& a, const G1Element& b) const override {
    return gt(g1v(a) * g1v(b) % q());
  }

  // Desk oracle: big-endian(msg) mod q; the tag is ignored on purpose so
  // every hash value can be produced by hand.
  G1Element hash_to_g1(ByteView, ByteView msg) const override {
    return g1(decode_mpz(msg) % q());
  }
  Scalar hash_to_scalar(ByteView, ByteView msg) const override {
    mpz_class v = decode_mpz(msg) % q();
    if (v == 0) v = 1;  // remap into Z_q^*
    return scalar_reduce(v);
  }

  Bytes encode_g1(const G1Element& a) const override {
    return encode_mpz_fixed(g1v(a), kMockWidth);
  }
  G1Element decode_g1(ByteView bytes) const override {
    return g1(decode_residue(bytes, "G1"));
  }
  Bytes encode_gt(const GtElement& x) const override {
    return encode_mpz_fixed(gtv(x), kMockWidth);
  }
  GtElement decode_gt(ByteView bytes) const override {
    return gt(decode_residue(bytes, "Gt"));
  }

 private:
  mpz_class decode_residue(ByteView bytes, const char* what) const {
    if (bytes.size() != kMockWidth) {
      throw Error(Errc::malformed_encoding, std::string(what) + " encoding has wrong length");
    }
    mpz_class v = decode_mpz(bytes);
    if (v >= q()) {
      throw Error(Errc::malformed_encoding, std::string(what) + " encoding is not a group element");
    }
    return v;
  }
};

}  // namespace

std::shared_ptr<const Backend> make_mock_backend(std::uint64_t q) {
  mpz_class order;
  mpz_import(order.get_mpz_t(), 1, 1, sizeof(q), 0, 0, &q);
  if (q < 3 || mpz_probab_prime_p(order.get_mpz_t(), 40) == 0) {
    throw Error(Errc::invalid_config, "mock modulus must be an odd prime");
  }
  GroupDescriptor d{
      .kind = BackendKind::mock,
      .name = "mock-q" + order.get_str(10),
      .order = std::make_shared<const mpz_class>(order),
      .scalar_bytes = kMockWidth,
      .g1_bytes = kMockWidth,
      .gt_bytes = kMockWidth,
  };
  return std::make_shared<MockBackend>(std::move(d));
}

}  // namespace pairmps::group
