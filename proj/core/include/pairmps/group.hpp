#pragma once

#include <memory>
#include <string>

#include "pairmps/bytes.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/scalar.hpp"

namespace pairmps::group {

enum class BackendKind { production, mock };

const char* backend_kind_name(BackendKind kind);
BackendKind backend_kind_from_name(std::string_view name);

struct GroupDescriptor {
  BackendKind kind;
  std::string name;  // "ss512" or "mock-q<q>"
  std::shared_ptr<const mpz_class> order;
  std::size_t scalar_bytes;
  std::size_t g1_bytes;
  std::size_t gt_bytes;
};

namespace detail {
struct G1Rep {
  virtual ~G1Rep() = default;
  virtual bool equals(const G1Rep& other) const = 0;
};
struct GtRep {
  virtual ~GtRep() = default;
  virtual bool equals(const GtRep& other) const = 0;
};
}  // namespace detail

// Immutable handle to a G1 group element. Cheap to copy; comparison is
// value equality within one backend.
class G1Element {
 public:
  G1Element() = default;
  explicit G1Element(std::shared_ptr<const detail::G1Rep> rep) : rep_(std::move(rep)) {}
  const detail::G1Rep& rep() const;
  bool valid() const { return rep_ != nullptr; }
  bool operator==(const G1Element& other) const { return rep().equals(other.rep()); }
  bool operator!=(const G1Element& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const detail::G1Rep> rep_;
};

class GtElement {
 public:
  GtElement() = default;
  explicit GtElement(std::shared_ptr<const detail::GtRep> rep) : rep_(std::move(rep)) {}
  const detail::GtRep& rep() const;
  bool valid() const { return rep_ != nullptr; }
  bool operator==(const GtElement& other) const { return rep().equals(other.rep()); }
  bool operator!=(const GtElement& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const detail::GtRep> rep_;
};

// Bilinear group (G1, Gt, e, P, q) behind one interface. G1 is written
// additively, Gt multiplicatively. Implementations are immutable after
// construction; every method is a pure function of its arguments, so a
// backend may be shared freely across threads.
class Backend {
 public:
  virtual ~Backend() = default;

  const GroupDescriptor& descriptor() const { return descriptor_; }
  std::shared_ptr<const mpz_class> order() const { return descriptor_.order; }

  virtual G1Element g1_identity() const = 0;
  virtual G1Element generator() const = 0;
  virtual G1Element g1_add(const G1Element& a, const G1Element& b) const = 0;
  virtual G1Element g1_neg(const G1Element& a) const = 0;
  virtual G1Element g1_mul(const G1Element& a, const Scalar& k) const = 0;
  G1Element g1_sub(const G1Element& a, const G1Element& b) const;
  bool g1_is_identity(const G1Element& a) const;

  virtual GtElement gt_identity() const = 0;
  virtual GtElement gt_mul(const GtElement& a, const GtElement& b) const = 0;
  virtual GtElement gt_exp(const GtElement& x, const Scalar& k) const = 0;
  bool gt_is_identity(const GtElement& x) const;

  // e(a, b): bilinear, symmetric, non-degenerate.
  virtual GtElement pair(const G1Element& a, const G1Element& b) const = 0;

  virtual G1Element hash_to_g1(ByteView tag, ByteView msg) const = 0;
  // Output in [1, q).
  virtual Scalar hash_to_scalar(ByteView tag, ByteView msg) const = 0;

  // Uniform over [1, q); zero is resampled. Same draw algorithm for every
  // backend so seeded streams are comparable.
  Scalar random_scalar(RandomSource& rng) const;

  Scalar scalar_from_u64(std::uint64_t v) const;
  Scalar scalar_reduce(const mpz_class& v) const;
  Bytes encode_scalar(const Scalar& s) const;         // fixed-width big-endian
  Scalar decode_scalar(ByteView bytes) const;         // rejects length/range

  virtual Bytes encode_g1(const G1Element& a) const = 0;
  virtual G1Element decode_g1(ByteView bytes) const = 0;  // rejects non-elements
  virtual Bytes encode_gt(const GtElement& x) const = 0;
  virtual GtElement decode_gt(ByteView bytes) const = 0;

 protected:
  explicit Backend(GroupDescriptor descriptor) : descriptor_(std::move(descriptor)) {}
  GroupDescriptor descriptor_;
};

// Factory over the two interchangeable implementations. Mock is test-only
// (see mock_backend.hpp) and never a default.
std::shared_ptr<const Backend> make_backend(BackendKind kind);

}  // namespace pairmps::group
