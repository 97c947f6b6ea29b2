#include "pairmps/ss512_backend.hpp"

#include <memory>
#include <string>

#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"
#include "mpz_codec.hpp"

// Supersingular curve E: y^2 = x^3 + x over F_p, p = 3 (mod 4), #E(F_p) =
// p + 1 = c*q. The order-q subgroup is G1; Gt = mu_q in F_p^2 = F_p[i],
// i^2 = -1. The distortion map (x, y) -> (-x, iy) takes G1 off itself, so
// the reduced Tate pairing e(a, b) = f_{q,a}(phi(b))^((p^2-1)/q) is
// symmetric and non-degenerate on G1 x G1. Vertical lines evaluate into
// F_p^* and are annihilated by the final exponentiation ((p^2-1)/q =
// (p-1)*c), so the Miller loop skips them.

namespace pairmps::group {
namespace {

constexpr std::size_t kFpBytes = 64;    // 512-bit p
constexpr std::size_t kG1Bytes = 1 + kFpBytes;
constexpr std::size_t kGtBytes = 2 * kFpBytes;
constexpr std::size_t kScalarBytes = 20;  // 160-bit q

// q = 2^159 + 2^107 + 1 (Solinas prime), c = 2^352 + 1484, p = c*q - 1.
constexpr const char* kOrderHex = "8000000000000800000000000000000000000001";
constexpr const char* kCofactorHex =
    "100000000000000000000000000000000000000000000000000000000000000000000000000000000000005cc";
constexpr const char* kFieldHex =
    "80000000000008000000000000000000000000010000000000000000000000000000000000000000000002e6"
    "00000000002e60000000000000000000000005cb";

constexpr std::string_view kGeneratorTag = "PAIRMPS/ss512/generator/v1";

struct Fp2 {
  mpz_class re, im;
  bool operator==(const Fp2& other) const { return re == other.re && im == other.im; }
};

struct Point {
  mpz_class x, y;
  bool infinity = true;
  bool operator==(const Point& other) const {
    if (infinity || other.infinity) return infinity == other.infinity;
    return x == other.x && y == other.y;
  }
};

struct SsG1 final : detail::G1Rep {
  Point pt;
  explicit SsG1(Point p) : pt(std::move(p)) {}
  bool equals(const detail::G1Rep& other) const override {
    auto* o = dynamic_cast<const SsG1*>(&other);
    return o != nullptr && pt == o->pt;
  }
};

struct SsGt final : detail::GtRep {
  Fp2 v;
  explicit SsGt(Fp2 value) : v(std::move(value)) {}
  bool equals(const detail::GtRep& other) const override {
    auto* o = dynamic_cast<const SsGt*>(&other);
    return o != nullptr && v == o->v;
  }
};

class Ss512Backend final : public Backend {
 public:
  explicit Ss512Backend(GroupDescriptor d)
      : Backend(std::move(d)),
        p_(kFieldHex, 16),
        q_(kOrderHex, 16),
        c_(kCofactorHex, 16),
        sqrt_exp_((p_ + 1) / 4) {
    if (p_ + 1 != c_ * q_ || p_ % 4 != 3) {
      throw Error(Errc::internal, "ss512 parameter mismatch");
    }
    generator_ = hash_point(to_bytes(kGeneratorTag), {});
    if (generator_.infinity) throw Error(Errc::internal, "ss512 generator degenerate");
    gen_handle_ = wrap(generator_);
    // Non-degeneracy (descriptor invariant): e(P, P) != 1.
    if (tate(generator_, generator_) == one()) {
      throw Error(Errc::internal, "ss512 pairing degenerate");
    }
  }

  // --- group interface ---

  G1Element g1_identity() const override { return wrap(Point{}); }
  G1Element generator() const override { return gen_handle_; }

  G1Element g1_add(const G1Element& a, const G1Element& b) const override {
    return wrap(add(point(a), point(b)));
  }
  G1Element g1_neg(const G1Element& a) const override {
    Point pt = point(a);
    if (!pt.infinity && pt.y != 0) pt.y = p_ - pt.y;
    return wrap(pt);
  }
  G1Element g1_mul(const G1Element& a, const Scalar& k) const override {
    return wrap(mul(point(a), k.value()));
  }

  GtElement gt_identity() const override { return wrap(one()); }
  GtElement gt_mul(const GtElement& a, const GtElement& b) const override {
    return wrap(fp2_mul(value(a), value(b)));
  }
  GtElement gt_exp(const GtElement& x, const Scalar& k) const override {
    return wrap(fp2_pow(value(x), k.value()));
  }

  GtElement pair(const G1Element& a, const G1Element& b) const override {
    return wrap(tate(point(a), point(b)));
  }

  G1Element hash_to_g1(ByteView tag, ByteView msg) const override {
    return wrap(hash_point(tag, msg));
  }

  Scalar hash_to_scalar(ByteView tag, ByteView msg) const override {
    for (std::uint32_t ctr = 0;; ++ctr) {
      Bytes digest = blake2b(64, hash_frame(tag, msg, ctr));
      mpz_class v = decode_mpz(digest) % q_;
      if (v != 0) return scalar_reduce(v);
    }
  }

  // --- encodings ---

  Bytes encode_g1(const G1Element& a) const override {
    const Point& pt = point(a);
    Bytes out(kG1Bytes, 0);
    if (pt.infinity) return out;
    out[0] = mpz_odd_p(pt.y.get_mpz_t()) ? 0x03 : 0x02;
    Bytes x = encode_mpz_fixed(pt.x, kFpBytes);
    std::copy(x.begin(), x.end(), out.begin() + 1);
    return out;
  }

  G1Element decode_g1(ByteView bytes) const override {
    if (bytes.size() != kG1Bytes) {
      throw Error(Errc::malformed_encoding, "G1 encoding has wrong length");
    }
    const std::uint8_t tag = bytes[0];
    ByteView xb = bytes.subspan(1);
    if (tag == 0x00) {
      for (std::uint8_t byte : xb) {
        if (byte != 0) throw Error(Errc::malformed_encoding, "invalid G1 infinity encoding");
      }
      return g1_identity();
    }
    if (tag != 0x02 && tag != 0x03) {
      throw Error(Errc::malformed_encoding, "invalid G1 tag byte");
    }
    mpz_class x = decode_mpz(xb);
    if (x >= p_) throw Error(Errc::malformed_encoding, "G1 x-coordinate out of range");
    mpz_class rhs = mod(x * x * x + x);
    mpz_class y = powm(rhs, sqrt_exp_);
    if (mod(y * y) != rhs) {
      throw Error(Errc::malformed_encoding, "G1 x-coordinate not on curve");
    }
    mpz_class even = mpz_odd_p(y.get_mpz_t()) ? mpz_class(p_ - y) : y;
    mpz_class chosen = (tag == 0x02) ? even : mod(p_ - even);
    if ((tag == 0x03) == !mpz_odd_p(chosen.get_mpz_t())) {
      throw Error(Errc::malformed_encoding, "G1 encoding has impossible parity");
    }
    Point pt{std::move(x), std::move(chosen), false};
    if (!mul(pt, q_).infinity) {
      throw Error(Errc::malformed_encoding, "G1 point outside the order-q subgroup");
    }
    return wrap(pt);
  }

  Bytes encode_gt(const GtElement& v) const override {
    const Fp2& x = value(v);
    Bytes out = encode_mpz_fixed(x.re, kFpBytes);
    Bytes im = encode_mpz_fixed(x.im, kFpBytes);
    append_bytes(out, im);
    return out;
  }

  GtElement decode_gt(ByteView bytes) const override {
    if (bytes.size() != kGtBytes) {
      throw Error(Errc::malformed_encoding, "Gt encoding has wrong length");
    }
    Fp2 v{decode_mpz(bytes.first(kFpBytes)), decode_mpz(bytes.subspan(kFpBytes))};
    if (v.re >= p_ || v.im >= p_) {
      throw Error(Errc::malformed_encoding, "Gt coordinate out of range");
    }
    if (!(fp2_pow(v, q_) == one())) {
      throw Error(Errc::malformed_encoding, "Gt element outside the order-q subgroup");
    }
    return wrap(v);
  }

 private:
  // --- handles ---

  static G1Element wrap(Point pt) { return G1Element(std::make_shared<SsG1>(std::move(pt))); }
  static GtElement wrap(Fp2 v) { return GtElement(std::make_shared<SsGt>(std::move(v))); }

  static const Point& point(const G1Element& a) {
    auto* rep = dynamic_cast<const SsG1*>(&a.rep());
    if (rep == nullptr) throw Error(Errc::internal, "G1 element from a different backend");
    return rep->pt;
  }
  static const Fp2& value(const GtElement& x) {
    auto* rep = dynamic_cast<const SsGt*>(&x.rep());
    if (rep == nullptr) throw Error(Errc::internal, "Gt element from a different backend");
    return rep->v;
  }

  // --- F_p ---

  mpz_class mod(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  mpz_class inv(const mpz_class& v) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t()) == 0) {
      throw Error(Errc::internal, "non-invertible field element");
    }
    return r;
  }
  mpz_class powm(const mpz_class& base, const mpz_class& exp) const {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  // --- F_p^2 ---

  static Fp2 one() { return Fp2{1, 0}; }

  Fp2 fp2_mul(const Fp2& a, const Fp2& b) const {
    mpz_class t0 = a.re * b.re;
    mpz_class t1 = a.im * b.im;
    mpz_class t2 = (a.re + a.im) * (b.re + b.im);
    return Fp2{mod(t0 - t1), mod(t2 - t0 - t1)};
  }
  Fp2 fp2_sqr(const Fp2& a) const {
    mpz_class t0 = (a.re - a.im) * (a.re + a.im);
    mpz_class t1 = a.re * a.im;
    return Fp2{mod(t0), mod(2 * t1)};
  }
  Fp2 fp2_conj(const Fp2& a) const { return Fp2{a.re, a.im == 0 ? mpz_class(0) : mod(p_ - a.im)}; }
  Fp2 fp2_inv(const Fp2& a) const {
    mpz_class norm_inv = inv(mod(a.re * a.re + a.im * a.im));
    return Fp2{mod(a.re * norm_inv), mod(-(a.im * norm_inv))};
  }
  Fp2 fp2_pow(const Fp2& a, const mpz_class& e) const {
    Fp2 r = one();
    if (e == 0) return r;
    const mp_bitcnt_t top = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = top; i-- > 0;) {
      r = fp2_sqr(r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = fp2_mul(r, a);
    }
    return r;
  }

  // --- E(F_p), affine ---

  Point add(const Point& a, const Point& b) const {
    if (a.infinity) return b;
    if (b.infinity) return a;
    mpz_class lambda;
    if (a.x == b.x) {
      if (mod(a.y + b.y) == 0) return Point{};
      lambda = mod((3 * a.x * a.x + 1) * inv(mod(2 * a.y)));
    } else {
      lambda = mod((b.y - a.y) * inv(mod(b.x - a.x)));
    }
    mpz_class x3 = mod(lambda * lambda - a.x - b.x);
    mpz_class y3 = mod(lambda * (a.x - x3) - a.y);
    return Point{std::move(x3), std::move(y3), false};
  }

  Point mul(const Point& a, const mpz_class& k) const {
    Point r{};
    if (a.infinity || k == 0) return r;
    const mp_bitcnt_t top = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (mp_bitcnt_t i = top; i-- > 0;) {
      r = add(r, r);
      if (mpz_tstbit(k.get_mpz_t(), i)) r = add(r, a);
    }
    return r;
  }

  bool on_curve(const Point& a) const {
    if (a.infinity) return true;
    return mod(a.y * a.y - (a.x * a.x * a.x + a.x)) == 0;
  }

  // --- pairing ---

  // Line through V (doubling) or V,P (addition), evaluated at the distorted
  // point phi(Q) = (-xq, i*yq); the value is (lambda*(xq + x0) - y0) + yq*i
  // where (x0, y0) is the point the line passes through with slope lambda.
  Fp2 tate(const Point& a, const Point& b) const {
    if (a.infinity || b.infinity) return one();
    const mpz_class& xq = b.x;
    const mpz_class& yq = b.y;
    Fp2 f = one();
    Point v = a;
    const mp_bitcnt_t top = mpz_sizeinbase(q_.get_mpz_t(), 2);
    for (mp_bitcnt_t i = top - 1; i-- > 0;) {
      f = fp2_sqr(f);
      if (!v.infinity && v.y != 0) {
        mpz_class lambda = mod((3 * v.x * v.x + 1) * inv(mod(2 * v.y)));
        f = fp2_mul(f, Fp2{mod(lambda * (xq + v.x) - v.y), yq});
      }
      v = add(v, v);
      if (mpz_tstbit(q_.get_mpz_t(), i)) {
        if (!v.infinity && v.x != a.x) {
          mpz_class lambda = mod((v.y - a.y) * inv(mod(v.x - a.x)));
          f = fp2_mul(f, Fp2{mod(lambda * (xq + a.x) - a.y), yq});
        }
        // v == +-a or infinity: vertical or constant line, killed by the
        // final exponentiation.
        v = add(v, a);
      }
    }
    // (p^2-1)/q = (p-1)*c;  f^(p-1) = conj(f)/f.
    Fp2 g = fp2_mul(fp2_conj(f), fp2_inv(f));
    return fp2_pow(g, c_);
  }

  // Try-and-increment hash to the order-q subgroup.
  Point hash_point(ByteView tag, ByteView msg) const {
    for (std::uint32_t ctr = 0;; ++ctr) {
      Bytes digest = blake2b(64, hash_frame(tag, msg, ctr));
      mpz_class x = decode_mpz(digest) % p_;
      mpz_class rhs = mod(x * x * x + x);
      mpz_class y = powm(rhs, sqrt_exp_);
      if (mod(y * y) != rhs) continue;  // non-residue; next counter
      if (mpz_odd_p(y.get_mpz_t())) y = p_ - y;
      Point candidate{std::move(x), std::move(y), false};
      Point cleared = mul(candidate, c_);
      if (!cleared.infinity) return cleared;
    }
  }

  mpz_class p_, q_, c_;
  mpz_class sqrt_exp_;
  Point generator_;
  G1Element gen_handle_;
};

}  // namespace

std::shared_ptr<const Backend> make_ss512_backend() {
  static const std::shared_ptr<const Backend> instance = [] {
    mpz_class order(kOrderHex, 16);
    GroupDescriptor d{
        .kind = BackendKind::production,
        .name = "ss512",
        .order = std::make_shared<const mpz_class>(std::move(order)),
        .scalar_bytes = kScalarBytes,
        .g1_bytes = kG1Bytes,
        .gt_bytes = kGtBytes,
    };
    return std::make_shared<const Ss512Backend>(std::move(d));
  }();
  return instance;
}

}  // namespace pairmps::group
