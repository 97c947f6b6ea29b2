#pragma once

#include <atomic>
#include <cstdint>
#include <memory>

#include "pairmps/group.hpp"

namespace pairmps::group {

struct OpCounts {
  std::uint64_t pairings = 0;
  std::uint64_t g1_muls = 0;
  std::uint64_t gt_exps = 0;

  OpCounts operator-(const OpCounts& other) const {
    return {pairings - other.pairings, g1_muls - other.g1_muls, gt_exps - other.gt_exps};
  }
  OpCounts operator+(const OpCounts& other) const {
    return {pairings + other.pairings, g1_muls + other.g1_muls, gt_exps + other.gt_exps};
  }
  bool operator==(const OpCounts& other) const = default;
};

// Pass-through backend that counts pairings, G1 scalar multiplications and
// Gt exponentiations at the interface. Counts are exact: every call
// increments, nothing is sampled. Operations performed inside the wrapped
// backend (cofactor clearing in hash_to_g1, subgroup checks in decode) do
// not route through the wrapper and are deliberately not counted — the
// counters measure protocol formulas, not backend internals.
class CountingBackend final : public Backend {
 public:
  explicit CountingBackend(std::shared_ptr<const Backend> inner);

  OpCounts counts() const;
  void reset() const;

  G1Element g1_identity() const override { return inner_->g1_identity(); }
  G1Element generator() const override { return inner_->generator(); }
  G1Element g1_add(const G1Element& a, const G1Element& b) const override {
    return inner_->g1_add(a, b);
  }
  G1Element g1_neg(const G1Element& a) const override { return inner_->g1_neg(a); }
  G1Element g1_mul(const G1Element& a, const Scalar& k) const override {
    ++g1_muls_;
    return inner_->g1_mul(a, k);
  }
  GtElement gt_identity() const override { return inner_->gt_identity(); }
  GtElement gt_mul(const GtElement& a, const GtElement& b) const override {
    return inner_->gt_mul(a, b);
  }
  GtElement gt_exp(const GtElement& x, const Scalar& k) const override {
    ++gt_exps_;
    return inner_->gt_exp(x, k);
  }
  GtElement pair(const G1Element& a, const G1Element& b) const override {
    ++pairings_;
    return inner_->pair(a, b);
  }
  G1Element hash_to_g1(ByteView tag, ByteView msg) const override {
    return inner_->hash_to_g1(tag, msg);
  }
  Scalar hash_to_scalar(ByteView tag, ByteView msg) const override {
    return inner_->hash_to_scalar(tag, msg);
  }
  Bytes encode_g1(const G1Element& a) const override { return inner_->encode_g1(a); }
  G1Element decode_g1(ByteView bytes) const override { return inner_->decode_g1(bytes); }
  Bytes encode_gt(const GtElement& x) const override { return inner_->encode_gt(x); }
  GtElement decode_gt(ByteView bytes) const override { return inner_->decode_gt(bytes); }

 private:
  std::shared_ptr<const Backend> inner_;
  mutable std::atomic<std::uint64_t> pairings_{0};
  mutable std::atomic<std::uint64_t> g1_muls_{0};
  mutable std::atomic<std::uint64_t> gt_exps_{0};
};

}  // namespace pairmps::group
