#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "pairmps/bytes.hpp"

namespace pairmps {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::uint8_t* out, std::size_t len) = 0;
  Bytes bytes(std::size_t len);
};

// BLAKE2b counter stream keyed by a 32-byte key. The stream depends only on
// the key, so a given seed reproduces the same draws on every platform.
class DeterministicRng final : public RandomSource {
 public:
  explicit DeterministicRng(std::uint64_t seed);
  explicit DeterministicRng(const std::array<std::uint8_t, 32>& key);
  void fill(std::uint8_t* out, std::size_t len) override;

 private:
  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 64> block_{};
  std::uint64_t counter_ = 0;
  std::size_t used_ = 64;  // forces refill on first draw
};

class SystemRng final : public RandomSource {
 public:
  void fill(std::uint8_t* out, std::size_t len) override;
};

// Stream key for one actor/step of a seeded run. Separate processes that
// derive the same (label, index) get byte-identical streams, which is what
// makes the file-based CLI run reproduce the in-memory harness.
std::array<std::uint8_t, 32> derive_stream_key(std::uint64_t seed,
                                               std::string_view label,
                                               std::uint64_t index);

}  // namespace pairmps
