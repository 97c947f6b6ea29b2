#include "pairmps/rng.hpp"

#include <sodium.h>

#include <cstring>

#include "pairmps/hashing.hpp"

namespace pairmps {

Bytes RandomSource::bytes(std::size_t len) {
  Bytes out(len);
  fill(out.data(), len);
  return out;
}

DeterministicRng::DeterministicRng(std::uint64_t seed) {
  Bytes seed_le;
  append_u64le(seed_le, seed);
  Bytes key = blake2b(32, seed_le);
  std::memcpy(key_.data(), key.data(), 32);
}

DeterministicRng::DeterministicRng(const std::array<std::uint8_t, 32>& key) : key_(key) {}

void DeterministicRng::fill(std::uint8_t* out, std::size_t len) {
  init_crypto();
  while (len > 0) {
    if (used_ == block_.size()) {
      Bytes ctr;
      append_u64le(ctr, counter_++);
      crypto_generichash(block_.data(), block_.size(), ctr.data(), ctr.size(),
                         key_.data(), key_.size());
      used_ = 0;
    }
    std::size_t take = std::min(len, block_.size() - used_);
    std::memcpy(out, block_.data() + used_, take);
    used_ += take;
    out += take;
    len -= take;
  }
}

void SystemRng::fill(std::uint8_t* out, std::size_t len) {
  init_crypto();
  randombytes_buf(out, len);
}

std::array<std::uint8_t, 32> derive_stream_key(std::uint64_t seed,
                                               std::string_view label,
                                               std::uint64_t index) {
  Bytes input;
  append_u64le(input, seed);
  append_u64le(input, label.size());
  append_bytes(input, to_bytes(label));
  append_u64le(input, index);
  Bytes key = blake2b(32, input);
  std::array<std::uint8_t, 32> out{};
  std::memcpy(out.data(), key.data(), 32);
  return out;
}

}  // namespace pairmps
