#include "pairmps/hashing.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

#include "pairmps/errors.hpp"

namespace pairmps {

void init_crypto() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) {
      throw Error(Errc::internal, "libsodium initialization failed");
    }
  });
}

Bytes blake2b(std::size_t out_len, std::initializer_list<ByteView> parts) {
  init_crypto();
  if (out_len < crypto_generichash_BYTES_MIN || out_len > crypto_generichash_BYTES_MAX) {
    throw Error(Errc::internal, "unsupported hash output length");
  }
  crypto_generichash_state state;
  crypto_generichash_init(&state, nullptr, 0, out_len);
  for (ByteView part : parts) {
    crypto_generichash_update(&state, part.data(), part.size());
  }
  Bytes out(out_len);
  crypto_generichash_final(&state, out.data(), out_len);
  return out;
}

Bytes blake2b(std::size_t out_len, ByteView data) {
  return blake2b(out_len, {data});
}

Bytes hash_frame(ByteView tag, ByteView msg, std::uint32_t counter) {
  Bytes frame;
  frame.reserve(12 + tag.size() + msg.size());
  append_u32le(frame, counter);
  append_u64le(frame, tag.size());
  append_bytes(frame, tag);
  append_bytes(frame, msg);
  return frame;
}

}  // namespace pairmps
