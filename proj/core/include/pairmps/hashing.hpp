#pragma once

#include <initializer_list>

#include "pairmps/bytes.hpp"

namespace pairmps {

// Idempotent libsodium init; called lazily by everything that hashes.
void init_crypto();

// BLAKE2b with explicit output length in [16, 64].
Bytes blake2b(std::size_t out_len, std::initializer_list<ByteView> parts);
Bytes blake2b(std::size_t out_len, ByteView data);

// LE32(counter) || LE64(|tag|) || tag || msg — the domain-separation frame
// shared by hash_to_scalar and hash_to_g1 in every backend.
Bytes hash_frame(ByteView tag, ByteView msg, std::uint32_t counter);

}  // namespace pairmps
