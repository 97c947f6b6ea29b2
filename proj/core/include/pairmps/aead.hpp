#pragma once

#include <string_view>

#include "pairmps/bytes.hpp"

namespace pairmps {

inline constexpr std::string_view kLabelEncKey = "PAIRMPS/enc-key/v1";
inline constexpr std::string_view kLabelNonce = "PAIRMPS/nonce/v1";
inline constexpr std::size_t kAeadKeyMaterialBytes = 32;
inline constexpr std::size_t kAeadOverhead = 16;

// Deterministic authenticated encryption: XChaCha20-Poly1305 with key and
// nonce both derived from the 32-byte session key material under distinct
// labels. Determinism is required so that every proxy independently
// computes the identical ciphertext; it is safe because the key material is
// fresh per session. NOT a general-purpose AEAD mode: reusing key material
// for two different messages would reuse the nonce.
Bytes aead_seal(ByteView plaintext, ByteView key_material);

// Throws Errc::decrypt_failed on any authentication mismatch.
Bytes aead_open(ByteView ciphertext, ByteView key_material);

}  // namespace pairmps
