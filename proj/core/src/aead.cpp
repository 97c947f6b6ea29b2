#include "pairmps/aead.hpp"

#include <sodium.h>

#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"

namespace pairmps {

namespace {

void derive(ByteView key_material, std::string_view label, std::uint8_t* out, std::size_t len) {
  if (key_material.size() != kAeadKeyMaterialBytes) {
    throw Error(Errc::internal, "AEAD key material must be 32 bytes");
  }
  Bytes input;
  append_u64le(input, label.size());
  append_bytes(input, to_bytes(label));
  append_bytes(input, key_material);
  Bytes digest = blake2b(len, input);
  std::copy(digest.begin(), digest.end(), out);
}

}  // namespace

Bytes aead_seal(ByteView plaintext, ByteView key_material) {
  init_crypto();
  std::uint8_t key[crypto_aead_xchacha20poly1305_ietf_KEYBYTES];
  std::uint8_t nonce[crypto_aead_xchacha20poly1305_ietf_NPUBBYTES];
  derive(key_material, kLabelEncKey, key, sizeof(key));
  derive(key_material, kLabelNonce, nonce, sizeof(nonce));

  Bytes out(plaintext.size() + crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long out_len = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(out.data(), &out_len, plaintext.data(),
                                             plaintext.size(), nullptr, 0, nullptr, nonce, key);
  out.resize(out_len);
  return out;
}

Bytes aead_open(ByteView ciphertext, ByteView key_material) {
  init_crypto();
  if (ciphertext.size() < crypto_aead_xchacha20poly1305_ietf_ABYTES) {
    throw Error(Errc::decrypt_failed, "ciphertext shorter than authentication tag");
  }
  std::uint8_t key[crypto_aead_xchacha20poly1305_ietf_KEYBYTES];
  std::uint8_t nonce[crypto_aead_xchacha20poly1305_ietf_NPUBBYTES];
  derive(key_material, kLabelEncKey, key, sizeof(key));
  derive(key_material, kLabelNonce, nonce, sizeof(nonce));

  Bytes out(ciphertext.size() - crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long out_len = 0;
  if (crypto_aead_xchacha20poly1305_ietf_decrypt(out.data(), &out_len, nullptr, ciphertext.data(),
                                                 ciphertext.size(), nullptr, 0, nonce, key) != 0) {
    throw Error(Errc::decrypt_failed, "authentication tag mismatch");
  }
  out.resize(out_len);
  return out;
}

}  // namespace pairmps
