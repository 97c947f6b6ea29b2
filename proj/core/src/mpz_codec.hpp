#pragma once

#include <gmpxx.h>

#include "pairmps/bytes.hpp"
#include "pairmps/errors.hpp"

namespace pairmps::group {

// Fixed-width big-endian mpz codec shared by the backends.
inline Bytes encode_mpz_fixed(const mpz_class& v, std::size_t width) {
  Bytes out(width, 0);
  if (v == 0) return out;
  const std::size_t needed = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (needed > width) throw Error(Errc::internal, "value too large for fixed width");
  std::size_t count = 0;
  mpz_export(out.data() + (width - needed), &count, 1, 1, 0, 0, v.get_mpz_t());
  return out;
}

inline mpz_class decode_mpz(ByteView bytes) {
  mpz_class v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
  }
  return v;
}

}  // namespace pairmps::group
