#pragma once

#include <memory>

#include "pairmps/group.hpp"

namespace pairmps::group {

// Production backend: supersingular curve E: y^2 = x^3 + x over F_p with
// p = c*q - 1 = 3 (mod 4), |p| = 512 bits, q = 2^159 + 2^107 + 1 prime.
// G1 is the order-q subgroup of E(F_p); Gt is mu_q in F_p^2. The pairing is
// the modified Tate pairing through the distortion map (x, y) -> (-x, iy),
// which makes e symmetric: e(a, b) = e(b, a) for a, b in G1.
//
// Encodings: G1 compressed, 65 bytes (tag byte 0x00 infinity / 0x02 even-y /
// 0x03 odd-y, then 64-byte big-endian x); Gt 128 bytes (two 64-byte
// big-endian F_p coordinates); scalars 20 bytes big-endian. decode_g1 and
// decode_gt enforce curve/field membership and order-q subgroup membership.
std::shared_ptr<const Backend> make_ss512_backend();

}  // namespace pairmps::group
