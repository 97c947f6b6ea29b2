#pragma once

#include <cstdint>
#include <memory>

#include "pairmps/group.hpp"

namespace pairmps::group {

// Transparent desk-scale group: G1 = (Z_q, +) with P = 1, Gt = (Z_q, +)
// written multiplicatively (gt_mul is addition mod q, gt_exp is scalar
// multiplication mod q), e(a, b) = a*b mod q. Satisfies every bilinear-group
// property formally and makes protocol values hand-checkable.
//
// Cryptographically worthless — TEST/DEMO ONLY. The hash functions are
// plain modular reductions (big-endian(msg) mod q) and ignore the domain
// tag; nothing here hides anything. Construction requires this explicit
// factory; no code path selects it by default.
std::shared_ptr<const Backend> make_mock_backend(std::uint64_t q = 23);

}  // namespace pairmps::group
