#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pairmps/group.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/warrant.hpp"

// Liu-Xiao multi-proxy multi-signcryption baseline: certificate-style keys
// (x, y = x*P), no PKG. Kept for functional comparison with the ID-based
// scheme; its defining limitation is that verification is only possible
// inside unsigncryption, with the receiver's secret x_c. There is no public
// verification entry point — by construction, not omission.

namespace pairmps::liuxiao {

inline constexpr std::string_view kTagLxWarrantG1 = "PAIRMPS/LX/WAR/v1";  // H2: {0,1}* -> G1
inline constexpr std::string_view kTagLxCommit = "PAIRMPS/LX/H1/v1";      // H1: {0,1}* -> Zq*
inline constexpr std::string_view kTagLxKey = "PAIRMPS/LX/H3/v1";         // H3: G2 -> {0,1}^n
inline constexpr std::size_t kLxKeyBytes = 32;

struct LxUserKey {
  Identity id;
  group::Scalar x;      // secret
  group::G1Element y;   // x * P
};

struct LxUserPublic {
  Identity id;
  group::G1Element y;
};

LxUserKey lx_keygen(const group::Backend& g, Identity id, RandomSource& rng);
LxUserPublic lx_public(const LxUserKey& key);

// H2(m_w), the warrant point used by the delegation equations.
group::G1Element lx_warrant_point(const group::Backend& g, const Warrant& w);

struct LxDelegationShare {
  Identity signer_id;
  group::G1Element s_ai;  // x_ai * H2(m_w)
};

LxDelegationShare lx_delegation_share(const group::Backend& g, const LxUserKey& signer,
                                      const Warrant& w, std::int64_t now);

// e(P, S_ai) == e(y_ai, H2(m_w)).
bool lx_verify_delegation_share(const group::Backend& g, const LxDelegationShare& share,
                                const group::G1Element& y_signer, const Warrant& w,
                                std::int64_t now);

group::G1Element lx_aggregate_delegation(const group::Backend& g,
                                         std::span<const LxDelegationShare> shares,
                                         std::span<const LxUserPublic> originals, const Warrant& w,
                                         std::int64_t now);

struct LxProxyKey {
  Identity proxy_id;
  group::G1Element s_a;
  group::G1Element s_pj;  // S_A + x_pj * H2(m_w), secret
};

LxProxyKey lx_derive_proxy_key(const group::Backend& g, const LxUserKey& proxy,
                               const group::G1Element& s_a, const Warrant& w);

struct LxRound1 {
  Identity proxy_id;
  group::GtElement r_pj;  // e(P, y_c)^t_j
};

std::pair<group::Scalar, LxRound1> lx_round1(const group::Backend& g, const Identity& proxy_id,
                                             const group::G1Element& y_receiver, RandomSource& rng,
                                             group::GtElement* pairing_memo = nullptr);

// k = H3(prod r_pj): 32 bytes of key material; one broadcast per proxy.
Bytes lx_session_key(const group::Backend& g, std::span<const LxRound1> broadcasts,
                     const Warrant& w);

// c = E_k(m), r_p = H1(len(c) || c || k).
std::pair<Bytes, group::Scalar> lx_encrypt_and_commit(const group::Backend& g, ByteView message,
                                                      ByteView key_bytes);

group::Scalar lx_commitment_scalar(const group::Backend& g, ByteView ciphertext,
                                   ByteView key_bytes);

struct LxPartial {
  Identity proxy_id;
  group::G1Element u_pj;  // t_j * P - r_p * S_pj
};

LxPartial lx_partial_sign(const group::Backend& g, const LxProxyKey& proxy,
                          const group::Scalar& t_j, const group::Scalar& r_p);

struct LxSigncryption {
  Warrant warrant;
  group::G1Element s;  // l * S_A
  Bytes c;
  group::Scalar r_p;
  group::G1Element u_p;
};

// The clerk can only check presence here: the scheme has no per-partial
// verification equation, so bad partials travel to the receiver.
LxSigncryption lx_combine(const group::Backend& g, std::span<const LxPartial> parts,
                          const group::G1Element& s_a, const Warrant& w, ByteView ciphertext,
                          const group::Scalar& r_p, std::int64_t now);

Bytes encode_lx_signcryption(const group::Backend& g, const LxSigncryption& sc);
LxSigncryption decode_lx_signcryption(const group::Backend& g, ByteView bytes);

// Receiver-side key recomputation
// k' = H3( e(u_p, y_c) * e(S, y_c)^r_p * e(H2(m_w), sum y_pj)^(r_p * x_c) ),
// needed by unsigncryption and by the bench module.
Bytes lx_receiver_key(const group::Backend& g, const LxSigncryption& sc,
                      const LxUserKey& receiver, std::span<const LxUserPublic> proxies);

// Accepts iff r_p == H1(len(c) || c || k'); then D_k(c). Requires x_c.
Bytes lx_unsigncrypt(const group::Backend& g, const LxSigncryption& sc, const LxUserKey& receiver,
                     std::span<const LxUserPublic> proxies, std::int64_t now);

// Composite generation phase: round 1 broadcasts, session key, commitment,
// partials, combine. Proxy keys must already be derived.
LxSigncryption lx_signcrypt_round(const group::Backend& g, std::span<const LxProxyKey> proxies,
                                  const group::G1Element& y_receiver, ByteView message,
                                  const Warrant& w, RandomSource& rng, std::int64_t now);

}  // namespace pairmps::liuxiao
