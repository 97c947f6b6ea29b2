#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pairmps/group.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/warrant.hpp"

// ID-based multi-proxy multi-signcryption: PKG setup and key extraction,
// warrant delegation, proxy-key derivation, two-round signcryption with a
// clerk, public verification (no secret required) and unsigncryption.

namespace pairmps::idmpms {

inline constexpr std::string_view kTagIdentity = "PAIRMPS/ID/v1";
inline constexpr std::string_view kTagH3 = "PAIRMPS/H3/v1";
inline constexpr std::string_view kTagK2 = "PAIRMPS/K2/v1";
inline constexpr std::string_view kCipherSuite = "xchacha20poly1305-blake2b32/v1";
inline constexpr std::size_t kSessionKeyBytes = 32;

struct PublicParams {
  group::BackendKind backend_kind{};
  std::string backend_name;
  group::G1Element p_pub;
  std::string cipher_suite{kCipherSuite};

  Bytes encode(const group::Backend& g) const;
  static PublicParams decode(const group::Backend& g, ByteView bytes);
  // Peeks the backend name without needing the backend yet.
  static std::string peek_backend_name(ByteView bytes);
  Bytes digest(const group::Backend& g) const;
};

// Q_ID = H1(id), S_ID = s * Q_ID. The extraction invariant
// e(S_ID, P) = e(Q_ID, P_pub) is publicly checkable.
struct UserKey {
  Identity id;
  group::G1Element q_id;
  group::G1Element s_id;  // secret
};

group::G1Element identity_point(const group::Backend& g, const Identity& id);
bool check_user_key(const group::Backend& g, const UserKey& key, const group::G1Element& p_pub);

// PKG: holder of the master secret s with P_pub = s * P.
class Pkg {
 public:
  static Pkg create(const group::Backend& g, RandomSource& rng);
  static Pkg from_master_secret(const group::Backend& g, group::Scalar s);

  const group::Scalar& master_secret() const { return s_; }
  const PublicParams& params() const { return params_; }

  UserKey extract(const group::Backend& g, const Identity& id) const;

 private:
  Pkg(group::Scalar s, PublicParams params) : s_(std::move(s)), params_(std::move(params)) {}
  group::Scalar s_;
  PublicParams params_;
};

// S_Ai = h_w * S_ID_Ai, an original signer's delegation contribution.
struct DelegationShare {
  Identity signer_id;
  group::G1Element s_ai;
  Bytes warrant_digest;
};

DelegationShare delegation_share(const group::Backend& g, const UserKey& signer,
                                 const Warrant& w, std::int64_t now);

// e(P, S_Ai) == e(P_pub, Q_Ai)^h_w, plus warrant window and membership.
bool verify_delegation_share(const group::Backend& g, const DelegationShare& share,
                             const Warrant& w, const group::G1Element& p_pub, std::int64_t now);

// Verifies every share (throws invalid_share naming the signer on failure,
// missing_share if an original signer has no share) and returns
// S_A = sum S_Ai.
group::G1Element aggregate_delegation(const group::Backend& g,
                                      std::span<const DelegationShare> shares, const Warrant& w,
                                      const group::G1Element& p_pub, std::int64_t now);

// S_pj = S_A + h_w * S_ID_pj.
struct ProxyKey {
  Identity proxy_id;
  group::G1Element s_a;
  group::G1Element s_pj;  // secret
};

ProxyKey derive_proxy_key(const group::Backend& g, const UserKey& proxy,
                          const group::G1Element& s_a, const Warrant& w);

struct Round1Broadcast {
  Identity proxy_id;
  group::GtElement k1j;  // e(P, P_pub)^t_j
  group::GtElement k2j;  // e(P_pub, Q_C)^t_j
};

// Optional within-session memo for the two round-1 pairings. The protocol
// recomputes them per proxy (each proxy is a separate party); the memo
// exists so the bench module can report the savings separately.
struct PairingMemo {
  std::optional<group::GtElement> e_p_ppub;
  std::optional<group::GtElement> e_ppub_qc;
};

// Samples t_j from Z_q^* and returns it with the broadcast. The caller
// keeps t_j private for partial_sign.
std::pair<group::Scalar, Round1Broadcast> round1(const group::Backend& g, const ProxyKey& proxy,
                                                 const Identity& receiver_id,
                                                 const group::G1Element& p_pub, RandomSource& rng,
                                                 PairingMemo* memo = nullptr);

struct SessionKeys {
  group::GtElement k1;
  Bytes k2_bytes;  // H2(prod k2j), 32 bytes of symmetric key material
};

// k1 = prod k1j, k2 = H2(prod k2j); exactly one broadcast per warrant proxy.
SessionKeys derive_session_keys(const group::Backend& g,
                                std::span<const Round1Broadcast> broadcasts, const Warrant& w);

// c = E_{k2}(m), r_p = H3(len(c) || c || k1). Deterministic: every honest
// proxy computes the identical pair.
std::pair<Bytes, group::Scalar> encrypt_and_commit(const group::Backend& g, ByteView message,
                                                   const SessionKeys& keys);

group::Scalar commitment_scalar(const group::Backend& g, ByteView ciphertext,
                                const group::GtElement& k1);

struct PartialSigncryption {
  Identity proxy_id;
  group::G1Element u_pj;  // t_j * P_pub - r_p * S_pj
};

PartialSigncryption partial_sign(const group::Backend& g, const ProxyKey& proxy,
                                 const group::Scalar& t_j, const group::Scalar& r_p,
                                 const group::G1Element& p_pub);

// Clerk-side check attributing a bad partial to its sender:
// e(u_pj, P) * e(S_A, P)^r_p * e(P_pub, Q_pj)^(h_w * r_p) == k1j.
bool verify_partial(const group::Backend& g, const PartialSigncryption& part,
                    const Round1Broadcast& bcast, const group::G1Element& s_a, const Warrant& w,
                    const group::Scalar& r_p, const group::G1Element& p_pub, std::int64_t now);

// (m_w, S, c, r_p, u_p): the transmitted multi-proxy multi-signcryption.
struct Signcryption {
  Warrant warrant;
  group::G1Element s;  // l * S_A
  Bytes c;
  group::Scalar r_p;
  group::G1Element u_p;  // sum u_pj
};

Bytes encode_signcryption(const group::Backend& g, const Signcryption& sc);
Signcryption decode_signcryption(const group::Backend& g, ByteView bytes);

// Verifies every partial against its broadcast (invalid_partial names the
// sender; missing_partial if a warrant proxy is absent), then aggregates
// u_p = sum u_pj and S = l * S_A.
Signcryption combine(const group::Backend& g, std::span<const PartialSigncryption> parts,
                     std::span<const Round1Broadcast> broadcasts, const group::G1Element& s_a,
                     const Warrant& w, ByteView ciphertext, const group::Scalar& r_p,
                     const group::G1Element& p_pub, std::int64_t now);

// Envelope payload codecs for the file-based protocol flow.
Bytes encode_delegation_share(const group::Backend& g, const DelegationShare& share);
DelegationShare decode_delegation_share(const group::Backend& g, ByteView bytes);
Bytes encode_round1(const group::Backend& g, const Round1Broadcast& bcast);
Round1Broadcast decode_round1(const group::Backend& g, ByteView bytes);
Bytes encode_partial(const group::Backend& g, const PartialSigncryption& part);
PartialSigncryption decode_partial(const group::Backend& g, ByteView bytes);

// Public half of a proxy key (S_A binds the warrant; S_pj stays in the
// keystore).
struct ProxyKeyPublic {
  Identity proxy_id;
  group::G1Element s_a;
  Bytes warrant_digest;
};
Bytes encode_proxykey_public(const group::Backend& g, const ProxyKeyPublic& pk);
ProxyKeyPublic decode_proxykey_public(const group::Backend& g, ByteView bytes);

// Third-party verification from public data only: recomputes
// k1' = e(u_p, P) * e(S, P)^r_p * e(P_pub, sum Q_pj)^(h_w * r_p), checks the
// aggregate-origin equation e(P_pub, sum Q_Ai)^(l * h_w) == e(S, P), and
// checks r_p == H3(len(c) || c || k1').
bool public_verify(const group::Backend& g, const Signcryption& sc,
                   const group::G1Element& p_pub, std::int64_t now);

// Receiver-side key material
// k2' = H2(e(u_p, Q_C) * e(S, Q_C)^r_p * e(h_w * sum Q_pj, S_ID_C)^r_p);
// the k2 recomputation on its own, also measured by the bench module.
Bytes receiver_key_material(const group::Backend& g, const Signcryption& sc,
                            const UserKey& receiver, const group::G1Element& p_pub);

// public_verify, then aead_open under receiver_key_material. Throws
// verify_failed / decrypt_failed.
Bytes unsigncrypt(const group::Backend& g, const Signcryption& sc, const UserKey& receiver,
                  const group::G1Element& p_pub, std::int64_t now);

}  // namespace pairmps::idmpms
