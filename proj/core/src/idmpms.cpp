#include "pairmps/idmpms.hpp"

#include <algorithm>

#include "pairmps/aead.hpp"
#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"

namespace pairmps::idmpms {

using group::Backend;
using group::G1Element;
using group::GtElement;
using group::Scalar;

namespace {

void require_fresh_warrant(const Warrant& w, std::int64_t now) {
  validate_warrant(w);
  if (!check_validity(w, now)) {
    throw Error(Errc::invalid_warrant, "warrant not valid at the given time");
  }
}

G1Element sum_identity_points(const Backend& g, const std::vector<Identity>& ids) {
  G1Element acc = g.g1_identity();
  for (const Identity& id : ids) acc = g.g1_add(acc, identity_point(g, id));
  return acc;
}

Bytes h3_input(ByteView ciphertext, const Bytes& k1_encoding) {
  Bytes input;
  append_u64le(input, ciphertext.size());
  append_bytes(input, ciphertext);
  append_bytes(input, k1_encoding);
  return input;
}

}  // namespace

// --- public params ---

Bytes PublicParams::encode(const group::Backend& g) const {
  Bytes out;
  append_length_prefixed(out, to_bytes(backend_name));
  append_length_prefixed(out, g.encode_g1(g.generator()));
  append_length_prefixed(out, g.encode_g1(p_pub));
  append_length_prefixed(out, to_bytes(cipher_suite));
  return out;
}

PublicParams PublicParams::decode(const group::Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  PublicParams params;
  params.backend_name = to_string(reader.read_length_prefixed());
  if (params.backend_name != g.descriptor().name) {
    throw Error(Errc::invalid_config, "params were produced by backend '" + params.backend_name +
                                          "', not '" + g.descriptor().name + "'");
  }
  params.backend_kind = g.descriptor().kind;
  G1Element generator = g.decode_g1(reader.read_length_prefixed());
  if (generator != g.generator()) {
    throw Error(Errc::malformed_encoding, "params generator mismatch");
  }
  params.p_pub = g.decode_g1(reader.read_length_prefixed());
  params.cipher_suite = to_string(reader.read_length_prefixed());
  if (params.cipher_suite != kCipherSuite) {
    throw Error(Errc::invalid_config, "unsupported cipher suite " + params.cipher_suite);
  }
  reader.expect_end();
  return params;
}

std::string PublicParams::peek_backend_name(ByteView bytes) {
  return to_string(ByteReader(bytes).read_length_prefixed());
}

Bytes PublicParams::digest(const group::Backend& g) const {
  return blake2b(32, encode(g));
}

// --- keys ---

G1Element identity_point(const Backend& g, const Identity& id) {
  return g.hash_to_g1(to_bytes(kTagIdentity), id.bytes());
}

bool check_user_key(const Backend& g, const UserKey& key, const G1Element& p_pub) {
  if (key.q_id != identity_point(g, key.id)) return false;
  return g.pair(key.s_id, g.generator()) == g.pair(key.q_id, p_pub);
}

Pkg Pkg::create(const Backend& g, RandomSource& rng) {
  return from_master_secret(g, g.random_scalar(rng));
}

Pkg Pkg::from_master_secret(const Backend& g, Scalar s) {
  PublicParams params;
  params.backend_kind = g.descriptor().kind;
  params.backend_name = g.descriptor().name;
  params.p_pub = g.g1_mul(g.generator(), s);
  return Pkg(std::move(s), std::move(params));
}

UserKey Pkg::extract(const Backend& g, const Identity& id) const {
  G1Element q_id = identity_point(g, id);
  return UserKey{id, q_id, g.g1_mul(q_id, s_)};
}

// --- delegation ---

DelegationShare delegation_share(const Backend& g, const UserKey& signer, const Warrant& w,
                                 std::int64_t now) {
  require_fresh_warrant(w, now);
  if (!warrant_lists_original(w, signer.id)) {
    throw Error(Errc::signer_not_in_warrant,
                "'" + signer.id.text() + "' is not an original signcrypter of this warrant");
  }
  Scalar h_w = warrant_scalar(g, w);
  return DelegationShare{signer.id, g.g1_mul(signer.s_id, h_w), warrant_digest(w)};
}

bool verify_delegation_share(const Backend& g, const DelegationShare& share, const Warrant& w,
                             const G1Element& p_pub, std::int64_t now) {
  if (!warrant_lists_original(w, share.signer_id)) {
    throw Error(Errc::signer_not_in_warrant,
                "'" + share.signer_id.text() + "' is not an original signcrypter of this warrant");
  }
  if (!check_validity(w, now)) return false;
  if (share.warrant_digest != warrant_digest(w)) return false;
  Scalar h_w = warrant_scalar(g, w);
  GtElement lhs = g.pair(g.generator(), share.s_ai);
  GtElement rhs = g.gt_exp(g.pair(p_pub, identity_point(g, share.signer_id)), h_w);
  return lhs == rhs;
}

G1Element aggregate_delegation(const Backend& g, std::span<const DelegationShare> shares,
                               const Warrant& w, const G1Element& p_pub, std::int64_t now) {
  require_fresh_warrant(w, now);
  G1Element s_a = g.g1_identity();
  for (const Identity& signer : w.original_ids) {
    auto it = std::find_if(shares.begin(), shares.end(),
                           [&](const DelegationShare& s) { return s.signer_id == signer; });
    if (it == shares.end()) {
      throw Error(Errc::missing_share, "no delegation share from '" + signer.text() + "'",
                  signer.text());
    }
    if (!verify_delegation_share(g, *it, w, p_pub, now)) {
      throw Error(Errc::invalid_share, "delegation share from '" + signer.text() + "' is invalid",
                  signer.text());
    }
    s_a = g.g1_add(s_a, it->s_ai);
  }
  return s_a;
}

ProxyKey derive_proxy_key(const Backend& g, const UserKey& proxy, const G1Element& s_a,
                          const Warrant& w) {
  validate_warrant(w);
  if (!warrant_lists_proxy(w, proxy.id)) {
    throw Error(Errc::proxy_not_in_warrant,
                "'" + proxy.id.text() + "' is not a proxy signcrypter of this warrant");
  }
  Scalar h_w = warrant_scalar(g, w);
  return ProxyKey{proxy.id, s_a, g.g1_add(s_a, g.g1_mul(proxy.s_id, h_w))};
}

// --- signcryption generation ---

std::pair<Scalar, Round1Broadcast> round1(const Backend& g, const ProxyKey& proxy,
                                          const Identity& receiver_id, const G1Element& p_pub,
                                          RandomSource& rng, PairingMemo* memo) {
  Scalar t_j = g.random_scalar(rng);
  GtElement base1 = memo != nullptr && memo->e_p_ppub ? *memo->e_p_ppub
                                                      : g.pair(g.generator(), p_pub);
  GtElement base2 = memo != nullptr && memo->e_ppub_qc
                        ? *memo->e_ppub_qc
                        : g.pair(p_pub, identity_point(g, receiver_id));
  if (memo != nullptr) {
    memo->e_p_ppub = base1;
    memo->e_ppub_qc = base2;
  }
  Round1Broadcast bcast{proxy.proxy_id, g.gt_exp(base1, t_j), g.gt_exp(base2, t_j)};
  return {std::move(t_j), std::move(bcast)};
}

SessionKeys derive_session_keys(const Backend& g, std::span<const Round1Broadcast> broadcasts,
                                const Warrant& w) {
  validate_warrant(w);
  GtElement k1 = g.gt_identity();
  GtElement k2_acc = g.gt_identity();
  for (const Identity& proxy : w.proxy_ids) {
    auto it = std::find_if(broadcasts.begin(), broadcasts.end(),
                           [&](const Round1Broadcast& b) { return b.proxy_id == proxy; });
    if (it == broadcasts.end()) {
      throw Error(Errc::missing_broadcast, "no round-1 broadcast from '" + proxy.text() + "'",
                  proxy.text());
    }
    k1 = g.gt_mul(k1, it->k1j);
    k2_acc = g.gt_mul(k2_acc, it->k2j);
  }
  Bytes k2_input;
  append_u64le(k2_input, kTagK2.size());
  append_bytes(k2_input, to_bytes(kTagK2));
  append_bytes(k2_input, g.encode_gt(k2_acc));
  return SessionKeys{std::move(k1), blake2b(kSessionKeyBytes, k2_input)};
}

Scalar commitment_scalar(const Backend& g, ByteView ciphertext, const GtElement& k1) {
  return g.hash_to_scalar(to_bytes(kTagH3), h3_input(ciphertext, g.encode_gt(k1)));
}

std::pair<Bytes, Scalar> encrypt_and_commit(const Backend& g, ByteView message,
                                            const SessionKeys& keys) {
  Bytes c = aead_seal(message, keys.k2_bytes);
  Scalar r_p = commitment_scalar(g, c, keys.k1);
  return {std::move(c), std::move(r_p)};
}

PartialSigncryption partial_sign(const Backend& g, const ProxyKey& proxy, const Scalar& t_j,
                                 const Scalar& r_p, const G1Element& p_pub) {
  G1Element u_pj = g.g1_sub(g.g1_mul(p_pub, t_j), g.g1_mul(proxy.s_pj, r_p));
  return PartialSigncryption{proxy.proxy_id, std::move(u_pj)};
}

bool verify_partial(const Backend& g, const PartialSigncryption& part,
                    const Round1Broadcast& bcast, const G1Element& s_a, const Warrant& w,
                    const Scalar& r_p, const G1Element& p_pub, std::int64_t now) {
  if (part.proxy_id != bcast.proxy_id) {
    throw Error(Errc::invalid_partial, "partial and broadcast are from different proxies",
                part.proxy_id.text());
  }
  if (!warrant_lists_proxy(w, part.proxy_id)) {
    throw Error(Errc::proxy_not_in_warrant,
                "'" + part.proxy_id.text() + "' is not a proxy signcrypter of this warrant");
  }
  if (!check_validity(w, now)) return false;
  Scalar h_w = warrant_scalar(g, w);
  GtElement lhs = g.pair(part.u_pj, g.generator());
  lhs = g.gt_mul(lhs, g.gt_exp(g.pair(s_a, g.generator()), r_p));
  GtElement key_side = g.pair(p_pub, identity_point(g, part.proxy_id));
  lhs = g.gt_mul(lhs, g.gt_exp(key_side, h_w * r_p));
  return lhs == bcast.k1j;
}

Signcryption combine(const Backend& g, std::span<const PartialSigncryption> parts,
                     std::span<const Round1Broadcast> broadcasts, const G1Element& s_a,
                     const Warrant& w, ByteView ciphertext, const Scalar& r_p,
                     const G1Element& p_pub, std::int64_t now) {
  require_fresh_warrant(w, now);
  G1Element u_p = g.g1_identity();
  for (const Identity& proxy : w.proxy_ids) {
    auto part = std::find_if(parts.begin(), parts.end(),
                             [&](const PartialSigncryption& p) { return p.proxy_id == proxy; });
    if (part == parts.end()) {
      throw Error(Errc::missing_partial, "no partial signcryption from '" + proxy.text() + "'",
                  proxy.text());
    }
    auto bcast = std::find_if(broadcasts.begin(), broadcasts.end(),
                              [&](const Round1Broadcast& b) { return b.proxy_id == proxy; });
    if (bcast == broadcasts.end()) {
      throw Error(Errc::missing_broadcast, "no round-1 broadcast from '" + proxy.text() + "'",
                  proxy.text());
    }
    if (!verify_partial(g, *part, *bcast, s_a, w, r_p, p_pub, now)) {
      throw Error(Errc::invalid_partial,
                  "partial signcryption from '" + proxy.text() + "' is invalid", proxy.text());
    }
    u_p = g.g1_add(u_p, part->u_pj);
  }
  G1Element s = g.g1_mul(s_a, g.scalar_from_u64(w.proxy_ids.size()));
  return Signcryption{w, std::move(s), Bytes(ciphertext.begin(), ciphertext.end()), r_p,
                      std::move(u_p)};
}

// --- wire form ---

Bytes encode_signcryption(const Backend& g, const Signcryption& sc) {
  Bytes out;
  append_length_prefixed(out, encode_warrant(sc.warrant));
  append_length_prefixed(out, g.encode_g1(sc.s));
  append_length_prefixed(out, sc.c);
  append_length_prefixed(out, g.encode_scalar(sc.r_p));
  append_length_prefixed(out, g.encode_g1(sc.u_p));
  return out;
}

Signcryption decode_signcryption(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Signcryption sc;
  sc.warrant = decode_warrant(reader.read_length_prefixed());
  sc.s = g.decode_g1(reader.read_length_prefixed());
  sc.c = reader.read_length_prefixed();
  sc.r_p = g.decode_scalar(reader.read_length_prefixed());
  sc.u_p = g.decode_g1(reader.read_length_prefixed());
  reader.expect_end();
  return sc;
}

Bytes encode_delegation_share(const Backend& g, const DelegationShare& share) {
  Bytes out;
  append_length_prefixed(out, share.signer_id.bytes());
  append_length_prefixed(out, g.encode_g1(share.s_ai));
  append_length_prefixed(out, share.warrant_digest);
  return out;
}

DelegationShare decode_delegation_share(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Identity signer(to_string(reader.read_length_prefixed()));
  G1Element s_ai = g.decode_g1(reader.read_length_prefixed());
  Bytes digest = reader.read_length_prefixed();
  reader.expect_end();
  return DelegationShare{std::move(signer), std::move(s_ai), std::move(digest)};
}

Bytes encode_round1(const Backend& g, const Round1Broadcast& bcast) {
  Bytes out;
  append_length_prefixed(out, bcast.proxy_id.bytes());
  append_length_prefixed(out, g.encode_gt(bcast.k1j));
  append_length_prefixed(out, g.encode_gt(bcast.k2j));
  return out;
}

Round1Broadcast decode_round1(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Identity proxy(to_string(reader.read_length_prefixed()));
  GtElement k1j = g.decode_gt(reader.read_length_prefixed());
  GtElement k2j = g.decode_gt(reader.read_length_prefixed());
  reader.expect_end();
  return Round1Broadcast{std::move(proxy), std::move(k1j), std::move(k2j)};
}

Bytes encode_partial(const Backend& g, const PartialSigncryption& part) {
  Bytes out;
  append_length_prefixed(out, part.proxy_id.bytes());
  append_length_prefixed(out, g.encode_g1(part.u_pj));
  return out;
}

PartialSigncryption decode_partial(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Identity proxy(to_string(reader.read_length_prefixed()));
  G1Element u_pj = g.decode_g1(reader.read_length_prefixed());
  reader.expect_end();
  return PartialSigncryption{std::move(proxy), std::move(u_pj)};
}

Bytes encode_proxykey_public(const Backend& g, const ProxyKeyPublic& pk) {
  Bytes out;
  append_length_prefixed(out, pk.proxy_id.bytes());
  append_length_prefixed(out, g.encode_g1(pk.s_a));
  append_length_prefixed(out, pk.warrant_digest);
  return out;
}

ProxyKeyPublic decode_proxykey_public(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Identity proxy(to_string(reader.read_length_prefixed()));
  G1Element s_a = g.decode_g1(reader.read_length_prefixed());
  Bytes digest = reader.read_length_prefixed();
  reader.expect_end();
  return ProxyKeyPublic{std::move(proxy), std::move(s_a), std::move(digest)};
}

// --- verification / unsigncryption ---

bool public_verify(const Backend& g, const Signcryption& sc, const G1Element& p_pub,
                   std::int64_t now) {
  try {
    validate_warrant(sc.warrant);
  } catch (const Error&) {
    return false;
  }
  if (!check_validity(sc.warrant, now)) return false;
  if (sc.r_p.is_zero()) return false;

  const Scalar h_w = warrant_scalar(g, sc.warrant);
  const Scalar l = g.scalar_from_u64(sc.warrant.proxy_ids.size());

  // k1' = e(u_p, P) * e(S, P)^r_p * e(P_pub, sum Q_pj)^(h_w r_p)
  GtElement e_s_p = g.pair(sc.s, g.generator());
  GtElement k1 = g.pair(sc.u_p, g.generator());
  k1 = g.gt_mul(k1, g.gt_exp(e_s_p, sc.r_p));
  G1Element q_proxies = sum_identity_points(g, sc.warrant.proxy_ids);
  k1 = g.gt_mul(k1, g.gt_exp(g.pair(p_pub, q_proxies), h_w * sc.r_p));

  // Aggregate-origin consistency: S must stem from the warrant's original
  // signers, e(P_pub, sum Q_Ai)^(l h_w) == e(S, P). The tuple carries S
  // unauthenticated; without this check a forger could swap in a malformed
  // S and compensate inside u_p.
  G1Element q_originals = sum_identity_points(g, sc.warrant.original_ids);
  if (g.gt_exp(g.pair(p_pub, q_originals), l * h_w) != e_s_p) return false;

  return sc.r_p == commitment_scalar(g, sc.c, k1);
}

Bytes receiver_key_material(const Backend& g, const Signcryption& sc, const UserKey& receiver,
                            const G1Element& p_pub) {
  (void)p_pub;  // the k2 path needs no public key beyond the warrant hashes
  const Scalar h_w = warrant_scalar(g, sc.warrant);

  // k2' = H2( e(u_p, Q_C) * e(S, Q_C)^r_p * e(h_w sum Q_pj, S_ID_C)^r_p )
  GtElement k2_acc = g.pair(sc.u_p, receiver.q_id);
  k2_acc = g.gt_mul(k2_acc, g.gt_exp(g.pair(sc.s, receiver.q_id), sc.r_p));
  G1Element q_proxies = sum_identity_points(g, sc.warrant.proxy_ids);
  GtElement receiver_side = g.pair(g.g1_mul(q_proxies, h_w), receiver.s_id);
  k2_acc = g.gt_mul(k2_acc, g.gt_exp(receiver_side, sc.r_p));

  Bytes k2_input;
  append_u64le(k2_input, kTagK2.size());
  append_bytes(k2_input, to_bytes(kTagK2));
  append_bytes(k2_input, g.encode_gt(k2_acc));
  return blake2b(kSessionKeyBytes, k2_input);
}

Bytes unsigncrypt(const Backend& g, const Signcryption& sc, const UserKey& receiver,
                  const G1Element& p_pub, std::int64_t now) {
  if (!public_verify(g, sc, p_pub, now)) {
    throw Error(Errc::verify_failed, "signcryption fails public verification");
  }
  return aead_open(sc.c, receiver_key_material(g, sc, receiver, p_pub));
}

}  // namespace pairmps::idmpms
