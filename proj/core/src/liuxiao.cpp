#include "pairmps/liuxiao.hpp"

#include <algorithm>

#include "pairmps/aead.hpp"
#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"

namespace pairmps::liuxiao {

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

Bytes commit_input(ByteView ciphertext, ByteView key_bytes) {
  Bytes input;
  append_u64le(input, ciphertext.size());
  append_bytes(input, ciphertext);
  append_bytes(input, key_bytes);
  return input;
}

const LxUserPublic& find_public(std::span<const LxUserPublic> publics, const Identity& id) {
  auto it = std::find_if(publics.begin(), publics.end(),
                         [&](const LxUserPublic& p) { return p.id == id; });
  if (it == publics.end()) {
    throw Error(Errc::missing_prerequisite, "no public key for '" + id.text() + "'");
  }
  return *it;
}

}  // namespace

LxUserKey lx_keygen(const Backend& g, Identity id, RandomSource& rng) {
  Scalar x = g.random_scalar(rng);
  G1Element y = g.g1_mul(g.generator(), x);
  return LxUserKey{std::move(id), std::move(x), std::move(y)};
}

LxUserPublic lx_public(const LxUserKey& key) {
  return LxUserPublic{key.id, key.y};
}

G1Element lx_warrant_point(const Backend& g, const Warrant& w) {
  return g.hash_to_g1(to_bytes(kTagLxWarrantG1), encode_warrant(w));
}

LxDelegationShare lx_delegation_share(const Backend& g, const LxUserKey& signer, const Warrant& w,
                                      std::int64_t now) {
  require_fresh_warrant(w, now);
  if (!warrant_lists_original(w, signer.id)) {
    throw Error(Errc::signer_not_in_warrant,
                "'" + signer.id.text() + "' is not an original signcrypter of this warrant");
  }
  return LxDelegationShare{signer.id, g.g1_mul(lx_warrant_point(g, w), signer.x)};
}

bool lx_verify_delegation_share(const Backend& g, const LxDelegationShare& share,
                                const G1Element& y_signer, const Warrant& w, std::int64_t now) {
  if (!check_validity(w, now)) return false;
  return g.pair(g.generator(), share.s_ai) == g.pair(y_signer, lx_warrant_point(g, w));
}

G1Element lx_aggregate_delegation(const Backend& g, std::span<const LxDelegationShare> shares,
                                  std::span<const LxUserPublic> originals, const Warrant& w,
                                  std::int64_t now) {
  require_fresh_warrant(w, now);
  G1Element s_a = g.g1_identity();
  for (const Identity& signer : w.original_ids) {
    auto it = std::find_if(shares.begin(), shares.end(),
                           [&](const LxDelegationShare& s) { return s.signer_id == signer; });
    if (it == shares.end()) {
      throw Error(Errc::missing_share, "no delegation share from '" + signer.text() + "'",
                  signer.text());
    }
    if (!lx_verify_delegation_share(g, *it, find_public(originals, signer).y, w, now)) {
      throw Error(Errc::invalid_share, "delegation share from '" + signer.text() + "' is invalid",
                  signer.text());
    }
    s_a = g.g1_add(s_a, it->s_ai);
  }
  return s_a;
}

LxProxyKey lx_derive_proxy_key(const Backend& g, const LxUserKey& proxy, const G1Element& s_a,
                               const Warrant& w) {
  validate_warrant(w);
  if (!warrant_lists_proxy(w, proxy.id)) {
    throw Error(Errc::proxy_not_in_warrant,
                "'" + proxy.id.text() + "' is not a proxy signcrypter of this warrant");
  }
  return LxProxyKey{proxy.id, s_a, g.g1_add(s_a, g.g1_mul(lx_warrant_point(g, w), proxy.x))};
}

std::pair<Scalar, LxRound1> lx_round1(const Backend& g, const Identity& proxy_id,
                                      const G1Element& y_receiver, RandomSource& rng,
                                      GtElement* pairing_memo) {
  Scalar t_j = g.random_scalar(rng);
  GtElement base;
  if (pairing_memo != nullptr && pairing_memo->valid()) {
    base = *pairing_memo;
  } else {
    base = g.pair(g.generator(), y_receiver);
    if (pairing_memo != nullptr) *pairing_memo = base;
  }
  return {t_j, LxRound1{proxy_id, g.gt_exp(base, t_j)}};
}

Bytes lx_session_key(const Backend& g, std::span<const LxRound1> broadcasts, const Warrant& w) {
  validate_warrant(w);
  GtElement acc = g.gt_identity();
  for (const Identity& proxy : w.proxy_ids) {
    auto it = std::find_if(broadcasts.begin(), broadcasts.end(),
                           [&](const LxRound1& b) { return b.proxy_id == proxy; });
    if (it == broadcasts.end()) {
      throw Error(Errc::missing_broadcast, "no round-1 broadcast from '" + proxy.text() + "'",
                  proxy.text());
    }
    acc = g.gt_mul(acc, it->r_pj);
  }
  Bytes input;
  append_u64le(input, kTagLxKey.size());
  append_bytes(input, to_bytes(kTagLxKey));
  append_bytes(input, g.encode_gt(acc));
  return blake2b(kLxKeyBytes, input);
}

Scalar lx_commitment_scalar(const Backend& g, ByteView ciphertext, ByteView key_bytes) {
  return g.hash_to_scalar(to_bytes(kTagLxCommit), commit_input(ciphertext, key_bytes));
}

std::pair<Bytes, Scalar> lx_encrypt_and_commit(const Backend& g, ByteView message,
                                               ByteView key_bytes) {
  Bytes c = aead_seal(message, key_bytes);
  Scalar r_p = lx_commitment_scalar(g, c, key_bytes);
  return {std::move(c), std::move(r_p)};
}

LxPartial lx_partial_sign(const Backend& g, const LxProxyKey& proxy, const Scalar& t_j,
                          const Scalar& r_p) {
  G1Element u_pj = g.g1_sub(g.g1_mul(g.generator(), t_j), g.g1_mul(proxy.s_pj, r_p));
  return LxPartial{proxy.proxy_id, std::move(u_pj)};
}

LxSigncryption lx_combine(const Backend& g, std::span<const LxPartial> parts,
                          const G1Element& s_a, const Warrant& w, ByteView ciphertext,
                          const Scalar& r_p, std::int64_t now) {
  require_fresh_warrant(w, now);
  G1Element u_p = g.g1_identity();
  for (const Identity& proxy : w.proxy_ids) {
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](const LxPartial& p) { return p.proxy_id == proxy; });
    if (it == parts.end()) {
      throw Error(Errc::missing_partial, "no partial signcryption from '" + proxy.text() + "'",
                  proxy.text());
    }
    u_p = g.g1_add(u_p, it->u_pj);
  }
  G1Element s = g.g1_mul(s_a, g.scalar_from_u64(w.proxy_ids.size()));
  return LxSigncryption{w, std::move(s), Bytes(ciphertext.begin(), ciphertext.end()), r_p,
                        std::move(u_p)};
}

Bytes encode_lx_signcryption(const Backend& g, const LxSigncryption& sc) {
  Bytes out;
  append_length_prefixed(out, encode_warrant(sc.warrant));
  append_length_prefixed(out, g.encode_g1(sc.s));
  append_length_prefixed(out, sc.c);
  append_length_prefixed(out, g.encode_scalar(sc.r_p));
  append_length_prefixed(out, g.encode_g1(sc.u_p));
  return out;
}

LxSigncryption decode_lx_signcryption(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  LxSigncryption sc;
  sc.warrant = decode_warrant(reader.read_length_prefixed());
  sc.s = g.decode_g1(reader.read_length_prefixed());
  sc.c = reader.read_length_prefixed();
  sc.r_p = g.decode_scalar(reader.read_length_prefixed());
  sc.u_p = g.decode_g1(reader.read_length_prefixed());
  reader.expect_end();
  return sc;
}

Bytes lx_receiver_key(const Backend& g, const LxSigncryption& sc, const LxUserKey& receiver,
                      std::span<const LxUserPublic> proxies) {
  GtElement acc = g.pair(sc.u_p, receiver.y);
  acc = g.gt_mul(acc, g.gt_exp(g.pair(sc.s, receiver.y), sc.r_p));
  G1Element y_sum = g.g1_identity();
  for (const Identity& proxy : sc.warrant.proxy_ids) {
    y_sum = g.g1_add(y_sum, find_public(proxies, proxy).y);
  }
  GtElement third = g.pair(lx_warrant_point(g, sc.warrant), y_sum);
  acc = g.gt_mul(acc, g.gt_exp(third, sc.r_p * receiver.x));
  Bytes input;
  append_u64le(input, kTagLxKey.size());
  append_bytes(input, to_bytes(kTagLxKey));
  append_bytes(input, g.encode_gt(acc));
  return blake2b(kLxKeyBytes, input);
}

Bytes lx_unsigncrypt(const Backend& g, const LxSigncryption& sc, const LxUserKey& receiver,
                     std::span<const LxUserPublic> proxies, std::int64_t now) {
  try {
    validate_warrant(sc.warrant);
  } catch (const Error&) {
    throw Error(Errc::verify_failed, "signcryption carries an invalid warrant");
  }
  if (!check_validity(sc.warrant, now)) {
    throw Error(Errc::verify_failed, "warrant not valid at the given time");
  }
  Bytes key = lx_receiver_key(g, sc, receiver, proxies);
  if (!(sc.r_p == lx_commitment_scalar(g, sc.c, key))) {
    throw Error(Errc::verify_failed, "commitment scalar mismatch");
  }
  return aead_open(sc.c, key);
}

LxSigncryption lx_signcrypt_round(const Backend& g, std::span<const LxProxyKey> proxies,
                                  const G1Element& y_receiver, ByteView message, const Warrant& w,
                                  RandomSource& rng, std::int64_t now) {
  require_fresh_warrant(w, now);
  std::vector<Scalar> secrets;
  std::vector<LxRound1> broadcasts;
  for (const LxProxyKey& proxy : proxies) {
    auto [t_j, bcast] = lx_round1(g, proxy.proxy_id, y_receiver, rng);
    secrets.push_back(std::move(t_j));
    broadcasts.push_back(std::move(bcast));
  }
  Bytes key = lx_session_key(g, broadcasts, w);
  auto [c, r_p] = lx_encrypt_and_commit(g, message, key);
  std::vector<LxPartial> parts;
  for (std::size_t j = 0; j < proxies.size(); ++j) {
    parts.push_back(lx_partial_sign(g, proxies[j], secrets[j], r_p));
  }
  if (proxies.empty()) throw Error(Errc::invalid_config, "no proxy keys supplied");
  return lx_combine(g, parts, proxies.front().s_a, w, c, r_p, now);
}

}  // namespace pairmps::liuxiao
