#include <gmpxx.h>

#include "doctest.h"

#include "pairmps/errors.hpp"
#include "pairmps/idmpms.hpp"
#include "pairmps/mock_backend.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/ss512_backend.hpp"

using namespace pairmps;
using group::Backend;
using group::G1Element;
using group::GtElement;
using group::Scalar;

namespace {

constexpr std::int64_t kNow = 1500;

struct HonestRun {
  Warrant warrant;
  idmpms::Pkg pkg;
  G1Element p_pub;
  idmpms::UserKey receiver;
  G1Element s_a;
  std::vector<idmpms::ProxyKey> proxy_keys;
  std::vector<Scalar> secrets;
  std::vector<idmpms::Round1Broadcast> broadcasts;
  idmpms::SessionKeys keys;
  idmpms::Signcryption sc;
};

Warrant make_warrant(std::size_t n, std::size_t l, RandomSource& rng, const std::string& salt) {
  Warrant w;
  for (std::size_t i = 0; i < n; ++i) {
    w.original_ids.push_back(Identity("orig-" + std::to_string(i) + "-" + salt + "@t"));
  }
  for (std::size_t j = 0; j < l; ++j) {
    w.proxy_ids.push_back(Identity("proxy-" + std::to_string(j) + "-" + salt + "@t"));
  }
  w.scope = to_bytes("scope-" + salt);
  w.valid_from = 1000;
  w.valid_to = 2000;
  rng.fill(w.serial.data(), w.serial.size());
  return w;
}

HonestRun honest_run(const Backend& g, std::size_t n, std::size_t l, RandomSource& rng,
                     ByteView message, const std::string& salt = "x") {
  Warrant w = make_warrant(n, l, rng, salt);
  idmpms::Pkg pkg = idmpms::Pkg::create(g, rng);
  G1Element p_pub = pkg.params().p_pub;
  idmpms::UserKey receiver = pkg.extract(g, Identity("receiver-" + salt + "@t"));

  std::vector<idmpms::DelegationShare> shares;
  for (const Identity& id : w.original_ids) {
    shares.push_back(idmpms::delegation_share(g, pkg.extract(g, id), w, kNow));
  }
  G1Element s_a = idmpms::aggregate_delegation(g, shares, w, p_pub, kNow);

  std::vector<idmpms::ProxyKey> proxy_keys;
  for (const Identity& id : w.proxy_ids) {
    proxy_keys.push_back(idmpms::derive_proxy_key(g, pkg.extract(g, id), s_a, w));
  }
  std::vector<Scalar> secrets;
  std::vector<idmpms::Round1Broadcast> broadcasts;
  for (const idmpms::ProxyKey& pk : proxy_keys) {
    auto [t, b] = idmpms::round1(g, pk, receiver.id, p_pub, rng);
    secrets.push_back(t);
    broadcasts.push_back(b);
  }
  idmpms::SessionKeys keys = idmpms::derive_session_keys(g, broadcasts, w);
  auto [c, r_p] = idmpms::encrypt_and_commit(g, message, keys);
  std::vector<idmpms::PartialSigncryption> parts;
  for (std::size_t j = 0; j < proxy_keys.size(); ++j) {
    parts.push_back(idmpms::partial_sign(g, proxy_keys[j], secrets[j], r_p, p_pub));
  }
  idmpms::Signcryption sc = idmpms::combine(g, parts, broadcasts, s_a, w, c, r_p, p_pub, kNow);
  return HonestRun{std::move(w), std::move(pkg), std::move(p_pub), std::move(receiver),
                   std::move(s_a), std::move(proxy_keys), std::move(secrets),
                   std::move(broadcasts), std::move(keys), std::move(sc)};
}

// The two §-style verifiability identities, checked element-exact.
void check_identities(const Backend& g, const HonestRun& run) {
  const Scalar h_w = warrant_scalar(g, run.warrant);
  G1Element q_proxies = g.g1_identity();
  for (const Identity& id : run.warrant.proxy_ids) {
    q_proxies = g.g1_add(q_proxies, idmpms::identity_point(g, id));
  }

  // k1 identity: e(u_p, P) e(S, P)^r_p e(P_pub, sum Q_pj)^(h_w r_p) == prod k1j
  GtElement k1 = g.pair(run.sc.u_p, g.generator());
  k1 = g.gt_mul(k1, g.gt_exp(g.pair(run.sc.s, g.generator()), run.sc.r_p));
  k1 = g.gt_mul(k1, g.gt_exp(g.pair(run.p_pub, q_proxies), h_w * run.sc.r_p));
  GtElement k1_bcast = g.gt_identity();
  for (const auto& b : run.broadcasts) k1_bcast = g.gt_mul(k1_bcast, b.k1j);
  CHECK(k1 == k1_bcast);

  // k2 identity: e(u_p, Q_C) e(S, Q_C)^r_p e(h_w sum Q_pj, S_C)^r_p == prod k2j
  GtElement k2 = g.pair(run.sc.u_p, run.receiver.q_id);
  k2 = g.gt_mul(k2, g.gt_exp(g.pair(run.sc.s, run.receiver.q_id), run.sc.r_p));
  k2 = g.gt_mul(k2, g.gt_exp(g.pair(g.g1_mul(q_proxies, h_w), run.receiver.s_id), run.sc.r_p));
  GtElement k2_bcast = g.gt_identity();
  for (const auto& b : run.broadcasts) k2_bcast = g.gt_mul(k2_bcast, b.k2j);
  CHECK(k2 == k2_bcast);
}

}  // namespace

TEST_CASE("idmpms: extraction invariant holds for 50 random ids on both backends") {
  for (auto backend : {group::make_mock_backend(), group::make_ss512_backend()}) {
    const Backend& g = *backend;
    DeterministicRng rng(21);
    idmpms::Pkg pkg = idmpms::Pkg::create(g, rng);
    for (int i = 0; i < 50; ++i) {
      Identity id("user-" + hex_encode(rng.bytes(6)) + "@example.com");
      idmpms::UserKey key = pkg.extract(g, id);
      CHECK(idmpms::check_user_key(g, key, pkg.params().p_pub));
    }
  }
}

TEST_CASE("idmpms: setup ties P_pub to the master secret") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(33);
  idmpms::Pkg pkg = idmpms::Pkg::create(g, rng);
  CHECK(g.pair(g.generator(), pkg.params().p_pub) ==
        g.gt_exp(g.pair(g.generator(), g.generator()), pkg.master_secret()));
}

TEST_CASE("idmpms: §-identities hold for random n, l in [1, 8] on the mock backend") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(1001);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.bytes(1)[0] % 8;
    const std::size_t l = 1 + rng.bytes(1)[0] % 8;
    HonestRun run = honest_run(g, n, l, rng, to_bytes("msg"), std::to_string(trial));
    check_identities(g, run);
    CHECK(idmpms::public_verify(g, run.sc, run.p_pub, kNow));
    CHECK(idmpms::unsigncrypt(g, run.sc, run.receiver, run.p_pub, kNow) == to_bytes("msg"));
  }
}

TEST_CASE("idmpms: §-identities hold on the production backend") {
  auto backend = group::make_ss512_backend();
  const Backend& g = *backend;
  DeterministicRng rng(1002);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 1 + rng.bytes(1)[0] % 4;
    const std::size_t l = 1 + rng.bytes(1)[0] % 4;
    HonestRun run = honest_run(g, n, l, rng, to_bytes("msg"), "p" + std::to_string(trial));
    check_identities(g, run);
    CHECK(idmpms::public_verify(g, run.sc, run.p_pub, kNow));
    CHECK(idmpms::unsigncrypt(g, run.sc, run.receiver, run.p_pub, kNow) == to_bytes("msg"));
  }
}

TEST_CASE("idmpms: closed-form mock oracle over 100 random parameter draws") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  const mpz_class q = *g.order();
  DeterministicRng rng(777);

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.bytes(1)[0] % 8;
    const std::size_t l = 1 + rng.bytes(1)[0] % 8;
    Warrant w = make_warrant(n, l, rng, "cf" + std::to_string(trial));
    idmpms::Pkg pkg = idmpms::Pkg::create(g, rng);
    const G1Element p_pub = pkg.params().p_pub;

    // independent closed forms, computed with plain mpz arithmetic
    auto as_int = [&](ByteView enc) {
      mpz_class v;
      mpz_import(v.get_mpz_t(), enc.size(), 1, 1, 0, 0, enc.data());
      return v;
    };
    const mpz_class s = pkg.master_secret().value();
    const mpz_class h_w = warrant_scalar(g, w).value();
    mpz_class sum_q_orig = 0, sum_q_proxy = 0;
    for (const Identity& id : w.original_ids) {
      sum_q_orig += as_int(g.encode_g1(idmpms::identity_point(g, id)));
    }
    for (const Identity& id : w.proxy_ids) {
      sum_q_proxy += as_int(g.encode_g1(idmpms::identity_point(g, id)));
    }

    std::vector<idmpms::DelegationShare> shares;
    for (const Identity& id : w.original_ids) {
      shares.push_back(idmpms::delegation_share(g, pkg.extract(g, id), w, kNow));
    }
    G1Element s_a = idmpms::aggregate_delegation(g, shares, w, p_pub, kNow);
    // closed form: S_A = h_w * s * sum Q_Ai
    CHECK(as_int(g.encode_g1(s_a)) == h_w * s % q * sum_q_orig % q);

    std::vector<idmpms::ProxyKey> proxy_keys;
    for (const Identity& id : w.proxy_ids) {
      proxy_keys.push_back(idmpms::derive_proxy_key(g, pkg.extract(g, id), s_a, w));
    }
    idmpms::UserKey receiver = pkg.extract(g, Identity("r-" + std::to_string(trial) + "@t"));

    std::vector<Scalar> secrets;
    std::vector<idmpms::Round1Broadcast> broadcasts;
    mpz_class t_sum = 0;
    for (const idmpms::ProxyKey& pk : proxy_keys) {
      auto [t, b] = idmpms::round1(g, pk, receiver.id, p_pub, rng);
      t_sum += t.value();
      secrets.push_back(t);
      broadcasts.push_back(b);
    }
    idmpms::SessionKeys keys = idmpms::derive_session_keys(g, broadcasts, w);
    // closed form: k1 = T * s (mock semantics, e(P, P_pub)^T = T*s*1)
    CHECK(as_int(g.encode_gt(keys.k1)) == t_sum % q * s % q);

    Scalar r_p = g.random_scalar(rng);
    std::vector<idmpms::PartialSigncryption> parts;
    for (std::size_t j = 0; j < proxy_keys.size(); ++j) {
      parts.push_back(idmpms::partial_sign(g, proxy_keys[j], secrets[j], r_p, p_pub));
    }
    idmpms::Signcryption sc = idmpms::combine(g, parts, broadcasts, s_a, w, to_bytes("c"), r_p,
                                              p_pub, kNow);
    // closed form: u_p = T*s - r_p*(l*S_A + h_w*s*sum Q_pj)
    const mpz_class l_s_a = mpz_class(l) * as_int(g.encode_g1(s_a)) % q;
    mpz_class expect =
        t_sum * s - r_p.value() * (l_s_a + h_w * s % q * sum_q_proxy % q);
    mpz_class u_p_expect;
    mpz_mod(u_p_expect.get_mpz_t(), expect.get_mpz_t(), q.get_mpz_t());
    CHECK(as_int(g.encode_g1(sc.u_p)) == u_p_expect);
  }
}

TEST_CASE("idmpms: subset failure — omitting any one partial breaks verification") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t l = 2 + rng.bytes(1)[0] % 7;
    HonestRun run = honest_run(g, 1 + rng.bytes(1)[0] % 4, l, rng, to_bytes("m"),
                               "sub" + std::to_string(trial));
    // Rebuild u_p from l-1 partials while keeping S = l * S_A.
    const std::size_t omit = rng.bytes(1)[0] % l;
    idmpms::Signcryption crippled = run.sc;
    idmpms::PartialSigncryption omitted = idmpms::partial_sign(
        g, run.proxy_keys[omit], run.secrets[omit], run.sc.r_p, run.p_pub);
    crippled.u_p = g.g1_sub(crippled.u_p, omitted.u_pj);
    CHECK_FALSE(idmpms::public_verify(g, crippled, run.p_pub, kNow));
  }
}

TEST_CASE("idmpms: delegation binding — keys from warrant w fail against w'") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(666);
  for (int trial = 0; trial < 25; ++trial) {
    HonestRun run = honest_run(g, 2, 2, rng, to_bytes("m"), "bindA" + std::to_string(trial));
    Warrant other = run.warrant;
    other.serial[0] ^= 0xff;  // same parties, different warrant

    // verify_partial under the wrong warrant
    idmpms::PartialSigncryption part = idmpms::partial_sign(g, run.proxy_keys[0], run.secrets[0],
                                                            run.sc.r_p, run.p_pub);
    CHECK_FALSE(idmpms::verify_partial(g, part, run.broadcasts[0], run.s_a, other, run.sc.r_p,
                                       run.p_pub, kNow));

    // public_verify with the warrant swapped inside the tuple
    idmpms::Signcryption swapped = run.sc;
    swapped.warrant = other;
    CHECK_FALSE(idmpms::public_verify(g, swapped, run.p_pub, kNow));
  }
}

TEST_CASE("idmpms: determinism — identical seeds give byte-identical tuples") {
  for (auto backend : {group::make_mock_backend(), group::make_ss512_backend()}) {
    const Backend& g = *backend;
    DeterministicRng rng1(4242), rng2(4242);
    HonestRun a = honest_run(g, 2, 3, rng1, to_bytes("determinism"), "det");
    HonestRun b = honest_run(g, 2, 3, rng2, to_bytes("determinism"), "det");
    CHECK(idmpms::encode_signcryption(g, a.sc) == idmpms::encode_signcryption(g, b.sc));
  }
}

TEST_CASE("idmpms: error taxonomy") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(31);
  Warrant w = make_warrant(2, 2, rng, "err");
  idmpms::Pkg pkg = idmpms::Pkg::create(g, rng);
  const G1Element p_pub = pkg.params().p_pub;

  idmpms::UserKey outsider = pkg.extract(g, Identity("outsider@t"));
  CHECK_THROWS_WITH_AS((void)idmpms::delegation_share(g, outsider, w, kNow),
                       doctest::Contains("not an original"), Error);
  CHECK_THROWS_AS((void)idmpms::derive_proxy_key(g, outsider, g.g1_identity(), w), Error);

  // expired warrant at delegation
  CHECK_THROWS_AS((void)idmpms::delegation_share(g, pkg.extract(g, w.original_ids[0]), w, 5000),
                  Error);

  // missing share
  std::vector<idmpms::DelegationShare> one_share{
      idmpms::delegation_share(g, pkg.extract(g, w.original_ids[0]), w, kNow)};
  try {
    (void)idmpms::aggregate_delegation(g, one_share, w, p_pub, kNow);
    FAIL("expected MissingShare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_share);
    CHECK(e.culprit() == w.original_ids[1].text());
  }

  // tampered share is attributed
  std::vector<idmpms::DelegationShare> shares;
  for (const Identity& id : w.original_ids) {
    shares.push_back(idmpms::delegation_share(g, pkg.extract(g, id), w, kNow));
  }
  shares[1].s_ai = g.g1_add(shares[1].s_ai, g.generator());
  try {
    (void)idmpms::aggregate_delegation(g, shares, w, p_pub, kNow);
    FAIL("expected InvalidShare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_share);
    CHECK(e.culprit() == w.original_ids[1].text());
  }
}

TEST_CASE("idmpms: combine reports missing and invalid partials with the culprit") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(32);
  HonestRun run = honest_run(g, 1, 3, rng, to_bytes("m"), "clerks");

  std::vector<idmpms::PartialSigncryption> parts;
  for (std::size_t j = 0; j < run.proxy_keys.size(); ++j) {
    parts.push_back(idmpms::partial_sign(g, run.proxy_keys[j], run.secrets[j], run.sc.r_p,
                                         run.p_pub));
  }

  std::vector<idmpms::PartialSigncryption> missing(parts.begin(), parts.end() - 1);
  try {
    (void)idmpms::combine(g, missing, run.broadcasts, run.s_a, run.warrant, run.sc.c, run.sc.r_p,
                          run.p_pub, kNow);
    FAIL("expected MissingPartial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_partial);
    CHECK(e.culprit() == run.warrant.proxy_ids.back().text());
  }

  parts[1].u_pj = g.g1_add(parts[1].u_pj, g.generator());
  try {
    (void)idmpms::combine(g, parts, run.broadcasts, run.s_a, run.warrant, run.sc.c, run.sc.r_p,
                          run.p_pub, kNow);
    FAIL("expected InvalidPartial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_partial);
    CHECK(e.culprit() == run.warrant.proxy_ids[1].text());
  }
}

TEST_CASE("idmpms: l = 1 degenerate aggregation") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(43);
  HonestRun run = honest_run(g, 1, 1, rng, to_bytes("solo"), "solo");
  // S = 1 * S_A = S_A and u_p = u_p1
  CHECK(run.sc.s == run.s_a);
  idmpms::PartialSigncryption only = idmpms::partial_sign(g, run.proxy_keys[0], run.secrets[0],
                                                          run.sc.r_p, run.p_pub);
  CHECK(run.sc.u_p == only.u_pj);
  CHECK(idmpms::public_verify(g, run.sc, run.p_pub, kNow));
}

TEST_CASE("idmpms: round1 pairing memo changes nothing but the pairing count") {
  auto backend = group::make_mock_backend();
  const Backend& g = *backend;
  DeterministicRng rng(44);
  HonestRun run = honest_run(g, 1, 2, rng, to_bytes("m"), "memo");
  idmpms::PairingMemo memo;
  DeterministicRng r1(5050), r2(5050);
  auto [t_a, b_a] = idmpms::round1(g, run.proxy_keys[0], run.receiver.id, run.p_pub, r1, &memo);
  auto [t_b, b_b] = idmpms::round1(g, run.proxy_keys[0], run.receiver.id, run.p_pub, r2, nullptr);
  CHECK(t_a == t_b);
  CHECK(b_a.k1j == b_b.k1j);
  CHECK(b_a.k2j == b_b.k2j);
  CHECK(memo.e_p_ppub.has_value());
  CHECK(memo.e_ppub_qc.has_value());
  // warm memo reused
  DeterministicRng r3(6060);
  auto [t_c, b_c] = idmpms::round1(g, run.proxy_keys[1], run.receiver.id, run.p_pub, r3, &memo);
  CHECK(b_c.k1j == g.gt_exp(*memo.e_p_ppub, t_c));
}

TEST_CASE("idmpms: signcryption wire form round trip") {
  auto backend = group::make_ss512_backend();
  const Backend& g = *backend;
  DeterministicRng rng(45);
  HonestRun run = honest_run(g, 2, 2, rng, to_bytes("wire"), "wire");
  Bytes enc = idmpms::encode_signcryption(g, run.sc);
  idmpms::Signcryption back = idmpms::decode_signcryption(g, enc);
  CHECK(idmpms::encode_signcryption(g, back) == enc);
  CHECK(idmpms::public_verify(g, back, run.p_pub, kNow));
  Bytes truncated(enc.begin(), enc.end() - 1);
  CHECK_THROWS_AS((void)idmpms::decode_signcryption(g, truncated), Error);
}
