#include "pairmps/session.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"
#include "pairmps/idmpms.hpp"
#include "pairmps/liuxiao.hpp"
#include "pairmps/mock_backend.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/ss512_backend.hpp"

namespace pairmps::session {

using group::Backend;
using group::G1Element;
using group::GtElement;
using group::Scalar;

const char* scheme_name(Scheme s) {
  return s == Scheme::idmpms ? "idmpms" : "liuxiao";
}

Scheme scheme_from_name(std::string_view name) {
  if (name == "idmpms") return Scheme::idmpms;
  if (name == "liuxiao") return Scheme::liuxiao;
  throw Error(Errc::invalid_config, "unknown scheme '" + std::string(name) + "'");
}

const char* behavior_name(Behavior b) {
  switch (b) {
    case Behavior::honest: return "honest";
    case Behavior::bad_delegation_share: return "bad-delegation-share";
    case Behavior::bad_round1: return "bad-round1";
    case Behavior::bad_partial: return "bad-partial";
    case Behavior::withhold_partial: return "withhold-partial";
    case Behavior::tamper_ciphertext: return "tamper-ciphertext";
    case Behavior::equivocate: return "equivocate";
  }
  return "unknown";
}

Behavior behavior_from_name(std::string_view name) {
  for (Behavior b : {Behavior::honest, Behavior::bad_delegation_share, Behavior::bad_round1,
                     Behavior::bad_partial, Behavior::withhold_partial,
                     Behavior::tamper_ciphertext, Behavior::equivocate}) {
    if (name == behavior_name(b)) return b;
  }
  throw Error(Errc::invalid_config, "unknown behavior '" + std::string(name) + "'");
}

Identity original_identity(std::size_t index) {
  return Identity("orig-" + std::to_string(index + 1) + "@pairmps.test");
}

Identity proxy_identity(std::size_t index) {
  return Identity("proxy-" + std::to_string(index + 1) + "@pairmps.test");
}

Identity receiver_identity() {
  return Identity("receiver@pairmps.test");
}

Warrant materialize_warrant(const SessionConfig& cfg) {
  Warrant w;
  for (std::size_t i = 0; i < cfg.n; ++i) w.original_ids.push_back(original_identity(i));
  for (std::size_t j = 0; j < cfg.l; ++j) w.proxy_ids.push_back(proxy_identity(j));
  w.scope = cfg.warrant.scope;
  w.valid_from = cfg.warrant.valid_from;
  w.valid_to = cfg.warrant.valid_to;
  DeterministicRng serial_rng(derive_stream_key(cfg.seed, "warrant-serial", 0));
  serial_rng.fill(w.serial.data(), w.serial.size());
  return w;
}

namespace {

std::string digest_hex(ByteView payload) {
  return hex_encode(blake2b(16, payload));
}

struct Run {
  const SessionConfig& cfg;
  std::shared_ptr<const Backend> backend;
  SessionTranscript out;
  bool done = false;

  const Backend& g() const { return *backend; }

  void event(std::string stage, std::string actor, std::string digest, std::string outcome) {
    out.events.push_back(
        {std::move(stage), std::move(actor), std::move(digest), std::move(outcome)});
  }

  void reject(const std::string& stage, const std::string& culprit, const std::string& why) {
    out.accepted = false;
    out.reject_stage = stage;
    out.culprit = culprit;
    event("verdict", "session", "",
          "reject@" + stage + (culprit.empty() ? "" : " culprit=" + culprit) + " " + why);
    done = true;
  }

  void accept(Bytes plaintext) {
    out.accepted = true;
    out.recovered_plaintext = std::move(plaintext);
    event("verdict", "session", "", "accept");
    done = true;
  }

  bool adversary_is(Role role, std::size_t index, Behavior behavior) const {
    for (const AdversarySpec& a : cfg.adversaries) {
      if (a.role == role && a.index == index && a.behavior == behavior) return true;
    }
    return false;
  }

  // Bus posts for one stage; detects equivocation (same actor, different
  // payloads) the moment the stage's broadcasts are collected.
  bool flag_conflicts(const std::string& stage,
                      const std::vector<std::pair<std::string, std::string>>& posts) {
    std::map<std::string, std::string> first;
    for (const auto& [actor, digest] : posts) {
      auto [it, inserted] = first.emplace(actor, digest);
      if (!inserted && it->second != digest) {
        event(stage, actor, digest, "conflict");
        reject(stage, actor, "conflicting broadcasts");
        return true;
      }
    }
    return false;
  }
};

void validate_config(const SessionConfig& cfg) {
  if (cfg.n < 1 || cfg.l < 1) {
    throw Error(Errc::invalid_config, "n and l must be at least 1");
  }
  if (cfg.adversaries.size() > 1) {
    throw Error(Errc::invalid_config, "at most one adversary per run");
  }
  for (const AdversarySpec& a : cfg.adversaries) {
    const std::size_t bound = a.role == Role::original ? cfg.n : cfg.l;
    if (a.index >= bound) throw Error(Errc::invalid_config, "adversary index out of range");
    const bool original_ok = a.behavior == Behavior::honest ||
                             a.behavior == Behavior::bad_delegation_share ||
                             a.behavior == Behavior::equivocate;
    const bool proxy_ok = a.behavior != Behavior::bad_delegation_share;
    if (a.role == Role::original ? !original_ok : !proxy_ok) {
      throw Error(Errc::invalid_config, std::string("behavior ") + behavior_name(a.behavior) +
                                            " does not apply to that role");
    }
  }
  if (cfg.warrant.valid_from >= cfg.warrant.valid_to) {
    throw Error(Errc::invalid_config, "warrant template window is empty");
  }
}

// Uniform nonzero offset; guarantees the perturbed message differs from the
// honest one even at q = 23.
Scalar offset_scalar(const Backend& g, RandomSource& rng) {
  return g.random_scalar(rng);
}

void run_idmpms(Run& run) {
  const SessionConfig& cfg = run.cfg;
  const Backend& g = run.g();
  const Warrant warrant = materialize_warrant(cfg);
  DeterministicRng setup_rng(derive_stream_key(cfg.seed, "setup", 0));
  DeterministicRng adversary_rng(derive_stream_key(cfg.seed, "adversary", 0));

  // setup
  idmpms::Pkg pkg = idmpms::Pkg::create(g, setup_rng);
  const G1Element p_pub = pkg.params().p_pub;
  run.event("setup", "pkg", digest_hex(pkg.params().encode(g)), "ok");

  // extract
  std::vector<idmpms::UserKey> originals;
  std::vector<idmpms::UserKey> proxies;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    originals.push_back(pkg.extract(g, original_identity(i)));
    run.event("extract", originals.back().id.text(), digest_hex(g.encode_g1(originals.back().q_id)),
              "ok");
  }
  for (std::size_t j = 0; j < cfg.l; ++j) {
    proxies.push_back(pkg.extract(g, proxy_identity(j)));
    run.event("extract", proxies.back().id.text(), digest_hex(g.encode_g1(proxies.back().q_id)),
              "ok");
  }
  idmpms::UserKey receiver = pkg.extract(g, receiver_identity());
  run.event("extract", receiver.id.text(), digest_hex(g.encode_g1(receiver.q_id)), "ok");

  // delegate: every original broadcasts S_Ai
  std::vector<idmpms::DelegationShare> shares;
  std::vector<std::pair<std::string, std::string>> posts;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    idmpms::DelegationShare share = idmpms::delegation_share(g, originals[i], warrant, cfg.now);
    if (run.adversary_is(Role::original, i, Behavior::bad_delegation_share)) {
      share.s_ai = g.g1_add(share.s_ai,
                            g.g1_mul(g.generator(), offset_scalar(g, adversary_rng)));
    }
    std::string digest = digest_hex(g.encode_g1(share.s_ai));
    run.event("delegate", share.signer_id.text(), digest, "broadcast");
    posts.emplace_back(share.signer_id.text(), digest);
    shares.push_back(share);
    if (run.adversary_is(Role::original, i, Behavior::equivocate)) {
      idmpms::DelegationShare conflicting = share;
      conflicting.s_ai = g.g1_add(conflicting.s_ai,
                                  g.g1_mul(g.generator(), offset_scalar(g, adversary_rng)));
      std::string digest2 = digest_hex(g.encode_g1(conflicting.s_ai));
      run.event("delegate", share.signer_id.text(), digest2, "broadcast");
      posts.emplace_back(share.signer_id.text(), digest2);
    }
  }
  if (run.flag_conflicts("delegate", posts)) return;

  // verify-delegation: the proxy group checks every share
  for (const idmpms::DelegationShare& share : shares) {
    const bool ok = idmpms::verify_delegation_share(g, share, warrant, p_pub, cfg.now);
    run.event("verify-delegation", share.signer_id.text(), digest_hex(g.encode_g1(share.s_ai)),
              ok ? "ok" : "reject");
    if (!ok) {
      run.reject("verify-delegation", share.signer_id.text(), "delegation share invalid");
      return;
    }
  }

  // proxy-key
  G1Element s_a = g.g1_identity();
  for (const idmpms::DelegationShare& share : shares) s_a = g.g1_add(s_a, share.s_ai);
  std::vector<idmpms::ProxyKey> proxy_keys;
  for (const idmpms::UserKey& proxy : proxies) {
    proxy_keys.push_back(idmpms::derive_proxy_key(g, proxy, s_a, warrant));
  }
  run.event("proxy-key", "proxies", digest_hex(g.encode_g1(s_a)), "ok");

  // round1
  std::vector<Scalar> secrets;
  std::vector<idmpms::Round1Broadcast> broadcasts;
  posts.clear();
  for (std::size_t j = 0; j < cfg.l; ++j) {
    DeterministicRng rng(derive_stream_key(cfg.seed, "round1", j));
    auto [t_j, bcast] = idmpms::round1(g, proxy_keys[j], receiver.id, p_pub, rng);
    if (run.adversary_is(Role::proxy, j, Behavior::bad_round1)) {
      bcast.k1j = g.gt_mul(bcast.k1j, g.gt_exp(g.pair(g.generator(), g.generator()),
                                               offset_scalar(g, adversary_rng)));
    }
    Bytes payload = g.encode_gt(bcast.k1j);
    append_bytes(payload, g.encode_gt(bcast.k2j));
    std::string digest = digest_hex(payload);
    run.event("round1", bcast.proxy_id.text(), digest, "broadcast");
    posts.emplace_back(bcast.proxy_id.text(), digest);
    if (run.adversary_is(Role::proxy, j, Behavior::equivocate)) {
      GtElement other = g.gt_mul(bcast.k1j, g.gt_exp(g.pair(g.generator(), g.generator()),
                                                     offset_scalar(g, adversary_rng)));
      Bytes payload2 = g.encode_gt(other);
      append_bytes(payload2, g.encode_gt(bcast.k2j));
      std::string digest2 = digest_hex(payload2);
      run.event("round1", bcast.proxy_id.text(), digest2, "broadcast");
      posts.emplace_back(bcast.proxy_id.text(), digest2);
    }
    secrets.push_back(std::move(t_j));
    broadcasts.push_back(std::move(bcast));
  }
  if (run.flag_conflicts("round1", posts)) return;

  // commit: every proxy derives the same keys and ciphertext
  idmpms::SessionKeys keys = idmpms::derive_session_keys(g, broadcasts, warrant);
  auto [ciphertext, r_p] = idmpms::encrypt_and_commit(g, cfg.message, keys);
  Bytes commit_payload = ciphertext;
  append_bytes(commit_payload, g.encode_scalar(r_p));
  run.event("commit", "proxies", digest_hex(commit_payload), "ok");

  // partial
  std::vector<idmpms::PartialSigncryption> parts;
  for (std::size_t j = 0; j < cfg.l; ++j) {
    if (run.adversary_is(Role::proxy, j, Behavior::withhold_partial)) continue;
    idmpms::PartialSigncryption part = idmpms::partial_sign(g, proxy_keys[j], secrets[j], r_p,
                                                            p_pub);
    if (run.adversary_is(Role::proxy, j, Behavior::bad_partial)) {
      part.u_pj = g.g1_add(part.u_pj, g.g1_mul(g.generator(), offset_scalar(g, adversary_rng)));
    }
    run.event("partial", part.proxy_id.text(), digest_hex(g.encode_g1(part.u_pj)), "sent");
    parts.push_back(std::move(part));
  }

  // combine: the clerk verifies every partial, then aggregates
  idmpms::Signcryption sc;
  try {
    sc = idmpms::combine(g, parts, broadcasts, s_a, warrant, ciphertext, r_p, p_pub, cfg.now);
  } catch (const Error& e) {
    run.event("combine", proxy_identity(0).text(), "", errc_name(e.code()));
    run.reject("combine", e.culprit(), e.what());
    return;
  }
  bool tampered = false;
  for (std::size_t j = 0; j < cfg.l; ++j) {
    if (run.adversary_is(Role::proxy, j, Behavior::tamper_ciphertext)) tampered = true;
  }
  if (tampered && !sc.c.empty()) sc.c.back() ^= 0x01;
  run.out.sc_payload = idmpms::encode_signcryption(g, sc);
  run.event("combine", proxy_identity(0).text(), digest_hex(run.out.sc_payload), "ok");

  // public-verify: any third party, public data only
  const bool publicly_valid = idmpms::public_verify(g, sc, p_pub, cfg.now);
  run.event("public-verify", "verifier", digest_hex(run.out.sc_payload),
            publicly_valid ? "ok" : "reject");
  if (!publicly_valid) {
    run.reject("public-verify", "", "public verification failed");
    return;
  }

  // unsigncrypt
  try {
    Bytes plaintext = idmpms::unsigncrypt(g, sc, receiver, p_pub, cfg.now);
    if (plaintext != cfg.message) {
      run.event("unsigncrypt", receiver.id.text(), digest_hex(plaintext), "plaintext-mismatch");
      run.reject("unsigncrypt", "", "recovered plaintext differs");
      return;
    }
    run.event("unsigncrypt", receiver.id.text(), digest_hex(plaintext), "ok");
    run.accept(std::move(plaintext));
  } catch (const Error& e) {
    run.event("unsigncrypt", receiver.id.text(), "", errc_name(e.code()));
    run.reject("unsigncrypt", "", e.what());
  }
}

void run_liuxiao(Run& run) {
  const SessionConfig& cfg = run.cfg;
  const Backend& g = run.g();
  const Warrant warrant = materialize_warrant(cfg);
  DeterministicRng adversary_rng(derive_stream_key(cfg.seed, "adversary", 0));

  // setup: certificate-style keygen, no PKG
  std::vector<liuxiao::LxUserKey> originals;
  std::vector<liuxiao::LxUserKey> proxies;
  std::vector<liuxiao::LxUserPublic> original_publics;
  std::vector<liuxiao::LxUserPublic> proxy_publics;
  std::uint64_t player = 0;
  for (std::size_t i = 0; i < cfg.n; ++i, ++player) {
    DeterministicRng rng(derive_stream_key(cfg.seed, "lx-keygen", player));
    originals.push_back(liuxiao::lx_keygen(g, original_identity(i), rng));
    original_publics.push_back(liuxiao::lx_public(originals.back()));
    run.event("setup", originals.back().id.text(), digest_hex(g.encode_g1(originals.back().y)),
              "ok");
  }
  for (std::size_t j = 0; j < cfg.l; ++j, ++player) {
    DeterministicRng rng(derive_stream_key(cfg.seed, "lx-keygen", player));
    proxies.push_back(liuxiao::lx_keygen(g, proxy_identity(j), rng));
    proxy_publics.push_back(liuxiao::lx_public(proxies.back()));
    run.event("setup", proxies.back().id.text(), digest_hex(g.encode_g1(proxies.back().y)), "ok");
  }
  DeterministicRng receiver_rng(derive_stream_key(cfg.seed, "lx-keygen", player));
  liuxiao::LxUserKey receiver = liuxiao::lx_keygen(g, receiver_identity(), receiver_rng);
  run.event("setup", receiver.id.text(), digest_hex(g.encode_g1(receiver.y)), "ok");

  // delegate
  std::vector<liuxiao::LxDelegationShare> shares;
  std::vector<std::pair<std::string, std::string>> posts;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    liuxiao::LxDelegationShare share = liuxiao::lx_delegation_share(g, originals[i], warrant,
                                                                    cfg.now);
    if (run.adversary_is(Role::original, i, Behavior::bad_delegation_share)) {
      share.s_ai = g.g1_add(share.s_ai,
                            g.g1_mul(g.generator(), offset_scalar(g, adversary_rng)));
    }
    std::string digest = digest_hex(g.encode_g1(share.s_ai));
    run.event("delegate", share.signer_id.text(), digest, "broadcast");
    posts.emplace_back(share.signer_id.text(), digest);
    shares.push_back(share);
    if (run.adversary_is(Role::original, i, Behavior::equivocate)) {
      liuxiao::LxDelegationShare conflicting = share;
      conflicting.s_ai = g.g1_add(conflicting.s_ai,
                                  g.g1_mul(g.generator(), offset_scalar(g, adversary_rng)));
      std::string digest2 = digest_hex(g.encode_g1(conflicting.s_ai));
      run.event("delegate", share.signer_id.text(), digest2, "broadcast");
      posts.emplace_back(share.signer_id.text(), digest2);
    }
  }
  if (run.flag_conflicts("delegate", posts)) return;

  // verify-delegation
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const bool ok = liuxiao::lx_verify_delegation_share(g, shares[i], original_publics[i].y,
                                                        warrant, cfg.now);
    run.event("verify-delegation", shares[i].signer_id.text(),
              digest_hex(g.encode_g1(shares[i].s_ai)), ok ? "ok" : "reject");
    if (!ok) {
      run.reject("verify-delegation", shares[i].signer_id.text(), "delegation share invalid");
      return;
    }
  }

  // proxy-key
  G1Element s_a = g.g1_identity();
  for (const liuxiao::LxDelegationShare& share : shares) s_a = g.g1_add(s_a, share.s_ai);
  std::vector<liuxiao::LxProxyKey> proxy_keys;
  for (const liuxiao::LxUserKey& proxy : proxies) {
    proxy_keys.push_back(liuxiao::lx_derive_proxy_key(g, proxy, s_a, warrant));
  }
  run.event("proxy-key", "proxies", digest_hex(g.encode_g1(s_a)), "ok");

  // round1
  std::vector<Scalar> secrets;
  std::vector<liuxiao::LxRound1> broadcasts;
  posts.clear();
  for (std::size_t j = 0; j < cfg.l; ++j) {
    DeterministicRng rng(derive_stream_key(cfg.seed, "round1", j));
    auto [t_j, bcast] = liuxiao::lx_round1(g, proxy_keys[j].proxy_id, receiver.y, rng);
    if (run.adversary_is(Role::proxy, j, Behavior::bad_round1)) {
      bcast.r_pj = g.gt_mul(bcast.r_pj, g.gt_exp(g.pair(g.generator(), g.generator()),
                                                 offset_scalar(g, adversary_rng)));
    }
    std::string digest = digest_hex(g.encode_gt(bcast.r_pj));
    run.event("round1", bcast.proxy_id.text(), digest, "broadcast");
    posts.emplace_back(bcast.proxy_id.text(), digest);
    if (run.adversary_is(Role::proxy, j, Behavior::equivocate)) {
      GtElement other = g.gt_mul(bcast.r_pj, g.gt_exp(g.pair(g.generator(), g.generator()),
                                                      offset_scalar(g, adversary_rng)));
      std::string digest2 = digest_hex(g.encode_gt(other));
      run.event("round1", bcast.proxy_id.text(), digest2, "broadcast");
      posts.emplace_back(bcast.proxy_id.text(), digest2);
    }
    secrets.push_back(std::move(t_j));
    broadcasts.push_back(std::move(bcast));
  }
  if (run.flag_conflicts("round1", posts)) return;

  // commit
  Bytes key = liuxiao::lx_session_key(g, broadcasts, warrant);
  auto [ciphertext, r_p] = liuxiao::lx_encrypt_and_commit(g, cfg.message, key);
  Bytes commit_payload = ciphertext;
  append_bytes(commit_payload, g.encode_scalar(r_p));
  run.event("commit", "proxies", digest_hex(commit_payload), "ok");

  // partial: no verification equation exists, the clerk only checks presence
  std::vector<liuxiao::LxPartial> parts;
  for (std::size_t j = 0; j < cfg.l; ++j) {
    if (run.adversary_is(Role::proxy, j, Behavior::withhold_partial)) continue;
    liuxiao::LxPartial part = liuxiao::lx_partial_sign(g, proxy_keys[j], secrets[j], r_p);
    if (run.adversary_is(Role::proxy, j, Behavior::bad_partial)) {
      part.u_pj = g.g1_add(part.u_pj, g.g1_mul(g.generator(), offset_scalar(g, adversary_rng)));
    }
    run.event("partial", part.proxy_id.text(), digest_hex(g.encode_g1(part.u_pj)), "sent");
    parts.push_back(std::move(part));
  }

  // combine
  liuxiao::LxSigncryption sc;
  try {
    sc = liuxiao::lx_combine(g, parts, s_a, warrant, ciphertext, r_p, cfg.now);
  } catch (const Error& e) {
    run.event("combine", proxy_identity(0).text(), "", errc_name(e.code()));
    run.reject("combine", e.culprit(), e.what());
    return;
  }
  bool tampered = false;
  for (std::size_t j = 0; j < cfg.l; ++j) {
    if (run.adversary_is(Role::proxy, j, Behavior::tamper_ciphertext)) tampered = true;
  }
  if (tampered && !sc.c.empty()) sc.c.back() ^= 0x01;
  run.out.sc_payload = liuxiao::encode_lx_signcryption(g, sc);
  run.event("combine", proxy_identity(0).text(), digest_hex(run.out.sc_payload), "ok");

  // no public-verify stage: the scheme has none; verification happens at the
  // receiver, inside unsigncryption
  try {
    Bytes plaintext = liuxiao::lx_unsigncrypt(g, sc, receiver, proxy_publics, cfg.now);
    if (plaintext != cfg.message) {
      run.event("unsigncrypt", receiver.id.text(), digest_hex(plaintext), "plaintext-mismatch");
      run.reject("unsigncrypt", "", "recovered plaintext differs");
      return;
    }
    run.event("unsigncrypt", receiver.id.text(), digest_hex(plaintext), "ok");
    run.accept(std::move(plaintext));
  } catch (const Error& e) {
    run.event("unsigncrypt", receiver.id.text(), "", errc_name(e.code()));
    run.reject("unsigncrypt", "", e.what());
  }
}

}  // namespace

SessionTranscript run_session(const SessionConfig& cfg) {
  validate_config(cfg);
  Run run{cfg, group::make_backend(cfg.backend), {}, false};
  if (cfg.scheme == Scheme::idmpms) {
    run_idmpms(run);
  } else {
    run_liuxiao(run);
  }
  if (!run.done) throw Error(Errc::internal, "session ended without a verdict");
  return std::move(run.out);
}

std::string SessionTranscript::to_text() const {
  std::ostringstream out;
  for (const TranscriptEvent& e : events) {
    out << e.stage << " | " << e.actor << " | " << e.digest_hex << " | " << e.outcome << "\n";
  }
  return out.str();
}

std::string MatrixSummary::to_text() const {
  std::ostringstream out;
  for (const ScenarioResult& row : rows) {
    out << row.scenario << ": runs=" << row.runs << " accepted=" << row.accepted
        << " detected=" << row.detected << " attributed=" << row.attributed << "\n";
  }
  out << (ok ? "matrix: ok" : "matrix: FAILURE") << "\n";
  return out.str();
}

MatrixSummary run_matrix(Scheme scheme, group::BackendKind backend,
                         std::span<const std::uint64_t> seeds,
                         std::span<const std::size_t> sizes) {
  struct Scenario {
    std::string name;
    Behavior behavior;
  };
  const std::vector<Scenario> scenarios = {
      {"honest", Behavior::honest},
      {"bad-delegation-share", Behavior::bad_delegation_share},
      {"bad-round1", Behavior::bad_round1},
      {"bad-partial", Behavior::bad_partial},
      {"withhold-partial", Behavior::withhold_partial},
      {"tamper-ciphertext", Behavior::tamper_ciphertext},
      {"equivocate", Behavior::equivocate},
  };

  MatrixSummary summary;
  summary.ok = true;
  for (const Scenario& scenario : scenarios) {
    ScenarioResult row;
    row.scenario = scenario.name;
    for (std::size_t n : sizes) {
      for (std::size_t l : sizes) {
        for (std::uint64_t seed : seeds) {
          SessionConfig cfg;
          cfg.scheme = scheme;
          cfg.backend = backend;
          cfg.n = n;
          cfg.l = l;
          cfg.seed = seed;
          cfg.message = to_bytes("matrix run message");
          std::string expected_culprit;
          if (scenario.behavior != Behavior::honest) {
            AdversarySpec spec;
            if (scenario.behavior == Behavior::bad_delegation_share) {
              spec = {Role::original, 0, scenario.behavior};
              expected_culprit = original_identity(0).text();
            } else if (scenario.behavior == Behavior::tamper_ciphertext) {
              spec = {Role::proxy, 0, scenario.behavior};
              expected_culprit = proxy_identity(0).text();
            } else {
              spec = {Role::proxy, l - 1, scenario.behavior};
              expected_culprit = proxy_identity(l - 1).text();
            }
            cfg.adversaries.push_back(spec);
          }
          SessionTranscript transcript = run_session(cfg);
          ++row.runs;
          if (scenario.behavior == Behavior::honest) {
            if (transcript.accepted) {
              ++row.accepted;
            } else {
              summary.ok = false;
            }
          } else {
            if (!transcript.accepted) {
              ++row.detected;
              if (transcript.culprit == expected_culprit) ++row.attributed;
            } else {
              summary.ok = false;
            }
          }
        }
      }
    }
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

}  // namespace pairmps::session
