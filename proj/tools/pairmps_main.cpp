// pairmps: role-based CLI for the two multi-proxy multi-signcryption
// schemes. Each protocol step is one subcommand; steps exchange hex-armored
// envelope files, so a full run can be executed as separate processes.
//
// Exit codes: 0 success, 2 verification failure, 3 malformed input,
// 4 missing prerequisite.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pairmps/envelope.hpp"
#include "pairmps/errors.hpp"
#include "pairmps/idmpms.hpp"
#include "pairmps/keystore.hpp"
#include "pairmps/liuxiao.hpp"
#include "pairmps/mock_backend.hpp"
#include "pairmps/opcount.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/session.hpp"
#include "pairmps/ss512_backend.hpp"

namespace {

using namespace pairmps;
using group::Backend;
using group::G1Element;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitMissing = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::verify_failed:
    case Errc::decrypt_failed:
    case Errc::invalid_share:
    case Errc::invalid_partial:
      return kExitVerifyFailure;
    case Errc::missing_share:
    case Errc::missing_broadcast:
    case Errc::missing_partial:
    case Errc::missing_prerequisite:
      return kExitMissing;
    case Errc::signer_not_in_warrant:
    case Errc::proxy_not_in_warrant:
    case Errc::invalid_identity:
    case Errc::invalid_warrant:
    case Errc::malformed_encoding:
    case Errc::invalid_config:
      return kExitMalformed;
    case Errc::internal:
      break;
  }
  return 1;
}

std::string passphrase_from_env() {
  const char* pw = std::getenv("PAIRMPS_PASSPHRASE");
  return pw != nullptr ? pw : "";
}

struct CommonOpts {
  std::string backend = "production";
  std::string keystore;
  std::string warrant;
  std::string scheme = "idmpms";
  std::string out;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::int64_t now = 0;
  bool now_set = false;

  std::shared_ptr<const Backend> make_group() const {
    return group::make_backend(group::backend_kind_from_name(backend));
  }
  KeyStore open_keystore() const {
    if (keystore.empty()) {
      throw Error(Errc::missing_prerequisite, "--keystore is required for this command");
    }
    return KeyStore(keystore, passphrase_from_env());
  }
  Warrant load_warrant() const {
    if (warrant.empty()) {
      throw Error(Errc::missing_prerequisite, "--warrant is required for this command");
    }
    return decode_warrant(expect_envelope(warrant, EnvelopeKind::warrant));
  }
  std::int64_t effective_now() const {
    return now_set ? now : static_cast<std::int64_t>(std::time(nullptr));
  }
  std::unique_ptr<RandomSource> rng_for(std::string_view label, std::uint64_t index) const {
    if (seeded) {
      return std::make_unique<DeterministicRng>(derive_stream_key(seed, label, index));
    }
    return std::make_unique<SystemRng>();
  }
  bool is_lx() const { return scheme == "liuxiao"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_warrant = true,
                bool with_scheme = false) {
  cmd->add_option("--backend", opts.backend, "group backend")
      ->check(CLI::IsMember({"production", "mock"}));
  cmd->add_option("--keystore", opts.keystore, "keystore directory");
  if (with_warrant) cmd->add_option("--warrant", opts.warrant, "warrant envelope path");
  if (with_scheme) {
    cmd->add_option("--scheme", opts.scheme, "scheme")->check(CLI::IsMember({"idmpms", "liuxiao"}));
  }
  cmd->add_option("--out", opts.out, "output path");
  auto* seed_opt = cmd->add_option("--seed", opts.seed, "deterministic seed");
  auto* now_opt = cmd->add_option("--now", opts.now, "protocol time (unix seconds)");
  cmd->parse_complete_callback([&opts, seed_opt, now_opt] {
    opts.seeded = seed_opt->count() > 0;
    opts.now_set = now_opt->count() > 0;
  });
}

std::size_t proxy_index_in(const Warrant& w, const Identity& id) {
  for (std::size_t j = 0; j < w.proxy_ids.size(); ++j) {
    if (w.proxy_ids[j] == id) return j;
  }
  throw Error(Errc::proxy_not_in_warrant,
              "'" + id.text() + "' is not a proxy signcrypter of this warrant");
}

void require_out(const CommonOpts& opts) {
  if (opts.out.empty()) {
    throw Error(Errc::missing_prerequisite, "--out is required for this command");
  }
}

// liuxiao round-1 envelope payload (kind R1): id, r_pj
Bytes encode_lx_round1(const Backend& g, const liuxiao::LxRound1& b) {
  Bytes out;
  append_length_prefixed(out, b.proxy_id.bytes());
  append_length_prefixed(out, g.encode_gt(b.r_pj));
  return out;
}

liuxiao::LxRound1 decode_lx_round1(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Identity id(to_string(reader.read_length_prefixed()));
  group::GtElement r_pj = g.decode_gt(reader.read_length_prefixed());
  reader.expect_end();
  return liuxiao::LxRound1{std::move(id), std::move(r_pj)};
}

// liuxiao delegation-share envelope payload (kind DSHARE): id, s_ai
Bytes encode_lx_share(const Backend& g, const liuxiao::LxDelegationShare& s) {
  Bytes out;
  append_length_prefixed(out, s.signer_id.bytes());
  append_length_prefixed(out, g.encode_g1(s.s_ai));
  return out;
}

liuxiao::LxDelegationShare decode_lx_share(const Backend& g, ByteView bytes) {
  ByteReader reader(bytes);
  Identity id(to_string(reader.read_length_prefixed()));
  G1Element s_ai = g.decode_g1(reader.read_length_prefixed());
  reader.expect_end();
  return liuxiao::LxDelegationShare{std::move(id), std::move(s_ai)};
}

// ---------------------------------------------------------------- commands

int cmd_setup(const CommonOpts& opts) {
  auto backend = opts.make_group();
  KeyStore store = opts.open_keystore();
  auto rng = opts.rng_for("setup", 0);
  idmpms::Pkg pkg = idmpms::Pkg::create(*backend, *rng);
  store.store_params(*backend, pkg.params());
  store.store_master_secret(*backend, pkg.master_secret());
  if (!opts.out.empty()) {
    write_envelope_file(opts.out, EnvelopeKind::params, pkg.params().encode(*backend));
  }
  std::cout << "setup complete: backend=" << backend->descriptor().name
            << " params-digest=" << hex_encode(pkg.params().digest(*backend)) << "\n";
  return kExitOk;
}

int cmd_extract(const CommonOpts& opts, const std::string& id_text) {
  auto backend = opts.make_group();
  KeyStore store = opts.open_keystore();
  Identity id(id_text);
  if (opts.is_lx()) {
    auto rng = opts.rng_for("lx-keygen", 0);
    liuxiao::LxUserKey key = liuxiao::lx_keygen(*backend, id, *rng);
    store.store_lx_key(*backend, key);
    std::cout << "generated liuxiao key for " << id.text() << "\n";
    return kExitOk;
  }
  group::Scalar s = store.load_master_secret(*backend);
  idmpms::Pkg pkg = idmpms::Pkg::from_master_secret(*backend, s);
  idmpms::UserKey key = pkg.extract(*backend, id);
  store.store_user_key(*backend, key);
  std::cout << "extracted key for " << id.text() << "\n";
  return kExitOk;
}

int cmd_delegate(const CommonOpts& opts, const std::string& id_text) {
  auto backend = opts.make_group();
  KeyStore store = opts.open_keystore();
  Warrant w = opts.load_warrant();
  Identity id(id_text);
  require_out(opts);
  if (opts.is_lx()) {
    liuxiao::LxUserKey key = store.load_lx_key(*backend, id);
    liuxiao::LxDelegationShare share =
        liuxiao::lx_delegation_share(*backend, key, w, opts.effective_now());
    write_envelope_file(opts.out, EnvelopeKind::dshare, encode_lx_share(*backend, share));
  } else {
    idmpms::UserKey key = store.load_user_key(*backend, id);
    idmpms::DelegationShare share =
        idmpms::delegation_share(*backend, key, w, opts.effective_now());
    write_envelope_file(opts.out, EnvelopeKind::dshare,
                        idmpms::encode_delegation_share(*backend, share));
  }
  std::cout << "delegation share written to " << opts.out << "\n";
  return kExitOk;
}

int cmd_verify_delegation(const CommonOpts& opts, const std::vector<std::string>& share_paths) {
  auto backend = opts.make_group();
  KeyStore store = opts.open_keystore();
  Warrant w = opts.load_warrant();
  bool all_ok = true;
  for (const std::string& path : share_paths) {
    Bytes payload = expect_envelope(path, EnvelopeKind::dshare);
    bool ok;
    std::string signer;
    if (opts.is_lx()) {
      liuxiao::LxDelegationShare share = decode_lx_share(*backend, payload);
      signer = share.signer_id.text();
      liuxiao::LxUserKey key = store.load_lx_key(*backend, share.signer_id);
      ok = liuxiao::lx_verify_delegation_share(*backend, share, key.y, w, opts.effective_now());
    } else {
      idmpms::PublicParams params = store.load_params(*backend);
      idmpms::DelegationShare share = idmpms::decode_delegation_share(*backend, payload);
      signer = share.signer_id.text();
      ok = idmpms::verify_delegation_share(*backend, share, w, params.p_pub,
                                           opts.effective_now());
    }
    std::cout << (ok ? "ok      " : "invalid ") << signer << " (" << path << ")\n";
    all_ok = all_ok && ok;
  }
  if (!all_ok) {
    std::cerr << "verify-delegation: at least one share failed\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int cmd_proxy_key(const CommonOpts& opts, const std::string& id_text,
                  const std::vector<std::string>& share_paths) {
  auto backend = opts.make_group();
  const Backend& g = *backend;
  KeyStore store = opts.open_keystore();
  Warrant w = opts.load_warrant();
  Identity id(id_text);
  Bytes digest = warrant_digest(w);

  if (opts.is_lx()) {
    std::vector<liuxiao::LxDelegationShare> shares;
    std::vector<liuxiao::LxUserPublic> publics;
    for (const std::string& path : share_paths) {
      shares.push_back(decode_lx_share(g, expect_envelope(path, EnvelopeKind::dshare)));
      liuxiao::LxUserKey key = store.load_lx_key(g, shares.back().signer_id);
      publics.push_back(liuxiao::lx_public(key));
    }
    G1Element s_a = liuxiao::lx_aggregate_delegation(g, shares, publics, w,
                                                     opts.effective_now());
    liuxiao::LxUserKey key = store.load_lx_key(g, id);
    liuxiao::LxProxyKey proxy = liuxiao::lx_derive_proxy_key(g, key, s_a, w);
    // stored in the idmpms record shape: S_A public, S_pj sealed
    store.store_proxy_key(g, idmpms::ProxyKey{proxy.proxy_id, proxy.s_a, proxy.s_pj}, digest);
    if (!opts.out.empty()) {
      write_envelope_file(opts.out, EnvelopeKind::proxykey,
                          idmpms::encode_proxykey_public(g, {proxy.proxy_id, proxy.s_a, digest}));
    }
  } else {
    idmpms::PublicParams params = store.load_params(g);
    std::vector<idmpms::DelegationShare> shares;
    for (const std::string& path : share_paths) {
      shares.push_back(
          idmpms::decode_delegation_share(g, expect_envelope(path, EnvelopeKind::dshare)));
    }
    G1Element s_a = idmpms::aggregate_delegation(g, shares, w, params.p_pub,
                                                 opts.effective_now());
    idmpms::UserKey key = store.load_user_key(g, id);
    idmpms::ProxyKey proxy = idmpms::derive_proxy_key(g, key, s_a, w);
    store.store_proxy_key(g, proxy, digest);
    if (!opts.out.empty()) {
      write_envelope_file(opts.out, EnvelopeKind::proxykey,
                          idmpms::encode_proxykey_public(g, {proxy.proxy_id, proxy.s_a, digest}));
    }
  }
  std::cout << "proxy key derived and stored for " << id.text() << "\n";
  return kExitOk;
}

int cmd_round1(const CommonOpts& opts, const std::string& id_text, const std::string& receiver,
               const std::string& session) {
  auto backend = opts.make_group();
  const Backend& g = *backend;
  KeyStore store = opts.open_keystore();
  Warrant w = opts.load_warrant();
  Identity id(id_text);
  require_out(opts);
  const std::size_t index = proxy_index_in(w, id);
  auto rng = opts.rng_for("round1", index);

  if (opts.is_lx()) {
    liuxiao::LxUserKey receiver_key = store.load_lx_key(g, Identity(receiver));
    auto [t_j, bcast] = liuxiao::lx_round1(g, id, receiver_key.y, *rng);
    store.store_round1_secret(g, id, session, t_j);
    write_envelope_file(opts.out, EnvelopeKind::r1, encode_lx_round1(g, bcast));
  } else {
    idmpms::PublicParams params = store.load_params(g);
    idmpms::ProxyKey proxy = store.load_proxy_key(g, id, warrant_digest(w));
    auto [t_j, bcast] = idmpms::round1(g, proxy, Identity(receiver), params.p_pub, *rng);
    store.store_round1_secret(g, id, session, t_j);
    write_envelope_file(opts.out, EnvelopeKind::r1, idmpms::encode_round1(g, bcast));
  }
  std::cout << "round-1 broadcast written to " << opts.out << "\n";
  return kExitOk;
}

// Shared by commit / partial / combine: recompute the session keys and the
// deterministic (c, r_p) from the round-1 envelopes and the message file.
struct CommitState {
  Bytes ciphertext;
  group::Scalar r_p;
  std::vector<idmpms::Round1Broadcast> broadcasts;  // idmpms
  std::vector<liuxiao::LxRound1> lx_broadcasts;     // liuxiao
};

CommitState recompute_commit(const Backend& g, const CommonOpts& opts, const Warrant& w,
                             const std::vector<std::string>& r1_paths,
                             const std::string& message_path) {
  CommitState state;
  Bytes message = read_file(message_path);
  if (opts.is_lx()) {
    for (const std::string& path : r1_paths) {
      state.lx_broadcasts.push_back(decode_lx_round1(g, expect_envelope(path, EnvelopeKind::r1)));
    }
    Bytes key = liuxiao::lx_session_key(g, state.lx_broadcasts, w);
    auto [c, r_p] = liuxiao::lx_encrypt_and_commit(g, message, key);
    state.ciphertext = std::move(c);
    state.r_p = std::move(r_p);
  } else {
    for (const std::string& path : r1_paths) {
      state.broadcasts.push_back(
          idmpms::decode_round1(g, expect_envelope(path, EnvelopeKind::r1)));
    }
    idmpms::SessionKeys keys = idmpms::derive_session_keys(g, state.broadcasts, w);
    auto [c, r_p] = idmpms::encrypt_and_commit(g, message, keys);
    state.ciphertext = std::move(c);
    state.r_p = std::move(r_p);
  }
  return state;
}

int cmd_commit(const CommonOpts& opts, const std::vector<std::string>& r1_paths,
               const std::string& message_path) {
  auto backend = opts.make_group();
  Warrant w = opts.load_warrant();
  CommitState state = recompute_commit(*backend, opts, w, r1_paths, message_path);
  if (!opts.out.empty()) write_file_atomic(opts.out, state.ciphertext);
  std::cout << "r_p=" << hex_encode(backend->encode_scalar(state.r_p)) << "\n";
  return kExitOk;
}

int cmd_partial(const CommonOpts& opts, const std::string& id_text,
                const std::vector<std::string>& r1_paths, const std::string& message_path,
                const std::string& session) {
  auto backend = opts.make_group();
  const Backend& g = *backend;
  KeyStore store = opts.open_keystore();
  Warrant w = opts.load_warrant();
  Identity id(id_text);
  require_out(opts);
  CommitState state = recompute_commit(g, opts, w, r1_paths, message_path);
  group::Scalar t_j = store.load_round1_secret(g, id, session);
  idmpms::ProxyKey proxy = store.load_proxy_key(g, id, warrant_digest(w));
  if (opts.is_lx()) {
    liuxiao::LxPartial part = liuxiao::lx_partial_sign(
        g, liuxiao::LxProxyKey{proxy.proxy_id, proxy.s_a, proxy.s_pj}, t_j, state.r_p);
    write_envelope_file(opts.out, EnvelopeKind::partial,
                        idmpms::encode_partial(g, {part.proxy_id, part.u_pj}));
  } else {
    idmpms::PublicParams params = store.load_params(g);
    idmpms::PartialSigncryption part = idmpms::partial_sign(g, proxy, t_j, state.r_p,
                                                            params.p_pub);
    write_envelope_file(opts.out, EnvelopeKind::partial, idmpms::encode_partial(g, part));
  }
  std::cout << "partial signcryption written to " << opts.out << "\n";
  return kExitOk;
}

int cmd_combine(const CommonOpts& opts, const std::string& id_text,
                const std::vector<std::string>& r1_paths,
                const std::vector<std::string>& partial_paths, const std::string& message_path) {
  auto backend = opts.make_group();
  const Backend& g = *backend;
  KeyStore store = opts.open_keystore();
  Warrant w = opts.load_warrant();
  Identity clerk(id_text);
  require_out(opts);
  CommitState state = recompute_commit(g, opts, w, r1_paths, message_path);
  idmpms::ProxyKey clerk_key = store.load_proxy_key(g, clerk, warrant_digest(w));

  if (opts.is_lx()) {
    std::vector<liuxiao::LxPartial> parts;
    for (const std::string& path : partial_paths) {
      idmpms::PartialSigncryption p =
          idmpms::decode_partial(g, expect_envelope(path, EnvelopeKind::partial));
      parts.push_back(liuxiao::LxPartial{p.proxy_id, p.u_pj});
    }
    liuxiao::LxSigncryption sc = liuxiao::lx_combine(g, parts, clerk_key.s_a, w,
                                                     state.ciphertext, state.r_p,
                                                     opts.effective_now());
    write_envelope_file(opts.out, EnvelopeKind::lxsc, liuxiao::encode_lx_signcryption(g, sc));
  } else {
    idmpms::PublicParams params = store.load_params(g);
    std::vector<idmpms::PartialSigncryption> parts;
    for (const std::string& path : partial_paths) {
      parts.push_back(idmpms::decode_partial(g, expect_envelope(path, EnvelopeKind::partial)));
    }
    idmpms::Signcryption sc =
        idmpms::combine(g, parts, state.broadcasts, clerk_key.s_a, w, state.ciphertext,
                        state.r_p, params.p_pub, opts.effective_now());
    write_envelope_file(opts.out, EnvelopeKind::sc, idmpms::encode_signcryption(g, sc));
  }
  std::cout << "signcryption written to " << opts.out << "\n";
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& sc_path) {
  auto backend = opts.make_group();
  const Backend& g = *backend;
  if (opts.is_lx()) {
    std::cerr << "verify: the liuxiao scheme has no public verification; "
                 "only the receiver can verify (use unsigncrypt)\n";
    return kExitVerifyFailure;
  }
  KeyStore store = opts.open_keystore();
  idmpms::PublicParams params = store.load_params(g);
  idmpms::Signcryption sc =
      idmpms::decode_signcryption(g, expect_envelope(sc_path, EnvelopeKind::sc));
  if (!idmpms::public_verify(g, sc, params.p_pub, opts.effective_now())) {
    std::cerr << "verify: signcryption is NOT valid\n";
    return kExitVerifyFailure;
  }
  std::cout << "verify: signcryption is valid (public data only)\n";
  return kExitOk;
}

int cmd_unsigncrypt(const CommonOpts& opts, const std::string& id_text,
                    const std::string& sc_path) {
  auto backend = opts.make_group();
  const Backend& g = *backend;
  KeyStore store = opts.open_keystore();
  Identity id(id_text);
  Bytes plaintext;
  if (opts.is_lx()) {
    liuxiao::LxSigncryption sc =
        liuxiao::decode_lx_signcryption(g, expect_envelope(sc_path, EnvelopeKind::lxsc));
    liuxiao::LxUserKey receiver = store.load_lx_key(g, id);
    std::vector<liuxiao::LxUserPublic> proxies;
    for (const Identity& proxy : sc.warrant.proxy_ids) {
      proxies.push_back(liuxiao::lx_public(store.load_lx_key(g, proxy)));
    }
    plaintext = liuxiao::lx_unsigncrypt(g, sc, receiver, proxies, opts.effective_now());
  } else {
    idmpms::PublicParams params = store.load_params(g);
    idmpms::Signcryption sc =
        idmpms::decode_signcryption(g, expect_envelope(sc_path, EnvelopeKind::sc));
    idmpms::UserKey receiver = store.load_user_key(g, id);
    plaintext = idmpms::unsigncrypt(g, sc, receiver, params.p_pub, opts.effective_now());
  }
  if (!opts.out.empty()) {
    write_file_atomic(opts.out, plaintext);
    std::cout << "plaintext written to " << opts.out << "\n";
  } else {
    std::cout.write(reinterpret_cast<const char*>(plaintext.data()),
                    static_cast<std::streamsize>(plaintext.size()));
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_demo(const CommonOpts& opts, std::size_t n, std::size_t l, const std::string& message,
             const std::string& adversary) {
  session::SessionConfig cfg;
  cfg.scheme = session::scheme_from_name(opts.scheme);
  cfg.backend = group::backend_kind_from_name(opts.backend);
  cfg.n = n;
  cfg.l = l;
  if (opts.seeded) {
    cfg.seed = opts.seed;
  } else {
    Bytes random = SystemRng{}.bytes(8);
    cfg.seed = ByteReader(random).read_u64le();
  }
  cfg.message = to_bytes(message);
  if (opts.now_set) cfg.now = opts.now;
  if (!adversary.empty()) {
    // role:index:behavior, e.g. proxy:1:bad-partial
    auto first = adversary.find(':');
    auto second = adversary.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw Error(Errc::invalid_config, "--adversary must be role:index:behavior");
    }
    session::AdversarySpec spec;
    std::string role = adversary.substr(0, first);
    if (role == "original") {
      spec.role = session::Role::original;
    } else if (role == "proxy") {
      spec.role = session::Role::proxy;
    } else {
      throw Error(Errc::invalid_config, "adversary role must be original or proxy");
    }
    spec.index = std::stoul(adversary.substr(first + 1, second - first - 1));
    spec.behavior = session::behavior_from_name(adversary.substr(second + 1));
    cfg.adversaries.push_back(spec);
  }

  session::SessionTranscript transcript = session::run_session(cfg);
  std::string path = opts.out.empty() ? "pairmps-transcript.txt" : opts.out;
  std::string text = transcript.to_text();
  write_file_atomic(path,
                    ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  std::cout << "transcript: " << path << "\n";
  if (transcript.accepted) {
    std::cout << "verdict: accept\nrecovered plaintext: "
              << to_string(transcript.recovered_plaintext) << "\n";
    return kExitOk;
  }
  std::cout << "verdict: reject at stage " << transcript.reject_stage;
  if (!transcript.culprit.empty()) std::cout << " (culprit: " << transcript.culprit << ")";
  std::cout << "\n";
  return kExitVerifyFailure;
}

int cmd_bench(const CommonOpts& opts, bool cache) {
  const group::BackendKind kind = group::backend_kind_from_name(opts.backend);
  const std::uint64_t seed = opts.seeded ? opts.seed : 1;
  std::vector<opcount::Row> rows;
  for (session::Scheme scheme : {session::Scheme::idmpms, session::Scheme::liuxiao}) {
    for (opcount::Phase phase : opcount::phases_for(scheme)) {
      for (std::size_t n : {1, 4, 8}) {
        for (std::size_t l : {1, 4, 8}) {
          rows.push_back(opcount::count_phase(scheme, phase, n, l, kind, seed));
        }
      }
      if (cache && phase == opcount::Phase::round1_per_proxy) {
        rows.push_back(opcount::count_phase(scheme, phase, 1, 4, kind, seed, true));
      }
    }
  }
  std::cout << opcount::format_table(rows) << "\n" << opcount::machine_lines(rows);
  if (!opts.out.empty()) {
    std::string machine = opcount::machine_lines(rows);
    write_file_atomic(opts.out, ByteView(reinterpret_cast<const std::uint8_t*>(machine.data()),
                                         machine.size()));
  }
  for (const opcount::Row& row : rows) {
    if (!(row.measured == row.analytic)) {
      std::cerr << "bench: measured counts deviate from the analytic table\n";
      return kExitVerifyFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairmps: identity-based multi-proxy multi-signcryption toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string id_text;
  std::string receiver;
  std::string session = "default";
  std::string message_path;
  std::string sc_path;
  std::string adversary;
  std::string demo_message = "pairmps demo message";
  std::vector<std::string> shares, r1s, partials;
  std::size_t n = 2, l = 2;
  bool cache = false;

  auto* setup = app.add_subcommand("setup", "initialize PKG params and master secret");
  add_common(setup, opts, false);

  auto* extract = app.add_subcommand("extract", "derive and store a user key");
  add_common(extract, opts, false, true);
  extract->add_option("--id", id_text, "identity")->required();

  auto* delegate = app.add_subcommand("delegate", "produce a delegation share for a warrant");
  add_common(delegate, opts, true, true);
  delegate->add_option("--id", id_text, "original signcrypter identity")->required();

  auto* verify_delegation =
      app.add_subcommand("verify-delegation", "check delegation shares against a warrant");
  add_common(verify_delegation, opts, true, true);
  verify_delegation->add_option("--dshare", shares, "delegation share envelope(s)")->required();

  auto* proxy_key = app.add_subcommand("proxy-key", "aggregate shares and derive a proxy key");
  add_common(proxy_key, opts, true, true);
  proxy_key->add_option("--id", id_text, "proxy identity")->required();
  proxy_key->add_option("--dshare", shares, "delegation share envelope(s)")->required();

  auto* round1 = app.add_subcommand("round1", "produce the round-1 broadcast");
  add_common(round1, opts, true, true);
  round1->add_option("--id", id_text, "proxy identity")->required();
  round1->add_option("--receiver", receiver, "receiver identity")->required();
  round1->add_option("--session", session, "session label");

  auto* commit = app.add_subcommand("commit", "derive session keys, encrypt, print r_p");
  add_common(commit, opts, true, true);
  commit->add_option("--r1", r1s, "round-1 envelope(s)")->required();
  commit->add_option("--message", message_path, "message file")->required();

  auto* partial = app.add_subcommand("partial", "produce a partial signcryption");
  add_common(partial, opts, true, true);
  partial->add_option("--id", id_text, "proxy identity")->required();
  partial->add_option("--r1", r1s, "round-1 envelope(s)")->required();
  partial->add_option("--message", message_path, "message file")->required();
  partial->add_option("--session", session, "session label");

  auto* combine = app.add_subcommand("combine", "clerk: verify partials, emit the signcryption");
  add_common(combine, opts, true, true);
  combine->add_option("--id", id_text, "clerk identity")->required();
  combine->add_option("--r1", r1s, "round-1 envelope(s)")->required();
  combine->add_option("--partial", partials, "partial envelope(s)")->required();
  combine->add_option("--message", message_path, "message file")->required();

  auto* verify = app.add_subcommand("verify", "publicly verify a signcryption envelope");
  add_common(verify, opts, false, true);
  verify->add_option("--sc", sc_path, "signcryption envelope")->required();

  auto* unsigncrypt = app.add_subcommand("unsigncrypt", "verify and decrypt as the receiver");
  add_common(unsigncrypt, opts, false, true);
  unsigncrypt->add_option("--id", id_text, "receiver identity")->required();
  unsigncrypt->add_option("--sc", sc_path, "signcryption envelope")->required();

  auto* demo = app.add_subcommand("demo", "run a full in-memory session");
  add_common(demo, opts, false, true);
  demo->add_option("--n", n, "original signcrypters");
  demo->add_option("--l", l, "proxy signcrypters");
  demo->add_option("--message", demo_message, "message text");
  demo->add_option("--adversary", adversary, "role:index:behavior");

  auto* bench = app.add_subcommand("bench", "operation-count report for both schemes");
  add_common(bench, opts, false);
  bench->add_flag("--cache", cache, "also report memoized round-1 rows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (setup->parsed()) return cmd_setup(opts);
    if (extract->parsed()) return cmd_extract(opts, id_text);
    if (delegate->parsed()) return cmd_delegate(opts, id_text);
    if (verify_delegation->parsed()) return cmd_verify_delegation(opts, shares);
    if (proxy_key->parsed()) return cmd_proxy_key(opts, id_text, shares);
    if (round1->parsed()) return cmd_round1(opts, id_text, receiver, session);
    if (commit->parsed()) return cmd_commit(opts, r1s, message_path);
    if (partial->parsed()) return cmd_partial(opts, id_text, r1s, message_path, session);
    if (combine->parsed()) return cmd_combine(opts, id_text, r1s, partials, message_path);
    if (verify->parsed()) return cmd_verify(opts, sc_path);
    if (unsigncrypt->parsed()) return cmd_unsigncrypt(opts, id_text, sc_path);
    if (demo->parsed()) return cmd_demo(opts, n, l, demo_message, adversary);
    if (bench->parsed()) return cmd_bench(opts, cache);
  } catch (const Error& e) {
    std::cerr << "pairmps: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "pairmps: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
