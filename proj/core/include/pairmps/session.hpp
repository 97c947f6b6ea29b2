#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pairmps/group.hpp"
#include "pairmps/warrant.hpp"

// Deterministic in-memory multi-party harness: n original signcrypters,
// l proxies (proxy 1 is the clerk), one receiver. Runs the full delegation,
// signcryption and unsigncryption flow over a synchronous, reliable,
// ordered in-memory broadcast bus, with optional single-adversary behaviors,
// and produces a replayable transcript. Identical configs produce
// byte-identical transcripts.

namespace pairmps::session {

enum class Scheme { idmpms, liuxiao };
const char* scheme_name(Scheme s);
Scheme scheme_from_name(std::string_view name);

// Each behavior perturbs exactly one protocol message class. "Random"
// perturbations are honest-value plus a uniformly random nonzero offset, so
// the bad message is guaranteed to differ even at the desk-scale mock
// modulus.
enum class Behavior {
  honest,
  bad_delegation_share,  // original role: S_Ai replaced
  bad_round1,            // proxy role: k1j (or r_pj) inconsistent with t_j
  bad_partial,           // proxy role: u_pj replaced
  withhold_partial,      // proxy role: never sends u_pj
  tamper_ciphertext,     // proxy role: flips a bit of c in the final tuple
  equivocate,            // either role: two conflicting posts on the bus
};
const char* behavior_name(Behavior b);
Behavior behavior_from_name(std::string_view name);

enum class Role { original, proxy };

struct AdversarySpec {
  Role role = Role::proxy;
  std::size_t index = 0;  // 0-based within the role group
  Behavior behavior = Behavior::honest;
};

struct WarrantTemplate {
  Bytes scope;
  std::int64_t valid_from = 1700000000;
  std::int64_t valid_to = 1800000000;
};

struct SessionConfig {
  Scheme scheme = Scheme::idmpms;
  group::BackendKind backend = group::BackendKind::production;
  std::size_t n = 1;
  std::size_t l = 1;
  WarrantTemplate warrant;
  Bytes message;
  std::uint64_t seed = 0;
  std::int64_t now = 1750000000;
  std::vector<AdversarySpec> adversaries;  // at most one
};

struct TranscriptEvent {
  std::string stage;
  std::string actor;
  std::string digest_hex;
  std::string outcome;
};

struct SessionTranscript {
  std::vector<TranscriptEvent> events;
  bool accepted = false;
  std::string reject_stage;  // empty when accepted
  std::string culprit;       // attributed player, when the protocol names one
  Bytes recovered_plaintext;
  Bytes sc_payload;  // canonical SC/LXSC wire bytes, when the run got that far

  // One event per line: "stage | actor | digest-hex | outcome".
  std::string to_text() const;
};

SessionTranscript run_session(const SessionConfig& cfg);  // throws invalid_config

// Deterministic fixtures shared with the file-based CLI flow, so a scripted
// multi-process run reproduces the in-memory harness bit for bit.
Identity original_identity(std::size_t index);
Identity proxy_identity(std::size_t index);
Identity receiver_identity();
Warrant materialize_warrant(const SessionConfig& cfg);

struct ScenarioResult {
  std::string scenario;
  std::size_t runs = 0;
  std::size_t detected = 0;      // rejected at or before unsigncryption
  std::size_t accepted = 0;      // honest acceptances
  std::size_t attributed = 0;    // rejections naming the true culprit
};

struct MatrixSummary {
  std::vector<ScenarioResult> rows;
  bool ok = false;  // every honest run accepted, every adversary detected
  std::string to_text() const;
};

// Honest plus every single-adversary scenario across the size grid.
MatrixSummary run_matrix(Scheme scheme, group::BackendKind backend,
                         std::span<const std::uint64_t> seeds,
                         std::span<const std::size_t> sizes);

}  // namespace pairmps::session
