#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pairmps/counting.hpp"
#include "pairmps/session.hpp"

// Operation-count instrumentation: runs one protocol phase behind a
// counting backend and reports exact pairing / G1-multiplication / Gt-
// exponentiation counts plus wall time, next to the counts read straight
// off the scheme equations. Measured must equal analytic.

namespace pairmps::opcount {

enum class Phase {
  delegation_verify_per_share,
  public_verify,
  unsigncrypt_k2,
  partial_verify,
  round1_per_proxy,
};

const char* phase_name(Phase p);

struct Row {
  session::Scheme scheme;
  Phase phase;
  std::size_t n = 1;
  std::size_t l = 1;
  bool cached = false;  // round-1 pairings memoized within the session
  group::OpCounts measured;
  group::OpCounts analytic;
  std::uint64_t nanos = 0;
};

// Phases that exist in a scheme. Liu-Xiao has no public verification and no
// per-partial check, so those phases are absent there.
std::vector<Phase> phases_for(session::Scheme scheme);

// Counts read off the formulas (per share / per proxy / per invocation;
// independent of n and l).
group::OpCounts analytic_counts(session::Scheme scheme, Phase phase, bool cached);

// Sets up an honest fixture at (n, l), then measures exactly one execution
// of the phase. Throws invalid_config for phases a scheme does not have.
Row count_phase(session::Scheme scheme, Phase phase, std::size_t n, std::size_t l,
                group::BackendKind backend, std::uint64_t seed, bool cached = false);

std::string format_table(std::span<const Row> rows);
// "scheme,phase,n,l,pairings,g1muls,gtexps,nanos" per row.
std::string machine_lines(std::span<const Row> rows);

}  // namespace pairmps::opcount
