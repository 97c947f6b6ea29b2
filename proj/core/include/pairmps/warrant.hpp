#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pairmps/bytes.hpp"
#include "pairmps/group.hpp"

namespace pairmps {

inline constexpr std::string_view kTagWarrant = "PAIRMPS/WAR/v1";

// UTF-8 identity string (e.g. an email address), nonempty, at most 256
// bytes. The canonical form is the exact byte sequence; no normalization.
class Identity {
 public:
  explicit Identity(std::string text);  // throws invalid_identity
  const std::string& text() const { return text_; }
  ByteView bytes() const;
  bool operator==(const Identity& other) const = default;

 private:
  std::string text_;
};

// The signed warrant m_w: who may delegate, who may sign, for what scope,
// during which window. The serial makes structurally similar warrants
// distinct.
struct Warrant {
  std::vector<Identity> original_ids;  // n >= 1, no duplicates
  std::vector<Identity> proxy_ids;     // l >= 1, no duplicates
  Bytes scope;
  std::int64_t valid_from = 0;  // unix seconds, valid_from < valid_to
  std::int64_t valid_to = 0;
  std::array<std::uint8_t, 16> serial{};
};

void validate_warrant(const Warrant& w);  // throws invalid_warrant

// Injective canonical encoding: fields in declaration order, every field
// length-prefixed (u32le), sequences prefixed by element count.
Bytes encode_warrant(const Warrant& w);
Warrant decode_warrant(ByteView bytes);

Bytes warrant_digest(const Warrant& w);  // blake2b-32 of the canonical encoding

// true iff valid_from <= now < valid_to.
bool check_validity(const Warrant& w, std::int64_t now);

// h_w = hash_to_scalar(tag_WAR, encode_warrant(w)), in Z_q^*. This scalar
// stands in for H1(m_w) wherever the delegation equations use the warrant
// multiplicatively.
group::Scalar warrant_scalar(const group::Backend& g, const Warrant& w);

bool warrant_lists_original(const Warrant& w, const Identity& id);
bool warrant_lists_proxy(const Warrant& w, const Identity& id);

}  // namespace pairmps
