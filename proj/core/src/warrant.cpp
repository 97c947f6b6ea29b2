#include "pairmps/warrant.hpp"

#include <algorithm>
#include <unordered_set>

#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"

namespace pairmps {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<std::uint8_t>(s[i]);
    std::size_t len;
    if (b0 < 0x80) len = 1;
    else if ((b0 & 0xe0) == 0xc0 && b0 >= 0xc2) len = 2;
    else if ((b0 & 0xf0) == 0xe0) len = 3;
    else if ((b0 & 0xf8) == 0xf0 && b0 <= 0xf4) len = 4;
    else return false;
    if (i + len > s.size()) return false;
    for (std::size_t j = 1; j < len; ++j) {
      if ((static_cast<std::uint8_t>(s[i + j]) & 0xc0) != 0x80) return false;
    }
    i += len;
  }
  return true;
}

void check_no_duplicates(const std::vector<Identity>& ids, const char* which) {
  std::unordered_set<std::string_view> seen;
  for (const Identity& id : ids) {
    if (!seen.insert(id.text()).second) {
      throw Error(Errc::invalid_warrant,
                  std::string("duplicate identity in ") + which + ": " + id.text());
    }
  }
}

}  // namespace

Identity::Identity(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw Error(Errc::invalid_identity, "identity must be nonempty");
  if (text_.size() > 256) throw Error(Errc::invalid_identity, "identity exceeds 256 bytes");
  if (!valid_utf8(text_)) throw Error(Errc::invalid_identity, "identity is not valid UTF-8");
}

ByteView Identity::bytes() const {
  return ByteView(reinterpret_cast<const std::uint8_t*>(text_.data()), text_.size());
}

void validate_warrant(const Warrant& w) {
  if (w.original_ids.empty()) {
    throw Error(Errc::invalid_warrant, "warrant needs at least one original signcrypter");
  }
  if (w.proxy_ids.empty()) {
    throw Error(Errc::invalid_warrant, "warrant needs at least one proxy signcrypter");
  }
  check_no_duplicates(w.original_ids, "original_ids");
  check_no_duplicates(w.proxy_ids, "proxy_ids");
  if (w.valid_from >= w.valid_to) {
    throw Error(Errc::invalid_warrant, "warrant validity window is empty");
  }
}

Bytes encode_warrant(const Warrant& w) {
  validate_warrant(w);
  Bytes out;
  append_u32le(out, static_cast<std::uint32_t>(w.original_ids.size()));
  for (const Identity& id : w.original_ids) append_length_prefixed(out, id.bytes());
  append_u32le(out, static_cast<std::uint32_t>(w.proxy_ids.size()));
  for (const Identity& id : w.proxy_ids) append_length_prefixed(out, id.bytes());
  append_length_prefixed(out, w.scope);
  Bytes window;
  append_i64le(window, w.valid_from);
  append_length_prefixed(out, window);
  window.clear();
  append_i64le(window, w.valid_to);
  append_length_prefixed(out, window);
  append_length_prefixed(out, w.serial);
  return out;
}

Warrant decode_warrant(ByteView bytes) {
  ByteReader reader(bytes);
  Warrant w;
  try {
    const std::uint32_t n = reader.read_u32le();
    for (std::uint32_t i = 0; i < n; ++i) {
      w.original_ids.emplace_back(to_string(reader.read_length_prefixed()));
    }
    const std::uint32_t l = reader.read_u32le();
    for (std::uint32_t i = 0; i < l; ++i) {
      w.proxy_ids.emplace_back(to_string(reader.read_length_prefixed()));
    }
    w.scope = reader.read_length_prefixed();
    Bytes from = reader.read_length_prefixed();
    Bytes to = reader.read_length_prefixed();
    if (from.size() != 8 || to.size() != 8) {
      throw Error(Errc::invalid_warrant, "validity window fields must be 8 bytes");
    }
    w.valid_from = ByteReader(from).read_i64le();
    w.valid_to = ByteReader(to).read_i64le();
    Bytes serial = reader.read_length_prefixed();
    if (serial.size() != w.serial.size()) {
      throw Error(Errc::invalid_warrant, "serial must be 16 bytes");
    }
    std::copy(serial.begin(), serial.end(), w.serial.begin());
    reader.expect_end();
  } catch (const Error& e) {
    if (e.code() == Errc::malformed_encoding) {
      throw Error(Errc::invalid_warrant, "truncated or malformed warrant encoding");
    }
    throw;
  }
  validate_warrant(w);
  return w;
}

Bytes warrant_digest(const Warrant& w) {
  return blake2b(32, encode_warrant(w));
}

bool check_validity(const Warrant& w, std::int64_t now) {
  return w.valid_from <= now && now < w.valid_to;
}

group::Scalar warrant_scalar(const group::Backend& g, const Warrant& w) {
  return g.hash_to_scalar(to_bytes(kTagWarrant), encode_warrant(w));
}

bool warrant_lists_original(const Warrant& w, const Identity& id) {
  return std::find(w.original_ids.begin(), w.original_ids.end(), id) != w.original_ids.end();
}

bool warrant_lists_proxy(const Warrant& w, const Identity& id) {
  return std::find(w.proxy_ids.begin(), w.proxy_ids.end(), id) != w.proxy_ids.end();
}

}  // namespace pairmps
