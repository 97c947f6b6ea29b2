#include "pairmps/envelope.hpp"

#include <array>

#include "pairmps/errors.hpp"

namespace pairmps {

namespace {

constexpr std::array<std::pair<EnvelopeKind, std::string_view>, 8> kKinds = {{
    {EnvelopeKind::warrant, "WARRANT"},
    {EnvelopeKind::dshare, "DSHARE"},
    {EnvelopeKind::proxykey, "PROXYKEY"},
    {EnvelopeKind::r1, "R1"},
    {EnvelopeKind::partial, "PARTIAL"},
    {EnvelopeKind::sc, "SC"},
    {EnvelopeKind::lxsc, "LXSC"},
    {EnvelopeKind::params, "PARAMS"},
}};

}  // namespace

std::string_view envelope_kind_name(EnvelopeKind kind) {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  throw Error(Errc::internal, "unknown envelope kind");
}

std::string envelope_header(EnvelopeKind kind) {
  return "PAIRMPS-" + std::string(envelope_kind_name(kind)) + "-V1";
}

std::string armor_envelope(EnvelopeKind kind, ByteView payload) {
  return envelope_header(kind) + "\n" + hex_encode(payload) + "\n";
}

std::pair<EnvelopeKind, Bytes> parse_envelope(std::string_view text) {
  const std::size_t eol = text.find('\n');
  std::string_view header = text.substr(0, eol == std::string_view::npos ? text.size() : eol);
  while (!header.empty() && (header.back() == '\r' || header.back() == ' ')) {
    header.remove_suffix(1);
  }
  EnvelopeKind kind{};
  bool found = false;
  for (const auto& [k, name] : kKinds) {
    if (header == envelope_header(k)) {
      kind = k;
      found = true;
      break;
    }
    (void)name;
  }
  if (!found) {
    throw Error(Errc::malformed_encoding, "unrecognized envelope header");
  }
  std::string hex;
  if (eol != std::string_view::npos) {
    for (char c : text.substr(eol + 1)) {
      if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
      hex.push_back(c);
    }
  }
  return {kind, hex_decode(hex)};
}

void write_envelope_file(const std::string& path, EnvelopeKind kind, ByteView payload) {
  std::string armor = armor_envelope(kind, payload);
  write_file_atomic(path, ByteView(reinterpret_cast<const std::uint8_t*>(armor.data()),
                                   armor.size()));
}

std::pair<EnvelopeKind, Bytes> read_envelope_file(const std::string& path) {
  Bytes raw = read_file(path);
  return parse_envelope(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

Bytes expect_envelope(const std::string& path, EnvelopeKind kind) {
  auto [actual, payload] = read_envelope_file(path);
  if (actual != kind) {
    throw Error(Errc::malformed_encoding,
                path + " holds a " + std::string(envelope_kind_name(actual)) + " envelope, " +
                    std::string(envelope_kind_name(kind)) + " expected");
  }
  return payload;
}

}  // namespace pairmps
