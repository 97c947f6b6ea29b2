#pragma once

#include <string>
#include <utility>

#include "pairmps/bytes.hpp"

namespace pairmps {

// Protocol message files: one header line "PAIRMPS-<KIND>-V1", then the
// canonical payload hex-armored on the following line(s).
enum class EnvelopeKind { warrant, dshare, proxykey, r1, partial, sc, lxsc, params };

std::string_view envelope_kind_name(EnvelopeKind kind);  // "WARRANT", ...
std::string envelope_header(EnvelopeKind kind);          // "PAIRMPS-WARRANT-V1"

std::string armor_envelope(EnvelopeKind kind, ByteView payload);
std::pair<EnvelopeKind, Bytes> parse_envelope(std::string_view text);

void write_envelope_file(const std::string& path, EnvelopeKind kind, ByteView payload);
std::pair<EnvelopeKind, Bytes> read_envelope_file(const std::string& path);
// Reads and checks the kind; returns the payload.
Bytes expect_envelope(const std::string& path, EnvelopeKind kind);

}  // namespace pairmps
