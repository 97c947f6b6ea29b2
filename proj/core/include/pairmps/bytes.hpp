#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pairmps {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteView b);

std::string hex_encode(ByteView b);
Bytes hex_decode(std::string_view h);  // throws Errc::malformed_encoding

void append_u32le(Bytes& out, std::uint32_t v);
void append_u64le(Bytes& out, std::uint64_t v);
void append_i64le(Bytes& out, std::int64_t v);
void append_bytes(Bytes& out, ByteView b);

// u32 little-endian length, then the bytes. The framing used by every
// canonical encoding in this project.
void append_length_prefixed(Bytes& out, ByteView b);

// Cursor over an immutable buffer; any underrun throws malformed_encoding.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint32_t read_u32le();
  std::uint64_t read_u64le();
  std::int64_t read_i64le();
  Bytes read_bytes(std::size_t n);
  Bytes read_length_prefixed();
  std::size_t remaining() const { return data_.size() - pos_; }
  bool empty() const { return remaining() == 0; }
  // Decoders call this last: trailing garbage is a malformed encoding.
  void expect_end() const;

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

Bytes read_file(const std::string& path);  // throws missing_prerequisite
// Write-temp-then-rename so concurrent readers never see partial files.
void write_file_atomic(const std::string& path, ByteView data);

}  // namespace pairmps
