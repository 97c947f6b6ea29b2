#include "pairmps/bytes.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "pairmps/errors.hpp"

namespace pairmps {

Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

std::string to_string(ByteView b) {
  return std::string(b.begin(), b.end());
}

std::string hex_encode(ByteView b) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(b.size() * 2);
  for (std::uint8_t byte : b) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0x0f]);
  }
  return out;
}

namespace {
int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes hex_decode(std::string_view h) {
  if (h.size() % 2 != 0) {
    throw Error(Errc::malformed_encoding, "odd-length hex string");
  }
  Bytes out;
  out.reserve(h.size() / 2);
  for (std::size_t i = 0; i < h.size(); i += 2) {
    int hi = hex_nibble(h[i]);
    int lo = hex_nibble(h[i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::malformed_encoding, "invalid hex digit");
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

void append_u32le(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append_u64le(Bytes& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append_i64le(Bytes& out, std::int64_t v) {
  append_u64le(out, static_cast<std::uint64_t>(v));
}

void append_bytes(Bytes& out, ByteView b) {
  out.insert(out.end(), b.begin(), b.end());
}

void append_length_prefixed(Bytes& out, ByteView b) {
  if (b.size() > 0xffffffffull) {
    throw Error(Errc::malformed_encoding, "field too long for u32 length prefix");
  }
  append_u32le(out, static_cast<std::uint32_t>(b.size()));
  append_bytes(out, b);
}

std::uint32_t ByteReader::read_u32le() {
  if (remaining() < 4) throw Error(Errc::malformed_encoding, "truncated u32");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::read_u64le() {
  if (remaining() < 8) throw Error(Errc::malformed_encoding, "truncated u64");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

std::int64_t ByteReader::read_i64le() {
  return static_cast<std::int64_t>(read_u64le());
}

Bytes ByteReader::read_bytes(std::size_t n) {
  if (remaining() < n) throw Error(Errc::malformed_encoding, "truncated field");
  Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

Bytes ByteReader::read_length_prefixed() {
  std::uint32_t len = read_u32le();
  return read_bytes(len);
}

void ByteReader::expect_end() const {
  if (!empty()) throw Error(Errc::malformed_encoding, "trailing bytes after payload");
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::missing_prerequisite, "cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::missing_prerequisite, "read error on " + path);
  return data;
}

void write_file_atomic(const std::string& path, ByteView data) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  std::random_device rd;
  fs::path tmp = dir / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::missing_prerequisite, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out.good()) throw Error(Errc::missing_prerequisite, "write error on " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace pairmps
