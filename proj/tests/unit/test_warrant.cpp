#include "doctest.h"

#include "pairmps/errors.hpp"
#include "pairmps/mock_backend.hpp"
#include "pairmps/rng.hpp"
#include "pairmps/warrant.hpp"

using namespace pairmps;

namespace {

Warrant sample_warrant() {
  Warrant w;
  w.original_ids = {Identity("alice@example.com"), Identity("bob@example.com")};
  w.proxy_ids = {Identity("petra@example.com")};
  w.scope = to_bytes("quarterly statements");
  w.valid_from = 1000;
  w.valid_to = 2000;
  for (std::size_t i = 0; i < w.serial.size(); ++i) w.serial[i] = static_cast<std::uint8_t>(i);
  return w;
}

Warrant random_warrant(RandomSource& rng) {
  auto ru8 = [&rng] { return rng.bytes(1)[0]; };
  Warrant w;
  const std::size_t n = 1 + ru8() % 4;
  const std::size_t l = 1 + ru8() % 4;
  for (std::size_t i = 0; i < n; ++i) {
    w.original_ids.push_back(Identity("orig" + std::to_string(i) + "-" + hex_encode(rng.bytes(4))));
  }
  for (std::size_t j = 0; j < l; ++j) {
    w.proxy_ids.push_back(Identity("proxy" + std::to_string(j) + "-" + hex_encode(rng.bytes(4))));
  }
  w.scope = rng.bytes(ru8() % 32);
  w.valid_from = static_cast<std::int64_t>(ru8());
  w.valid_to = w.valid_from + 1 + ru8();
  rng.fill(w.serial.data(), w.serial.size());
  return w;
}

}  // namespace

TEST_CASE("identity validation") {
  CHECK_THROWS_AS(Identity(""), Error);
  CHECK_THROWS_AS(Identity(std::string(257, 'a')), Error);
  CHECK_THROWS_AS(Identity("\xff\xfe"), Error);  // not UTF-8
  CHECK_NOTHROW(Identity(std::string(256, 'a')));
  CHECK_NOTHROW(Identity("grüß@example.com"));
}

TEST_CASE("warrant invariants") {
  Warrant w = sample_warrant();
  CHECK_NOTHROW(validate_warrant(w));

  Warrant no_originals = w;
  no_originals.original_ids.clear();
  CHECK_THROWS_AS(validate_warrant(no_originals), Error);

  Warrant dup = w;
  dup.proxy_ids.push_back(dup.proxy_ids.front());
  CHECK_THROWS_AS(validate_warrant(dup), Error);

  Warrant window = w;
  window.valid_to = window.valid_from;
  CHECK_THROWS_AS(validate_warrant(window), Error);
}

TEST_CASE("warrant encoding: determinism, injectivity probes, round trip") {
  Warrant w = sample_warrant();
  CHECK(encode_warrant(w) == encode_warrant(w));

  Warrant other = sample_warrant();
  other.serial[15] ^= 1;
  CHECK(encode_warrant(w) != encode_warrant(other));

  Warrant back = decode_warrant(encode_warrant(w));
  CHECK(encode_warrant(back) == encode_warrant(w));
  CHECK(back.original_ids == w.original_ids);
  CHECK(back.proxy_ids == w.proxy_ids);
  CHECK(back.scope == w.scope);
  CHECK(back.valid_from == w.valid_from);
  CHECK(back.valid_to == w.valid_to);
  CHECK(back.serial == w.serial);
}

TEST_CASE("warrant encoding: 1000 random mutated pairs stay distinct") {
  DeterministicRng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    Warrant a = random_warrant(rng);
    Warrant b = a;
    switch (rng.bytes(1)[0] % 5) {
      case 0: b.serial[rng.bytes(1)[0] % 16] ^= 0x01; break;
      case 1: b.scope.push_back(0x7a); break;
      case 2: b.valid_to += 1; break;
      case 3: b.original_ids.push_back(Identity("extra@x")); break;
      default: b.proxy_ids.back() = Identity(b.proxy_ids.back().text() + "z"); break;
    }
    CHECK(encode_warrant(a) != encode_warrant(b));
  }
}

TEST_CASE("warrant decode rejects malformed input") {
  Warrant w = sample_warrant();
  Bytes enc = encode_warrant(w);
  Bytes truncated(enc.begin(), enc.end() - 3);
  CHECK_THROWS_AS((void)decode_warrant(truncated), Error);
  Bytes padded = enc;
  padded.push_back(0);
  CHECK_THROWS_AS((void)decode_warrant(padded), Error);
  CHECK_THROWS_AS((void)decode_warrant(Bytes{}), Error);
}

TEST_CASE("check_validity window boundaries") {
  Warrant w = sample_warrant();
  CHECK(check_validity(w, w.valid_from));
  CHECK_FALSE(check_validity(w, w.valid_to));
  CHECK_FALSE(check_validity(w, w.valid_from - 1));
  CHECK(check_validity(w, w.valid_to - 1));
}

TEST_CASE("warrant_scalar is pure and nonzero") {
  auto g = group::make_mock_backend();
  DeterministicRng rng(3);
  for (int i = 0; i < 200; ++i) {
    Warrant w = random_warrant(rng);
    group::Scalar h1 = warrant_scalar(*g, w);
    group::Scalar h2 = warrant_scalar(*g, w);
    CHECK(h1 == h2);
    CHECK_FALSE(h1.is_zero());
  }
}

TEST_CASE("warrant_scalar matches the mock hash rule") {
  auto g = group::make_mock_backend();
  // Find a serial for which the canonical encoding reduces to 2 mod 23.
  Warrant w = sample_warrant();
  bool found = false;
  for (int tweak = 0; tweak < 256 && !found; ++tweak) {
    w.serial[15] = static_cast<std::uint8_t>(tweak);
    mpz_class v;
    Bytes enc = encode_warrant(w);
    mpz_import(v.get_mpz_t(), enc.size(), 1, 1, 0, 0, enc.data());
    if (v % 23 == 2) found = true;
  }
  REQUIRE(found);
  CHECK(warrant_scalar(*g, w) == g->scalar_from_u64(2));
}
