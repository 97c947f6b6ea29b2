#include "pairmps/keystore.hpp"

#include <sodium.h>

#include <filesystem>
#include <nlohmann/json.hpp>

#include "pairmps/envelope.hpp"
#include "pairmps/errors.hpp"
#include "pairmps/hashing.hpp"

namespace pairmps {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kMetaFile = "keystore.json";
constexpr const char* kParamsFile = "params.env";
constexpr const char* kPkgFile = "pkg.json";

json read_json(const std::string& path) {
  Bytes raw = read_file(path);
  json j = json::parse(raw.begin(), raw.end(), nullptr, false);
  if (j.is_discarded()) {
    throw Error(Errc::malformed_encoding, "invalid JSON in " + path);
  }
  return j;
}

void write_json(const std::string& path, const json& j) {
  std::string text = j.dump(2);
  text.push_back('\n');
  write_file_atomic(path, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()),
                                   text.size()));
}

}  // namespace

KeyStore::KeyStore(std::string directory, std::string passphrase) : dir_(std::move(directory)) {
  init_crypto();
  fs::create_directories(dir_);
  const std::string meta_path = dir_ + "/" + kMetaFile;
  Bytes salt(crypto_pwhash_SALTBYTES);
  if (fs::exists(meta_path)) {
    json meta = read_json(meta_path);
    if (meta.value("version", 0) != 1 || meta.value("kdf", "") != "argon2id") {
      throw Error(Errc::malformed_encoding, "unsupported keystore format in " + meta_path);
    }
    salt = hex_decode(meta.at("salt").get<std::string>());
    if (salt.size() != crypto_pwhash_SALTBYTES) {
      throw Error(Errc::malformed_encoding, "bad keystore salt");
    }
  } else {
    randombytes_buf(salt.data(), salt.size());
    json meta = {{"version", 1}, {"kdf", "argon2id"}, {"salt", hex_encode(salt)}};
    write_json(meta_path, meta);
  }
  master_key_.resize(crypto_secretbox_KEYBYTES);
  if (crypto_pwhash(master_key_.data(), master_key_.size(), passphrase.data(), passphrase.size(),
                    salt.data(), crypto_pwhash_OPSLIMIT_INTERACTIVE,
                    crypto_pwhash_MEMLIMIT_INTERACTIVE, crypto_pwhash_ALG_ARGON2ID13) != 0) {
    throw Error(Errc::internal, "passphrase key derivation failed");
  }
}

Bytes KeyStore::seal(ByteView plaintext) const {
  Bytes out(crypto_secretbox_NONCEBYTES + plaintext.size() + crypto_secretbox_MACBYTES);
  randombytes_buf(out.data(), crypto_secretbox_NONCEBYTES);
  crypto_secretbox_easy(out.data() + crypto_secretbox_NONCEBYTES, plaintext.data(),
                        plaintext.size(), out.data(), master_key_.data());
  return out;
}

Bytes KeyStore::open(ByteView box) const {
  if (box.size() < crypto_secretbox_NONCEBYTES + crypto_secretbox_MACBYTES) {
    throw Error(Errc::decrypt_failed, "keystore record too short");
  }
  Bytes out(box.size() - crypto_secretbox_NONCEBYTES - crypto_secretbox_MACBYTES);
  if (crypto_secretbox_open_easy(out.data(), box.data() + crypto_secretbox_NONCEBYTES,
                                 box.size() - crypto_secretbox_NONCEBYTES, box.data(),
                                 master_key_.data()) != 0) {
    throw Error(Errc::decrypt_failed,
                "cannot unseal keystore record (wrong passphrase or corrupt file)");
  }
  return out;
}

std::string KeyStore::record_path(std::string_view prefix, ByteView token) const {
  return dir_ + "/" + std::string(prefix) + "-" + hex_encode(blake2b(16, token)) + ".json";
}

// --- params / PKG ---

void KeyStore::store_params(const group::Backend& g, const idmpms::PublicParams& params) {
  write_envelope_file(dir_ + "/" + kParamsFile, EnvelopeKind::params, params.encode(g));
}

idmpms::PublicParams KeyStore::load_params(const group::Backend& g) const {
  Bytes payload = expect_envelope(dir_ + "/" + kParamsFile, EnvelopeKind::params);
  return idmpms::PublicParams::decode(g, payload);
}

bool KeyStore::has_params() const {
  return fs::exists(dir_ + "/" + kParamsFile);
}

std::string KeyStore::params_backend_name() const {
  Bytes payload = expect_envelope(dir_ + "/" + kParamsFile, EnvelopeKind::params);
  return idmpms::PublicParams::peek_backend_name(payload);
}

void KeyStore::store_master_secret(const group::Backend& g, const group::Scalar& s) {
  json record = {{"box", hex_encode(seal(g.encode_scalar(s)))}};
  write_json(dir_ + "/" + kPkgFile, record);
}

group::Scalar KeyStore::load_master_secret(const group::Backend& g) const {
  json record = read_json(dir_ + "/" + kPkgFile);
  return g.decode_scalar(open(hex_decode(record.at("box").get<std::string>())));
}

// --- idmpms user keys ---

void KeyStore::store_user_key(const group::Backend& g, const idmpms::UserKey& key) {
  json record = {
      {"identity", key.id.text()},
      {"scheme", "idmpms"},
      {"q_id", hex_encode(g.encode_g1(key.q_id))},
      {"s_id_box", hex_encode(seal(g.encode_g1(key.s_id)))},
  };
  write_json(record_path("user", key.id.bytes()), record);
}

idmpms::UserKey KeyStore::load_user_key(const group::Backend& g, const Identity& id) const {
  const std::string path = record_path("user", id.bytes());
  json record = read_json(path);
  if (record.value("identity", "") != id.text() || record.value("scheme", "") != "idmpms") {
    throw Error(Errc::malformed_encoding, "keystore record mismatch in " + path);
  }
  idmpms::UserKey key{
      id,
      g.decode_g1(hex_decode(record.at("q_id").get<std::string>())),
      g.decode_g1(open(hex_decode(record.at("s_id_box").get<std::string>()))),
  };
  idmpms::PublicParams params = load_params(g);
  if (!idmpms::check_user_key(g, key, params.p_pub)) {
    throw Error(Errc::verify_failed, "keystore record for '" + id.text() +
                                         "' fails the extraction check against stored params");
  }
  return key;
}

// --- proxy keys ---

void KeyStore::store_proxy_key(const group::Backend& g, const idmpms::ProxyKey& key,
                               ByteView warrant_digest) {
  Bytes token(key.proxy_id.bytes().begin(), key.proxy_id.bytes().end());
  append_bytes(token, warrant_digest);
  json record = {
      {"identity", key.proxy_id.text()},
      {"warrant_digest", hex_encode(warrant_digest)},
      {"s_a", hex_encode(g.encode_g1(key.s_a))},
      {"s_pj_box", hex_encode(seal(g.encode_g1(key.s_pj)))},
  };
  write_json(record_path("proxykey", token), record);
}

idmpms::ProxyKey KeyStore::load_proxy_key(const group::Backend& g, const Identity& id,
                                          ByteView warrant_digest) const {
  Bytes token(id.bytes().begin(), id.bytes().end());
  append_bytes(token, warrant_digest);
  const std::string path = record_path("proxykey", token);
  json record = read_json(path);
  if (record.value("identity", "") != id.text() ||
      record.value("warrant_digest", "") != hex_encode(warrant_digest)) {
    throw Error(Errc::malformed_encoding, "keystore record mismatch in " + path);
  }
  return idmpms::ProxyKey{
      id,
      g.decode_g1(hex_decode(record.at("s_a").get<std::string>())),
      g.decode_g1(open(hex_decode(record.at("s_pj_box").get<std::string>()))),
  };
}

// --- round-1 secrets ---

void KeyStore::store_round1_secret(const group::Backend& g, const Identity& id,
                                   std::string_view session, const group::Scalar& t_j) {
  Bytes token(id.bytes().begin(), id.bytes().end());
  append_length_prefixed(token, to_bytes(session));
  json record = {
      {"identity", id.text()},
      {"session", std::string(session)},
      {"t_box", hex_encode(seal(g.encode_scalar(t_j)))},
  };
  write_json(record_path("round1", token), record);
}

group::Scalar KeyStore::load_round1_secret(const group::Backend& g, const Identity& id,
                                           std::string_view session) const {
  Bytes token(id.bytes().begin(), id.bytes().end());
  append_length_prefixed(token, to_bytes(session));
  json record = read_json(record_path("round1", token));
  return g.decode_scalar(open(hex_decode(record.at("t_box").get<std::string>())));
}

// --- liuxiao keys ---

void KeyStore::store_lx_key(const group::Backend& g, const liuxiao::LxUserKey& key) {
  json record = {
      {"identity", key.id.text()},
      {"scheme", "liuxiao"},
      {"y", hex_encode(g.encode_g1(key.y))},
      {"x_box", hex_encode(seal(g.encode_scalar(key.x)))},
  };
  write_json(record_path("lx", key.id.bytes()), record);
}

liuxiao::LxUserKey KeyStore::load_lx_key(const group::Backend& g, const Identity& id) const {
  const std::string path = record_path("lx", id.bytes());
  json record = read_json(path);
  if (record.value("identity", "") != id.text() || record.value("scheme", "") != "liuxiao") {
    throw Error(Errc::malformed_encoding, "keystore record mismatch in " + path);
  }
  liuxiao::LxUserKey key{
      id,
      g.decode_scalar(open(hex_decode(record.at("x_box").get<std::string>()))),
      g.decode_g1(hex_decode(record.at("y").get<std::string>())),
  };
  if (g.g1_mul(g.generator(), key.x) != key.y) {
    throw Error(Errc::verify_failed,
                "keystore record for '" + id.text() + "' fails the x*P = y check");
  }
  return key;
}

}  // namespace pairmps
