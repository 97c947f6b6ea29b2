#pragma once

#include <optional>
#include <string>

#include "pairmps/idmpms.hpp"
#include "pairmps/liuxiao.hpp"

namespace pairmps {

// Directory of identity -> key records. Public params live alongside the
// records; every secret (master secret, S_ID, S_pj, t_j, x) is sealed with
// a key derived from the keystore passphrase (argon2id, directory-level
// salt), XSalsa20-Poly1305 per record. Loading a user key re-checks the
// extraction invariant e(S_ID, P) = e(Q_ID, P_pub) before returning it.
class KeyStore {
 public:
  // Opens or initializes the directory. The passphrase normally arrives via
  // the PAIRMPS_PASSPHRASE environment variable; it is never a flag.
  KeyStore(std::string directory, std::string passphrase);

  const std::string& directory() const { return dir_; }

  // --- params / PKG ---
  void store_params(const group::Backend& g, const idmpms::PublicParams& params);
  idmpms::PublicParams load_params(const group::Backend& g) const;
  bool has_params() const;
  // Backend name recorded in the params envelope, for backend discovery.
  std::string params_backend_name() const;

  void store_master_secret(const group::Backend& g, const group::Scalar& s);
  group::Scalar load_master_secret(const group::Backend& g) const;

  // --- idmpms user keys ---
  void store_user_key(const group::Backend& g, const idmpms::UserKey& key);
  idmpms::UserKey load_user_key(const group::Backend& g, const Identity& id) const;

  // --- idmpms proxy keys, bound to a warrant ---
  void store_proxy_key(const group::Backend& g, const idmpms::ProxyKey& key,
                       ByteView warrant_digest);
  idmpms::ProxyKey load_proxy_key(const group::Backend& g, const Identity& id,
                                  ByteView warrant_digest) const;

  // --- per-session round-1 secrets t_j ---
  void store_round1_secret(const group::Backend& g, const Identity& id, std::string_view session,
                           const group::Scalar& t_j);
  group::Scalar load_round1_secret(const group::Backend& g, const Identity& id,
                                   std::string_view session) const;

  // --- liuxiao keys ---
  void store_lx_key(const group::Backend& g, const liuxiao::LxUserKey& key);
  liuxiao::LxUserKey load_lx_key(const group::Backend& g, const Identity& id) const;

 private:
  Bytes seal(ByteView plaintext) const;
  Bytes open(ByteView box) const;
  std::string record_path(std::string_view prefix, ByteView token) const;

  std::string dir_;
  Bytes master_key_;
};

}  // namespace pairmps
