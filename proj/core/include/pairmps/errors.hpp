#pragma once

#include <stdexcept>
#include <string>

namespace pairmps {

enum class Errc {
  invalid_identity,
  invalid_warrant,
  malformed_encoding,
  signer_not_in_warrant,
  proxy_not_in_warrant,
  missing_share,
  invalid_share,
  missing_broadcast,
  missing_partial,
  invalid_partial,
  verify_failed,
  decrypt_failed,
  invalid_config,
  missing_prerequisite,
  internal,
};

const char* errc_name(Errc code);

// Every operation either returns its contract value or throws one of these;
// `culprit` carries the offending party's identity when the protocol can
// attribute the failure (invalid_share, invalid_partial).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string culprit = {});

  Errc code() const noexcept { return code_; }
  const std::string& culprit() const noexcept { return culprit_; }

 private:
  Errc code_;
  std::string culprit_;
};

}  // namespace pairmps
