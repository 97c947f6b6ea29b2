#include "pairmps/errors.hpp"

namespace pairmps {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_identity: return "InvalidIdentity";
    case Errc::invalid_warrant: return "InvalidWarrant";
    case Errc::malformed_encoding: return "MalformedEncoding";
    case Errc::signer_not_in_warrant: return "SignerNotInWarrant";
    case Errc::proxy_not_in_warrant: return "ProxyNotInWarrant";
    case Errc::missing_share: return "MissingShare";
    case Errc::invalid_share: return "InvalidShare";
    case Errc::missing_broadcast: return "MissingBroadcast";
    case Errc::missing_partial: return "MissingPartial";
    case Errc::invalid_partial: return "InvalidPartial";
    case Errc::verify_failed: return "VerifyFailed";
    case Errc::decrypt_failed: return "DecryptFailed";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::missing_prerequisite: return "MissingPrerequisite";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string culprit)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      culprit_(std::move(culprit)) {}

}  // namespace pairmps
