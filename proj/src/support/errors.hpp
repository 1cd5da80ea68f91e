#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wtrace {

// One code per error named in the module contracts. The C API exposes the
// same set; keep wtrace.h in sync when extending.
enum class Errc {
  ok = 0,
  // field-hash
  zero_nonce,
  decode_range,
  bad_encoding,
  // crypto-identity
  invalid_point,
  invalid_key,
  auth_failure,
  // custody-relation
  key_mismatch,
  malformed_proof,
  // tag-emulation
  bad_magic,
  unsupported_version,
  truncated_payload,
  payload_too_large,
  id_mismatch,
  // handoff-codec
  bad_prefix,
  consistency_error,
  inconsistent_payload,
  // custody-ledger
  proof_invalid,
  signature_invalid,
  zero_id,
  duplicate_id,
  unknown_parent,
  not_found,
  broken_chain,
  cycle_detected,
  corrupt_ledger,
  // plumbing
  io_error,
  internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wtrace
