#include <openssl/crypto.h>

#include <cctype>

#include "support/bytes.hpp"
#include "support/errors.hpp"

namespace wtrace {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ok: return "Ok";
    case Errc::zero_nonce: return "ZeroNonce";
    case Errc::decode_range: return "DecodeRange";
    case Errc::bad_encoding: return "BadEncoding";
    case Errc::invalid_point: return "InvalidPoint";
    case Errc::invalid_key: return "InvalidKey";
    case Errc::auth_failure: return "AuthFailure";
    case Errc::key_mismatch: return "KeyMismatch";
    case Errc::malformed_proof: return "MalformedProof";
    case Errc::bad_magic: return "BadMagic";
    case Errc::unsupported_version: return "UnsupportedVersion";
    case Errc::truncated_payload: return "TruncatedPayload";
    case Errc::payload_too_large: return "PayloadTooLarge";
    case Errc::id_mismatch: return "IdMismatch";
    case Errc::bad_prefix: return "BadPrefix";
    case Errc::consistency_error: return "ConsistencyError";
    case Errc::inconsistent_payload: return "InconsistentPayload";
    case Errc::proof_invalid: return "ProofInvalid";
    case Errc::signature_invalid: return "SignatureInvalid";
    case Errc::zero_id: return "ZeroId";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::unknown_parent: return "UnknownParent";
    case Errc::not_found: return "NotFound";
    case Errc::broken_chain: return "BrokenChain";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::corrupt_ledger: return "CorruptLedger";
    case Errc::io_error: return "IoError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

std::string to_hex(ByteView data, bool with_prefix) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2 + 2);
  if (with_prefix) out += "0x";
  for (std::uint8_t b : data) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0x0f];
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

Bytes from_hex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  if (hex.size() % 2 != 0) {
    raise(Errc::bad_encoding, "odd-length hex string");
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      raise(Errc::bad_encoding, "non-hex character");
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

bool constant_time_eq(ByteView a, ByteView b) {
  if (a.size() != b.size()) return false;
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void secure_wipe(void* data, std::size_t len) {
  if (data != nullptr && len > 0) OPENSSL_cleanse(data, len);
}

}  // namespace wtrace
