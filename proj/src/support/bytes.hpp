#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wtrace {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline void append(Bytes& out, ByteView more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::string to_hex(ByteView data, bool with_prefix = true);

// Accepts an optional "0x" prefix; throws Error(BadEncoding) on odd length or
// non-hex characters.
Bytes from_hex(std::string_view hex);

bool constant_time_eq(ByteView a, ByteView b);

// Best-effort zeroization of secret material.
void secure_wipe(void* data, std::size_t len);

}  // namespace wtrace
