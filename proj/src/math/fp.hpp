#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "support/bytes.hpp"
#include "support/errors.hpp"

namespace wtrace::math {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Limbs = std::array<u64, 4>;  // little-endian 256-bit value

constexpr int limbs_cmp(const Limbs& a, const Limbs& b) {
  for (int i = 3; i >= 0; --i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

constexpr bool limbs_is_zero(const Limbs& a) {
  return (a[0] | a[1] | a[2] | a[3]) == 0;
}

// returns carry
constexpr u64 limbs_add(Limbs& r, const Limbs& a, const Limbs& b) {
  u64 carry = 0;
  for (int i = 0; i < 4; ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    r[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  return carry;
}

// returns borrow
constexpr u64 limbs_sub(Limbs& r, const Limbs& a, const Limbs& b) {
  u64 borrow = 0;
  for (int i = 0; i < 4; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    r[i] = static_cast<u64>(d);
    borrow = static_cast<u64>((d >> 64) != 0);
  }
  return borrow;
}

constexpr Limbs parse_decimal_limbs(std::string_view dec) {
  Limbs acc{0, 0, 0, 0};
  for (char c : dec) {
    u64 carry = static_cast<u64>(c - '0');
    for (int i = 0; i < 4; ++i) {
      u128 v = static_cast<u128>(acc[i]) * 10 + carry;
      acc[i] = static_cast<u64>(v);
      carry = static_cast<u64>(v >> 64);
    }
  }
  return acc;
}

// -p^{-1} mod 2^64 for odd p
constexpr u64 mont_neg_inv(u64 p0) {
  u64 inv = 1;
  for (int i = 0; i < 6; ++i) {
    inv *= 2 - p0 * inv;
  }
  return ~inv + 1;
}

constexpr Limbs mod_double(const Limbs& a, const Limbs& p) {
  Limbs r{};
  u64 carry = limbs_add(r, a, a);
  if (carry != 0 || limbs_cmp(r, p) >= 0) {
    limbs_sub(r, r, p);
  }
  return r;
}

// 2^256 mod p (for p with top bit context up to 2^256)
constexpr Limbs compute_r1(const Limbs& p) {
  // 2^256 - p, then reduce fully.
  Limbs zero{0, 0, 0, 0};
  Limbs r{};
  limbs_sub(r, zero, p);  // wraps to 2^256 - p
  while (limbs_cmp(r, p) >= 0) {
    limbs_sub(r, r, p);
  }
  return r;
}

// 2^512 mod p
constexpr Limbs compute_r2(const Limbs& p) {
  Limbs r = compute_r1(p);
  for (int i = 0; i < 256; ++i) {
    r = mod_double(r, p);
  }
  return r;
}

// Prime-field element in Montgomery form. Params provides the modulus as a
// decimal string; everything else is derived at compile time.
template <typename Params>
class Fp {
 public:
  static constexpr Limbs kModulus = parse_decimal_limbs(Params::kModulusDec);
  static constexpr u64 kNegInv = mont_neg_inv(kModulus[0]);
  static constexpr Limbs kR1 = compute_r1(kModulus);      // to_mont(1)
  static constexpr Limbs kR2 = compute_r2(kModulus);

  constexpr Fp() : mont_{0, 0, 0, 0} {}

  static constexpr Fp zero() { return Fp(); }
  static constexpr Fp one() { return from_mont_limbs(kR1); }

  static constexpr Fp from_u64(u64 v) {
    return from_canonical(Limbs{v, 0, 0, 0});
  }

  // value must already be < p
  static constexpr Fp from_canonical(const Limbs& v) {
    return from_mont_limbs(mont_mul(v, kR2));
  }

  constexpr Limbs to_canonical() const {
    return mont_mul(mont_, Limbs{1, 0, 0, 0});
  }

  static constexpr Fp from_mont_limbs(const Limbs& m) {
    Fp r;
    r.mont_ = m;
    return r;
  }
  constexpr const Limbs& mont_limbs() const { return mont_; }

  constexpr bool is_zero() const { return limbs_is_zero(mont_); }

  friend constexpr bool operator==(const Fp& a, const Fp& b) {
    return a.mont_ == b.mont_;
  }
  friend constexpr bool operator!=(const Fp& a, const Fp& b) {
    return a.mont_ != b.mont_;
  }

  friend constexpr Fp operator+(const Fp& a, const Fp& b) {
    Fp r;
    u64 carry = limbs_add(r.mont_, a.mont_, b.mont_);
    if (carry != 0 || limbs_cmp(r.mont_, kModulus) >= 0) {
      limbs_sub(r.mont_, r.mont_, kModulus);
    }
    return r;
  }

  friend constexpr Fp operator-(const Fp& a, const Fp& b) {
    Fp r;
    u64 borrow = limbs_sub(r.mont_, a.mont_, b.mont_);
    if (borrow != 0) {
      limbs_add(r.mont_, r.mont_, kModulus);
    }
    return r;
  }

  constexpr Fp operator-() const {
    if (is_zero()) return *this;
    Fp r;
    limbs_sub(r.mont_, kModulus, mont_);
    return r;
  }

  friend constexpr Fp operator*(const Fp& a, const Fp& b) {
    return from_mont_limbs(mont_mul(a.mont_, b.mont_));
  }

  constexpr Fp square() const { return *this * *this; }

  constexpr Fp dbl() const { return *this + *this; }

  // Left-to-right square-and-multiply over an arbitrary-width exponent
  // (little-endian limbs, leading zero limbs allowed).
  constexpr Fp pow(std::span<const u64> exponent) const {
    int top = static_cast<int>(exponent.size()) - 1;
    while (top >= 0 && exponent[static_cast<std::size_t>(top)] == 0) --top;
    if (top < 0) return one();
    Fp acc = one();
    bool started = false;
    for (int limb = top; limb >= 0; --limb) {
      for (int bit = 63; bit >= 0; --bit) {
        if (started) acc = acc.square();
        if ((exponent[static_cast<std::size_t>(limb)] >> bit) & 1) {
          if (started) {
            acc = acc * *this;
          } else {
            acc = *this;
            started = true;
          }
        }
      }
    }
    return started ? acc : one();
  }

  constexpr Fp pow(const Limbs& exponent) const {
    return pow(std::span<const u64>(exponent.data(), 4));
  }

  constexpr Fp pow(u64 exponent) const {
    Limbs e{exponent, 0, 0, 0};
    return pow(e);
  }

  // Fermat inversion; inverse of zero is zero.
  constexpr Fp inverse() const {
    Limbs p_minus_2 = kModulus;
    Limbs two{2, 0, 0, 0};
    limbs_sub(p_minus_2, p_minus_2, two);
    return pow(p_minus_2);
  }

  // --- codecs ---

  std::array<std::uint8_t, 32> to_bytes_be() const {
    Limbs c = to_canonical();
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 4; ++i) {
      u64 limb = c[3 - i];
      for (int j = 0; j < 8; ++j) {
        out[static_cast<std::size_t>(i * 8 + j)] =
            static_cast<std::uint8_t>(limb >> (56 - 8 * j));
      }
    }
    return out;
  }

  static Fp from_bytes_be(ByteView bytes) {
    if (bytes.size() != 32) {
      raise(Errc::decode_range, "field element must be exactly 32 bytes");
    }
    Limbs c{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u64 limb = 0;
      for (int j = 0; j < 8; ++j) {
        limb = (limb << 8) | bytes[static_cast<std::size_t>(i * 8 + j)];
      }
      c[3 - i] = limb;
    }
    if (limbs_cmp(c, kModulus) >= 0) {
      raise(Errc::decode_range, "value is not below the field modulus");
    }
    return from_canonical(c);
  }

  std::string to_decimal() const {
    Limbs c = to_canonical();
    if (limbs_is_zero(c)) return "0";
    std::string digits;
    while (!limbs_is_zero(c)) {
      u64 rem = 0;
      for (int i = 3; i >= 0; --i) {
        u128 cur = (static_cast<u128>(rem) << 64) | c[i];
        c[i] = static_cast<u64>(cur / 10);
        rem = static_cast<u64>(cur % 10);
      }
      digits += static_cast<char>('0' + rem);
    }
    return std::string(digits.rbegin(), digits.rend());
  }

  static Fp from_decimal(std::string_view dec) {
    if (dec.empty() || dec.size() > 78) {
      raise(Errc::decode_range, "bad decimal field element length");
    }
    Limbs acc{0, 0, 0, 0};
    for (char ch : dec) {
      if (ch < '0' || ch > '9') {
        raise(Errc::bad_encoding, "non-digit in decimal field element");
      }
      u64 carry = static_cast<u64>(ch - '0');
      for (int i = 0; i < 4; ++i) {
        u128 v = static_cast<u128>(acc[i]) * 10 + carry;
        acc[i] = static_cast<u64>(v);
        carry = static_cast<u64>(v >> 64);
      }
      if (carry != 0) {
        raise(Errc::decode_range, "decimal value overflows 256 bits");
      }
    }
    if (limbs_cmp(acc, kModulus) >= 0) {
      raise(Errc::decode_range, "value is not below the field modulus");
    }
    return from_canonical(acc);
  }

  // Square root for p ≡ 3 (mod 4); returns false when *this is a non-residue.
  bool sqrt(Fp& out) const {
    static_assert((kModulus[0] & 3) == 3, "sqrt shortcut needs p = 3 mod 4");
    Limbs e = kModulus;  // (p + 1) / 4
    u64 carry = 1;
    for (int i = 0; i < 4 && carry; ++i) {
      u64 before = e[static_cast<std::size_t>(i)];
      e[static_cast<std::size_t>(i)] = before + 1;
      carry = (e[static_cast<std::size_t>(i)] == 0) ? 1 : 0;
    }
    // shift right by 2 (p + 1 never overflows: p < 2^256 - 1 for our fields)
    for (int i = 0; i < 4; ++i) {
      e[static_cast<std::size_t>(i)] >>= 2;
      if (i < 3) {
        e[static_cast<std::size_t>(i)] |= e[static_cast<std::size_t>(i + 1)] << 62;
      }
    }
    Fp cand = pow(e);
    if (cand.square() == *this) {
      out = cand;
      return true;
    }
    return false;
  }

 private:
  // CIOS Montgomery multiplication; valid for any odd modulus < 2^256.
  static constexpr Limbs mont_mul(const Limbs& a, const Limbs& b) {
    u64 t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u64 carry = 0;
      for (int j = 0; j < 4; ++j) {
        u128 cur = static_cast<u128>(t[j]) + static_cast<u128>(a[i]) * b[j] + carry;
        t[j] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
      }
      u128 cur = static_cast<u128>(t[4]) + carry;
      t[4] = static_cast<u64>(cur);
      t[5] = static_cast<u64>(cur >> 64);

      const u64 m = t[0] * kNegInv;
      cur = static_cast<u128>(t[0]) + static_cast<u128>(m) * kModulus[0];
      carry = static_cast<u64>(cur >> 64);
      for (int j = 1; j < 4; ++j) {
        cur = static_cast<u128>(t[j]) + static_cast<u128>(m) * kModulus[j] + carry;
        t[j - 1] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
      }
      cur = static_cast<u128>(t[4]) + carry;
      t[3] = static_cast<u64>(cur);
      t[4] = t[5] + static_cast<u64>(cur >> 64);
    }
    Limbs r{t[0], t[1], t[2], t[3]};
    if (t[4] != 0 || limbs_cmp(r, kModulus) >= 0) {
      limbs_sub(r, r, kModulus);
    }
    return r;
  }

  Limbs mont_;
};

}  // namespace wtrace::math
