#pragma once

#include <span>
#include <vector>

#include "math/ec.hpp"
#include "math/fp.hpp"

namespace wtrace::bn254 {

struct FqParams {
  static constexpr std::string_view kModulusDec =
      "21888242871839275222246405745257275088696311157297823662689037894645226208583";
};
struct FrParams {
  static constexpr std::string_view kModulusDec =
      "21888242871839275222246405745257275088548364400416034343698204186575808495617";
};

using Fq = math::Fp<FqParams>;
using Fr = math::Fp<FrParams>;

// Fq2 = Fq[u] / (u^2 + 1)
struct Fq2 {
  Fq c0, c1;

  static Fq2 zero() { return {Fq::zero(), Fq::zero()}; }
  static Fq2 one() { return {Fq::one(), Fq::zero()}; }
  static Fq2 from_base(const Fq& a) { return {a, Fq::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

  friend bool operator==(const Fq2& a, const Fq2& b) = default;

  friend Fq2 operator+(const Fq2& a, const Fq2& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Fq2 operator-(const Fq2& a, const Fq2& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  Fq2 operator-() const { return {-c0, -c1}; }

  friend Fq2 operator*(const Fq2& a, const Fq2& b) {
    Fq t0 = a.c0 * b.c0;
    Fq t1 = a.c1 * b.c1;
    Fq t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
    return {t0 - t1, t2 - t0 - t1};
  }

  Fq2 square() const {
    Fq t0 = (c0 + c1) * (c0 - c1);
    Fq t1 = (c0 * c1).dbl();
    return {t0, t1};
  }

  Fq2 dbl() const { return {c0.dbl(), c1.dbl()}; }

  Fq2 conjugate() const { return {c0, -c1}; }

  Fq2 inverse() const {
    Fq norm = c0.square() + c1.square();
    Fq ni = norm.inverse();
    return {c0 * ni, -(c1 * ni)};
  }

  // multiply by xi = 9 + u (the sextic-twist non-residue)
  Fq2 mul_by_xi() const {
    Fq nine = Fq::from_u64(9);
    return {nine * c0 - c1, c0 + nine * c1};
  }
};

// Fq6 = Fq2[v] / (v^3 - xi)
struct Fq6 {
  Fq2 c0, c1, c2;

  static Fq6 zero() { return {Fq2::zero(), Fq2::zero(), Fq2::zero()}; }
  static Fq6 one() { return {Fq2::one(), Fq2::zero(), Fq2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }

  friend bool operator==(const Fq6& a, const Fq6& b) = default;

  friend Fq6 operator+(const Fq6& a, const Fq6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Fq6 operator-(const Fq6& a, const Fq6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  Fq6 operator-() const { return {-c0, -c1, -c2}; }

  friend Fq6 operator*(const Fq6& a, const Fq6& b) {
    Fq2 a0b0 = a.c0 * b.c0;
    Fq2 a1b1 = a.c1 * b.c1;
    Fq2 a2b2 = a.c2 * b.c2;
    Fq2 r0 = a0b0 + ((a.c1 * b.c2) + (a.c2 * b.c1)).mul_by_xi();
    Fq2 r1 = (a.c0 * b.c1) + (a.c1 * b.c0) + a2b2.mul_by_xi();
    Fq2 r2 = (a.c0 * b.c2) + a1b1 + (a.c2 * b.c0);
    return {r0, r1, r2};
  }

  Fq6 square() const { return *this * *this; }
  Fq6 dbl() const { return *this + *this; }

  // v * (c0 + c1 v + c2 v^2) = xi c2 + c0 v + c1 v^2
  Fq6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fq6 inverse() const {
    Fq2 t0 = c0.square() - (c1 * c2).mul_by_xi();
    Fq2 t1 = c2.square().mul_by_xi() - c0 * c1;
    Fq2 t2 = c1.square() - c0 * c2;
    Fq2 denom = c0 * t0 + (c2 * t1).mul_by_xi() + (c1 * t2).mul_by_xi();
    Fq2 di = denom.inverse();
    return {t0 * di, t1 * di, t2 * di};
  }
};

// Fq12 = Fq6[w] / (w^2 - v)
struct Fq12 {
  Fq6 c0, c1;

  static Fq12 zero() { return {Fq6::zero(), Fq6::zero()}; }
  static Fq12 one() { return {Fq6::one(), Fq6::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }

  friend bool operator==(const Fq12& a, const Fq12& b) = default;

  friend Fq12 operator+(const Fq12& a, const Fq12& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Fq12 operator-(const Fq12& a, const Fq12& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  Fq12 operator-() const { return {-c0, -c1}; }

  friend Fq12 operator*(const Fq12& a, const Fq12& b) {
    Fq6 a0b0 = a.c0 * b.c0;
    Fq6 a1b1 = a.c1 * b.c1;
    Fq6 r0 = a0b0 + a1b1.mul_by_v();
    Fq6 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - a0b0 - a1b1;
    return {r0, r1};
  }

  Fq12 square() const {
    Fq6 a0a1 = c0 * c1;
    Fq6 t = (c0 + c1) * (c0 + c1.mul_by_v());
    Fq6 r0 = t - a0a1 - a0a1.mul_by_v();
    return {r0, a0a1.dbl()};
  }
  Fq12 dbl() const { return *this + *this; }

  Fq12 conjugate() const { return {c0, -c1}; }

  Fq12 inverse() const {
    Fq6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }
};

template <typename F>
F field_pow(const F& base, std::span<const math::u64> exponent) {
  int top = static_cast<int>(exponent.size()) - 1;
  while (top >= 0 && exponent[static_cast<std::size_t>(top)] == 0) --top;
  F acc = F::one();
  bool started = false;
  for (int limb = top; limb >= 0; --limb) {
    for (int bit = 63; bit >= 0; --bit) {
      if (started) acc = acc.square();
      if ((exponent[static_cast<std::size_t>(limb)] >> bit) & 1) {
        if (started) {
          acc = acc * base;
        } else {
          acc = base;
          started = true;
        }
      }
    }
  }
  return started ? acc : F::one();
}

using G1 = math::CurvePoint<Fq>;
using G2 = math::CurvePoint<Fq2>;

struct G1Affine {
  Fq x, y;
};
struct G2Affine {
  Fq2 x, y;
};

const Fq& g1_b();
const Fq& g1_b3();
const Fq2& g2_b();
const Fq2& g2_b3();
const G1& g1_generator();
const G2& g2_generator();

G1 g1_mul(const G1& p, const Fr& k);
G2 g2_mul(const G2& p, const Fr& k);

bool g1_on_curve(const G1& p);
bool g2_on_curve(const G2& p);
// full r-torsion membership (needed for G2: its curve has a large cofactor)
bool g2_in_subgroup(const G2& p);

// 64-byte x||y big-endian (all-zero for the identity, which callers may reject)
std::array<std::uint8_t, 64> g1_to_bytes(const G1& p);
std::array<std::uint8_t, 128> g2_to_bytes(const G2& p);
bool g1_from_bytes(ByteView bytes, G1& out);    // validates on-curve
bool g2_from_bytes(ByteView bytes, G2& out);    // validates on-curve + subgroup

// Optimal ate pairing, e : G1 x G2 -> GT subset of Fq12.
Fq12 miller_loop(const G1& p, const G2& q);
Fq12 final_exponentiation(const Fq12& f);
Fq12 pairing(const G1& p, const G2& q);

// final_exponentiation(prod of miller loops) == 1
bool pairing_product_is_one(std::span<const G1> ps, std::span<const G2> qs);

}  // namespace wtrace::bn254
