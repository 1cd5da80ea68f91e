#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "math/fp.hpp"

namespace wtrace::math {

// Short Weierstrass curve y^2 = x^3 + b (a = 0) over field F, homogeneous
// projective coordinates with the exception-free formulas of
// Renes–Costello–Batina (eprint 2015/1060, algorithms 7 and 9). Identity is
// (0 : 1 : 0). Works unchanged over extension fields.
template <typename F>
struct CurvePoint {
  F x, y, z;

  static CurvePoint identity() { return {F::zero(), F::one(), F::zero()}; }
  static CurvePoint from_affine(const F& ax, const F& ay) {
    return {ax, ay, F::one()};
  }

  bool is_identity() const { return z.is_zero(); }

  // (b3 = 3*b) must match the curve the points live on.
  CurvePoint add(const CurvePoint& q, const F& b3) const {
    const F& x1 = x;
    const F& y1 = y;
    const F& z1 = z;
    const F& x2 = q.x;
    const F& y2 = q.y;
    const F& z2 = q.z;

    F t0 = x1 * x2;
    F t1 = y1 * y2;
    F t2 = z1 * z2;
    F t3 = (x1 + y1) * (x2 + y2) - t0 - t1;
    F t4 = (x1 + z1) * (x2 + z2) - t0 - t2;
    F t5 = (y1 + z1) * (y2 + z2) - t1 - t2;
    F bz = b3 * t2;
    F rx = t1 - bz;
    F rz = t1 + bz;
    F ry = rx * rz;
    F t6 = t0 + t0 + t0;
    F t7 = b3 * t4;
    F t8 = t6 * t7;
    ry = ry + t8;
    F out_x = t3 * rx - t5 * t7;
    F out_z = t5 * rz + t3 * t6;
    return {out_x, ry, out_z};
  }

  CurvePoint dbl(const F& b3) const {
    F t0 = y * y;
    F t2 = z * z;
    F t3 = (x * y).dbl();
    F z3 = (x * z).dbl();
    F by = b3 * t2;
    F rx = t0 - by;
    F ry_acc = t0 + by;
    F ry = rx * ry_acc;
    F out_x = t3 * rx;
    F bz3 = b3 * z3;
    F t6 = x * x;
    F t6_3 = t6 + t6 + t6;
    F t8 = t6_3 * bz3;
    ry = ry + t8;
    F t9 = (y * z).dbl();
    F out_x2 = out_x - t9 * bz3;
    F out_z = (t9 * t0).dbl().dbl();
    return {out_x2, ry, out_z};
  }

  CurvePoint neg() const { return {x, -y, z}; }

  // scalar given as canonical little-endian limbs
  CurvePoint mul(const Limbs& scalar, const F& b3) const {
    CurvePoint acc = identity();
    bool started = false;
    for (int limb = 3; limb >= 0; --limb) {
      for (int bit = 63; bit >= 0; --bit) {
        if (started) acc = acc.dbl(b3);
        if ((scalar[static_cast<std::size_t>(limb)] >> bit) & 1) {
          if (started) {
            acc = acc.add(*this, b3);
          } else {
            acc = *this;
            started = true;
          }
        }
      }
    }
    return started ? acc : identity();
  }

  // Equality in projective coordinates: cross-multiply.
  bool equals(const CurvePoint& q) const {
    if (is_identity() || q.is_identity()) {
      return is_identity() == q.is_identity();
    }
    if (x * q.z != q.x * z) return false;
    return y * q.z != q.y * z ? false : true;
  }

  // Normalizes to affine; identity reported via the bool.
  bool to_affine(F& ax, F& ay) const {
    if (is_identity()) return false;
    F zi = z.inverse();
    ax = x * zi;
    ay = y * zi;
    return true;
  }

  bool on_curve(const F& b) const {
    if (is_identity()) return true;
    // y^2 z = x^3 + b z^3
    return y.square() * z == x.square() * x + b * z.square() * z;
  }
};

// Pippenger bucket MSM over canonical little-endian 256-bit scalars.
template <typename F>
CurvePoint<F> msm(std::span<const CurvePoint<F>> points,
                  std::span<const Limbs> scalars, const F& b3) {
  using P = CurvePoint<F>;
  const std::size_t n = points.size();
  if (n == 0) return P::identity();
  if (n == 1) return points[0].mul(scalars[0], b3);

  unsigned c = 3;
  if (n >= 32) c = 5;
  if (n >= 128) c = 6;
  if (n >= 1024) c = 8;
  const unsigned windows = (256 + c - 1) / c;
  const std::size_t num_buckets = (static_cast<std::size_t>(1) << c) - 1;

  P result = P::identity();
  std::vector<P> buckets(num_buckets);
  for (int w = static_cast<int>(windows) - 1; w >= 0; --w) {
    if (!result.is_identity()) {
      for (unsigned i = 0; i < c; ++i) result = result.dbl(b3);
    }
    for (auto& bucket : buckets) bucket = P::identity();
    const unsigned bit_off = static_cast<unsigned>(w) * c;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned limb = bit_off / 64;
      const unsigned shift = bit_off % 64;
      if (limb >= 4) continue;
      u64 frag = scalars[i][limb] >> shift;
      if (shift + c > 64 && limb + 1 < 4) {
        frag |= scalars[i][limb + 1] << (64 - shift);
      }
      frag &= (static_cast<u64>(1) << c) - 1;
      if (frag != 0) {
        buckets[frag - 1] = buckets[frag - 1].add(points[i], b3);
      }
    }
    P running = P::identity();
    P sum = P::identity();
    for (std::size_t bidx = num_buckets; bidx-- > 0;) {
      running = running.add(buckets[bidx], b3);
      sum = sum.add(running, b3);
    }
    result = result.add(sum, b3);
  }
  return result;
}

}  // namespace wtrace::math
