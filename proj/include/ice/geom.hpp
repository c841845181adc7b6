#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

// Exact planar geometry for the triangular lattice and its sublattices.
//
// Lattice sites are addressed by axial coordinates (a, b) with basis
// vectors a1 = (1, 0) and a2 = (1/2, sqrt(3)/2).  All positions used in
// the code (sites, edge midpoints, face centers) are exact multiples of
// (1/12, sqrt(3)/12), so they are stored as integer pairs and every
// orientation predicate reduces to integer arithmetic.

namespace ice {

struct Axial {
  int a = 0;
  int b = 0;

  friend Axial operator+(Axial u, Axial v) { return {u.a + v.a, u.b + v.b}; }
  friend Axial operator-(Axial u, Axial v) { return {u.a - v.a, u.b - v.b}; }
  friend Axial operator*(int k, Axial v) { return {k * v.a, k * v.b}; }
  friend bool operator==(Axial u, Axial v) = default;
  friend auto operator<=>(Axial u, Axial v) = default;
};

// Unit direction vectors e_k at angle 60k degrees, k = 0..5.
inline constexpr std::array<Axial, 6> kDirs = {
    Axial{1, 0}, Axial{0, 1}, Axial{-1, 1},
    Axial{-1, 0}, Axial{0, -1}, Axial{1, -1}};

inline constexpr int dir_mod6(int k) { return ((k % 6) + 6) % 6; }

// Position in units of (1/12, sqrt(3)/12).  Cartesian point is
// (x / 12, y * sqrt(3) / 12).
struct Pos12 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Pos12 operator+(Pos12 u, Pos12 v) { return {u.x + v.x, u.y + v.y}; }
  friend Pos12 operator-(Pos12 u, Pos12 v) { return {u.x - v.x, u.y - v.y}; }
  friend bool operator==(Pos12 u, Pos12 v) = default;
  friend auto operator<=>(Pos12 u, Pos12 v) = default;
};

inline Pos12 pos_of(Axial v) {
  return {12 * std::int64_t(v.a) + 6 * std::int64_t(v.b), 6 * std::int64_t(v.b)};
}

// Sign of the z component of (u x v) for the true Cartesian vectors.
// cross((ux, sqrt3 uy), (vx, sqrt3 vy)) = sqrt3 (ux vy - uy vx).
inline int cross_sign(Pos12 u, Pos12 v) {
  __int128 c = (__int128)u.x * v.y - (__int128)u.y * v.x;
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

inline std::int64_t dot_scaled(Pos12 u, Pos12 v) {
  // (ux vx + 3 uy vy); proportional to the true dot product.
  return u.x * v.x + 3 * u.y * v.y;
}

// Hexagonal norm: the cut "hexnorm(v) <= r" is a hexagon with flat sides
// along the three lattice directions and Euclidean side length r.
inline int hexnorm(Axial v) {
  int s = std::abs(v.a + v.b);
  return std::max({std::abs(v.a), std::abs(v.b), s});
}

// Coset index of (a, b) in the index-7 sublattice generated by
// (1, 2) and (-2, 3).  Coset 0 is the sublattice itself.
inline int coset7(Axial v) {
  return ((5 * v.a + v.b) % 7 + 7) % 7;
}

// Exact rational, used for boundary tilts.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  double value() const { return double(num) / double(den); }
  friend bool operator==(const Rat&, const Rat&) = default;
};

}  // namespace ice
