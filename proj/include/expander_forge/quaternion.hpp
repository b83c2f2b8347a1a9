// Integer Hamilton quaternions and the norm-p generator sets.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ef {

/// Element a0 + a1 i + a2 j + a3 k of H(Z). Arithmetic throws
/// std::overflow_error instead of wrapping.
struct IntQuaternion {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t a3 = 0;

  friend constexpr auto operator<=>(const IntQuaternion&, const IntQuaternion&) = default;

  [[nodiscard]] constexpr bool is_purely_imaginary() const { return a0 == 0; }
};

IntQuaternion conjugate(const IntQuaternion& x);
IntQuaternion operator-(const IntQuaternion& x);
IntQuaternion operator+(const IntQuaternion& x, const IntQuaternion& y);
/// Hamilton product: i^2 = j^2 = k^2 = -1, ij = -ji = k and cyclic.
IntQuaternion operator*(const IntQuaternion& x, const IntQuaternion& y);
inline IntQuaternion quat_mul(const IntQuaternion& x, const IntQuaternion& y) { return x * y; }

/// a0^2 + a1^2 + a2^2 + a3^2.
std::int64_t norm(const IntQuaternion& x);

std::ostream& operator<<(std::ostream& os, const IntQuaternion& x);

/// Trial division; adequate for the small primes used here.
bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);

/// All x in H(Z) with norm(x) == p, in lexicographic order of (a0, a1, a2, a3).
/// Throws std::invalid_argument unless p is an odd prime.
std::vector<IntQuaternion> enumerate_norm_p(std::int64_t p);

/// The p+1 quaternions of norm p used as Cayley generators.
///
/// For p = 1 mod 4 the set consists of s = (p+1)/2 conjugate pairs with odd
/// positive a0. For p = 3 mod 4 it consists of s conjugate pairs with even
/// a0 >= 2 plus t purely imaginary elements, one from each (b, -b) pair.
/// The stored order is: alpha_1, conj(alpha_1), ..., alpha_s, conj(alpha_s),
/// beta_1, ..., beta_t, where each alpha / beta is the lexicographic minimum
/// of its pair and the pairs are listed in increasing order.
struct GeneratorSet {
  std::int64_t prime_p = 0;
  std::vector<IntQuaternion> elements;
  int s = 0;
  int t = 0;
};

GeneratorSet build_generators(std::int64_t p);
inline GeneratorSet build_Sp(std::int64_t p) { return build_generators(p); }

}  // namespace ef
