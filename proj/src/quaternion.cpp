#include "expander_forge/quaternion.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ef {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("quaternion coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("quaternion coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("quaternion coefficient overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// Sum of four products, each checked.
std::int64_t dot4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
                  std::int64_t f, std::int64_t g, std::int64_t h) {
  return checked_add(checked_add(checked_mul(a, b), checked_mul(c, d)),
                     checked_add(checked_mul(e, f), checked_mul(g, h)));
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

IntQuaternion conjugate(const IntQuaternion& x) {
  return {x.a0, checked_neg(x.a1), checked_neg(x.a2), checked_neg(x.a3)};
}

IntQuaternion operator-(const IntQuaternion& x) {
  return {checked_neg(x.a0), checked_neg(x.a1), checked_neg(x.a2), checked_neg(x.a3)};
}

IntQuaternion operator+(const IntQuaternion& x, const IntQuaternion& y) {
  return {checked_add(x.a0, y.a0), checked_add(x.a1, y.a1), checked_add(x.a2, y.a2),
          checked_add(x.a3, y.a3)};
}

IntQuaternion operator*(const IntQuaternion& x, const IntQuaternion& y) {
  return {
      dot4(x.a0, y.a0, -x.a1, y.a1, -x.a2, y.a2, -x.a3, y.a3),
      dot4(x.a0, y.a1, x.a1, y.a0, x.a2, y.a3, -x.a3, y.a2),
      dot4(x.a0, y.a2, -x.a1, y.a3, x.a2, y.a0, x.a3, y.a1),
      dot4(x.a0, y.a3, x.a1, y.a2, -x.a2, y.a1, x.a3, y.a0),
  };
}

std::int64_t norm(const IntQuaternion& x) { return dot4(x.a0, x.a0, x.a1, x.a1, x.a2, x.a2, x.a3, x.a3); }

std::ostream& operator<<(std::ostream& os, const IntQuaternion& x) {
  return os << '(' << x.a0 << ", " << x.a1 << ", " << x.a2 << ", " << x.a3 << ')';
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_odd_prime(std::int64_t n) { return n != 2 && is_prime(n); }

std::vector<IntQuaternion> enumerate_norm_p(std::int64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("enumerate_norm_p: " + std::to_string(p) + " is not an odd prime");
  const std::int64_t r = isqrt(p);
  std::vector<IntQuaternion> out;
  for (std::int64_t a0 = -r; a0 <= r; ++a0)
    for (std::int64_t a1 = -r; a1 <= r; ++a1)
      for (std::int64_t a2 = -r; a2 <= r; ++a2) {
        const std::int64_t rest = p - a0 * a0 - a1 * a1 - a2 * a2;
        if (rest < 0) continue;
        const std::int64_t a3 = isqrt(rest);
        if (a3 * a3 != rest) continue;
        if (a3 == 0) {
          out.push_back({a0, a1, a2, 0});
        } else {
          out.push_back({a0, a1, a2, -a3});
          out.push_back({a0, a1, a2, a3});
        }
      }
  return out;
}

GeneratorSet build_generators(std::int64_t p) {
  if (p == 2) throw std::invalid_argument("build_generators: p must be odd");
  const auto solutions = enumerate_norm_p(p);

  GeneratorSet set;
  set.prime_p = p;

  std::vector<IntQuaternion> alphas;
  std::vector<IntQuaternion> betas;
  const bool one_mod_four = p % 4 == 1;
  for (const auto& x : solutions) {
    if (one_mod_four) {
      if (x.a0 >= 1 && x.a0 % 2 == 1 && x < conjugate(x)) alphas.push_back(x);
    } else if (x.a0 >= 2 && x.a0 % 2 == 0) {
      if (x < conjugate(x)) alphas.push_back(x);
    } else if (x.a0 == 0) {
      if (x < -x) betas.push_back(x);
    }
  }
  // solutions are sorted, so alphas and betas already are.
  for (const auto& a : alphas) {
    set.elements.push_back(a);
    set.elements.push_back(conjugate(a));
  }
  set.elements.insert(set.elements.end(), betas.begin(), betas.end());
  set.s = static_cast<int>(alphas.size());
  set.t = static_cast<int>(betas.size());

  if (static_cast<std::int64_t>(set.elements.size()) != p + 1)
    throw std::logic_error("build_generators: expected p+1 generators, got " +
                           std::to_string(set.elements.size()));

  // For p = 3 mod 4, t/4 must count the solutions of a1^2 + a2^2 + a3^2 = p
  // in positive integers. For p = 1 mod 4 there are no purely imaginary
  // generators at all.
  std::int64_t positive = 0;
  for (const auto& x : solutions)
    if (x.a0 == 0 && x.a1 > 0 && x.a2 > 0 && x.a3 > 0) ++positive;
  if (set.t != (one_mod_four ? 0 : 4 * positive)) throw std::logic_error("build_generators: purely imaginary count mismatch");
  for (const auto& b : betas)
    if (b.a1 % 2 == 0 || b.a2 % 2 == 0 || b.a3 % 2 == 0)
      throw std::logic_error("build_generators: purely imaginary generator with even coefficient");

  return set;
}

}  // namespace ef
