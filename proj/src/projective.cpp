#include "expander_forge/projective.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ef {

Fq::Fq(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("Fq: modulus must be at least 2");
  value_ = value % modulus;
  if (value_ < 0) value_ += modulus;
}

Fq Fq::pow(std::uint64_t e) const {
  Fq base = *this;
  Fq acc(1, modulus_);
  while (e) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

Fq Fq::inverse() const {
  if (is_zero()) throw std::domain_error("Fq: inverse of zero");
  return pow(static_cast<std::uint64_t>(modulus_ - 2));
}

Fq operator+(Fq a, Fq b) { return {a.value_ + b.value_, a.modulus_}; }
Fq operator-(Fq a, Fq b) { return {a.value_ - b.value_, a.modulus_}; }
Fq operator-(Fq a) { return {-a.value_, a.modulus_}; }
Fq operator*(Fq a, Fq b) {
  // q stays far below 2^31 at desk scale; use 128-bit anyway.
  __extension__ using Wide = __int128;
  const auto prod = static_cast<Wide>(a.value_) * b.value_;
  return {static_cast<std::int64_t>(prod % a.modulus_), a.modulus_};
}

Mat2 Mat2::identity(std::int64_t q) { return {Fq(1, q), Fq(0, q), Fq(0, q), Fq(1, q)}; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Mat2 canonical(const Mat2& m) {
  const Fq lead = !m.m00.is_zero() ? m.m00 : !m.m01.is_zero() ? m.m01 : !m.m10.is_zero() ? m.m10 : m.m11;
  const Fq s = lead.inverse();
  return {m.m00 * s, m.m01 * s, m.m10 * s, m.m11 * s};
}

ProjMat::ProjMat(const Mat2& m) {
  if (m.det().is_zero()) throw std::invalid_argument("ProjMat: singular matrix");
  m_ = canonical(m);
}

std::array<std::int64_t, 4> ProjMat::entries() const {
  return {m_.m00.value(), m_.m01.value(), m_.m10.value(), m_.m11.value()};
}

std::uint64_t ProjMat::key() const {
  const auto q = static_cast<std::uint64_t>(modulus());
  std::uint64_t k = 0;
  for (auto e : entries()) k = k * q + static_cast<std::uint64_t>(e);
  return k;
}

bool ProjMat::is_identity() const { return m_ == Mat2::identity(modulus()); }

ProjMat ProjMat::inverse() const { return ProjMat(Mat2{m_.m11, -m_.m01, -m_.m10, m_.m00}); }

ProjMat operator*(const ProjMat& a, const ProjMat& b) { return ProjMat(a.m_ * b.m_); }

std::ostream& operator<<(std::ostream& os, const ProjMat& m) {
  const auto e = m.entries();
  return os << "[[" << e[0] << ' ' << e[1] << "] [" << e[2] << ' ' << e[3] << "]] mod " << m.modulus();
}

std::pair<Fq, Fq> solve_x2y2(std::int64_t q) {
  if (!is_odd_prime(q)) throw std::invalid_argument("solve_x2y2: q must be an odd prime");
  for (std::int64_t x = 0; x < q; ++x)
    for (std::int64_t y = 0; y < q; ++y)
      if ((x * x + y * y + 1) % q == 0) return {Fq(x, q), Fq(y, q)};
  throw std::logic_error("solve_x2y2: no solution");  // unreachable for prime q
}

Mat2 psi_q(const IntQuaternion& x, std::int64_t q, const std::pair<Fq, Fq>& sol) {
  const Fq a0(x.a0, q), a1(x.a1, q), a2(x.a2, q), a3(x.a3, q);
  const auto [u, v] = sol;
  return {a0 + a1 * u + a3 * v, -(a1 * v) + a2 + a3 * u,
          -(a1 * v) - a2 + a3 * u, a0 - a1 * u - a3 * v};
}

int legendre(std::int64_t p, std::int64_t q) {
  const Fq a(p, q);
  if (a.is_zero()) return 0;
  return a.pow(static_cast<std::uint64_t>((q - 1) / 2)).value() == 1 ? 1 : -1;
}

std::vector<ProjMat> build_generator_images(std::int64_t p, std::int64_t q) {
  if (!is_odd_prime(p) || !is_odd_prime(q)) throw std::invalid_argument("build_generator_images: p and q must be odd primes");
  if (p == q) throw std::invalid_argument("build_generator_images: p and q must differ");
  if (static_cast<double>(q) <= 2.0 * std::sqrt(static_cast<double>(p)))
    throw std::invalid_argument("build_generator_images: need q > 2 sqrt(p), got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));

  const auto gens = build_generators(p);
  const auto sol = solve_x2y2(q);
  std::vector<ProjMat> images;
  images.reserve(gens.elements.size());
  for (const auto& g : gens.elements) images.emplace_back(psi_q(g, q, sol));

  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_identity())
      throw std::runtime_error("build_generator_images: generator " + std::to_string(i) + " maps to the identity");
    for (std::size_t j = 0; j < i; ++j)
      if (images[i] == images[j])
        throw std::runtime_error("build_generator_images: generators " + std::to_string(j) + " and " +
                                 std::to_string(i) + " collide; |S_pq| < p+1 for p=" + std::to_string(p) +
                                 " q=" + std::to_string(q));
  }
  return images;
}

bool psl_membership(const ProjMat& m) { return legendre(m.matrix().det().value(), m.modulus()) == 1; }

std::vector<ProjMat> enumerate_group(std::int64_t q, Subgroup which) {
  if (!is_odd_prime(q)) throw std::invalid_argument("enumerate_group: q must be an odd prime");
  std::vector<ProjMat> out;
  out.reserve(static_cast<std::size_t>(q * (q * q - 1)));
  // Canonical forms: [1 b; c d] with d != bc, or [0 1; c d] with c != 0.
  for (std::int64_t b = 0; b < q; ++b)
    for (std::int64_t c = 0; c < q; ++c)
      for (std::int64_t d = 0; d < q; ++d) {
        const Mat2 m{Fq(1, q), Fq(b, q), Fq(c, q), Fq(d, q)};
        if (!m.det().is_zero()) out.emplace_back(m);
      }
  for (std::int64_t c = 1; c < q; ++c)
    for (std::int64_t d = 0; d < q; ++d) out.emplace_back(Mat2{Fq(0, q), Fq(1, q), Fq(c, q), Fq(d, q)});

  if (which == Subgroup::PSL) std::erase_if(out, [](const ProjMat& m) { return !psl_membership(m); });
  std::sort(out.begin(), out.end());
  return out;
}

GroupIndex::GroupIndex(const std::vector<ProjMat>& elements) {
  index_.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i].key(), i);
}

std::int64_t GroupIndex::find(const ProjMat& m) const {
  const auto it = index_.find(m.key());
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

}  // namespace ef
