// Prime-field arithmetic, the quaternion embedding into 2x2 matrices, and
// the projective groups PGL2(q) / PSL2(q).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <unordered_map>
#include <utility>
#include <vector>

#include "expander_forge/quaternion.hpp"

namespace ef {

/// Element of F_q for an odd prime q. Values are always reduced to [0, q).
class Fq {
 public:
  Fq() = default;
  Fq(std::int64_t value, std::int64_t modulus);

  [[nodiscard]] std::int64_t value() const { return value_; }
  [[nodiscard]] std::int64_t modulus() const { return modulus_; }
  [[nodiscard]] bool is_zero() const { return value_ == 0; }

  /// Throws std::domain_error on zero.
  [[nodiscard]] Fq inverse() const;
  [[nodiscard]] Fq pow(std::uint64_t e) const;

  friend Fq operator+(Fq a, Fq b);
  friend Fq operator-(Fq a, Fq b);
  friend Fq operator*(Fq a, Fq b);
  friend Fq operator-(Fq a);
  friend bool operator==(Fq a, Fq b) = default;

 private:
  std::int64_t value_ = 0;
  std::int64_t modulus_ = 0;
};

/// Raw 2x2 matrix over F_q, row-major.
struct Mat2 {
  Fq m00, m01, m10, m11;

  [[nodiscard]] std::int64_t modulus() const { return m00.modulus(); }
  [[nodiscard]] Fq det() const { return m00 * m11 - m01 * m10; }
  static Mat2 identity(std::int64_t q);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Element of PGL2(q), stored as the representative whose first nonzero
/// entry in row-major order is 1.
class ProjMat {
 public:
  /// Throws std::invalid_argument if m is singular.
  explicit ProjMat(const Mat2& m);

  static ProjMat identity(std::int64_t q) { return ProjMat(Mat2::identity(q)); }

  [[nodiscard]] const Mat2& matrix() const { return m_; }
  [[nodiscard]] std::int64_t modulus() const { return m_.modulus(); }
  [[nodiscard]] std::array<std::int64_t, 4> entries() const;
  /// Injective integer encoding of the canonical entries; ordering agrees
  /// with lexicographic order on entries.
  [[nodiscard]] std::uint64_t key() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] ProjMat inverse() const;

  friend ProjMat operator*(const ProjMat& a, const ProjMat& b);
  friend bool operator==(const ProjMat& a, const ProjMat& b) { return a.m_ == b.m_; }
  friend bool operator<(const ProjMat& a, const ProjMat& b) { return a.key() < b.key(); }

 private:
  Mat2 m_;
};

std::ostream& operator<<(std::ostream& os, const ProjMat& m);

/// Scale m so that its first nonzero entry (row-major) is 1.
Mat2 canonical(const Mat2& m);

/// Lexicographically smallest (x, y) in [0, q)^2 with x^2 + y^2 + 1 = 0 mod q.
std::pair<Fq, Fq> solve_x2y2(std::int64_t q);

/// Reduction mod q of a quaternion followed by the embedding
///   a0 + a1 i + a2 j + a3 k  ->  [ a0 + a1 x + a3 y    -a1 y + a2 + a3 x ]
///                                [ -a1 y - a2 + a3 x   a0 - a1 x - a3 y  ]
/// which is a ring isomorphism H(F_q) -> M2(F_q) whenever x^2 + y^2 + 1 = 0.
Mat2 psi_q(const IntQuaternion& x, std::int64_t q, const std::pair<Fq, Fq>& sol);

/// Legendre symbol (p/q): +1, -1, or 0 when q | p.
int legendre(std::int64_t p, std::int64_t q);

/// Projected images of the generator set, in generator order. Requires
/// distinct odd primes with q > 2 sqrt(p); throws std::runtime_error if the
/// images collide or hit the identity.
std::vector<ProjMat> build_generator_images(std::int64_t p, std::int64_t q);
inline std::vector<ProjMat> build_Spq(std::int64_t p, std::int64_t q) { return build_generator_images(p, q); }

enum class Subgroup { PSL, PGL };

/// All canonical elements of PSL2(q) or PGL2(q), sorted lexicographically.
std::vector<ProjMat> enumerate_group(std::int64_t q, Subgroup which);

/// True iff det of the canonical representative is a nonzero square.
bool psl_membership(const ProjMat& m);

/// Maps canonical elements back to their position in an enumerated list.
class GroupIndex {
 public:
  explicit GroupIndex(const std::vector<ProjMat>& elements);
  /// Position of m, or -1 if m is not in the list.
  [[nodiscard]] std::int64_t find(const ProjMat& m) const;
  [[nodiscard]] std::size_t size() const { return index_.size(); }

 private:
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace ef
