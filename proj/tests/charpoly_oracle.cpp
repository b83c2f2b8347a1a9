#include "charpoly_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace ef::oracle {
namespace {

using Poly = std::vector<Rational>;  // lowest degree first, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && degree(a) >= degree(b)) {
    const Rational coef = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
    a.pop_back();  // leading term cancels exactly
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

// x = num / 2^exp. Bisection from integer endpoints only ever produces
// such points, so polynomial signs reduce to big-integer arithmetic.
struct Dyadic {
  BigInt num;
  unsigned exp = 0;

  [[nodiscard]] BigInt scaled(unsigned e) const { return num << (e - exp); }
  [[nodiscard]] double to_double() const { return std::ldexp(num.convert_to<double>(), -static_cast<int>(exp)); }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp, b.exp);
  return {a.scaled(e) + b.scaled(e), e + 1};
}

double width_of(const Dyadic& lo, const Dyadic& hi) {
  const unsigned e = std::max(lo.exp, hi.exp);
  return Dyadic{hi.scaled(e) - lo.scaled(e), e}.to_double();
}

using IntPoly = std::vector<BigInt>;

// Positive multiple of p with integer coefficients; same signs everywhere.
IntPoly clear_denominators(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  IntPoly out;
  for (const auto& c : p) out.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
  return out;
}

// sign of p(num / 2^e) via 2^(e deg p) p(x) = sum c_i num^i 2^(e (deg - i)).
int sign_at(const IntPoly& p, const Dyadic& x) {
  if (p.empty()) return 0;
  BigInt acc = p.back();
  const std::size_t d = p.size() - 1;
  for (std::size_t i = d; i-- > 0;) acc = acc * x.num + (p[i] << static_cast<unsigned>(x.exp * (d - i)));
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

class Sturm {
 public:
  explicit Sturm(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    while (!chain.back().empty() && degree(chain.back()) > 0) {
      auto r = divmod(chain[chain.size() - 2], chain.back()).second;
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain.push_back(std::move(r));
    }
    for (const auto& p : chain) chain_.push_back(clear_denominators(p));
  }

  [[nodiscard]] const IntPoly& head() const { return chain_.front(); }

  // Number of sign changes at x (zeros skipped).
  [[nodiscard]] int variations(const Dyadic& x) const {
    int changes = 0, last = 0;
    for (const auto& p : chain_) {
      const int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  // Roots in (lo, hi].
  [[nodiscard]] int count(const Dyadic& lo, const Dyadic& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<IntPoly> chain_;
};

// The single root of the square-free chain head in (lo, hi]. Sturm bisection
// runs until neither endpoint is a root, then the sign change is bisected.
double refine(const Sturm& sturm, Dyadic lo, Dyadic hi, double width) {
  const IntPoly& f = sturm.head();
  while (sign_at(f, lo) == 0 || sign_at(f, hi) == 0) {
    if (sign_at(f, hi) == 0) return hi.to_double();
    Dyadic mid = midpoint(lo, hi);
    if (sturm.count(lo, mid) == 1)
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }
  const int s_lo = sign_at(f, lo);
  while (width_of(lo, hi) > width) {
    Dyadic mid = midpoint(lo, hi);
    const int s_mid = sign_at(f, mid);
    if (s_mid == 0) return mid.to_double();
    if (s_mid == s_lo)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return midpoint(lo, hi).to_double();
}

void isolate(const Sturm& sturm, const Dyadic& lo, const Dyadic& hi, int n, double width, std::vector<double>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back(refine(sturm, lo, hi, width));
    return;
  }
  const Dyadic mid = midpoint(lo, hi);
  const int left = sturm.count(lo, mid);
  isolate(sturm, lo, mid, left, width, out);
  isolate(sturm, mid, hi, n - left, width, out);
}

}  // namespace

namespace {

// Checked 64-bit integer; arithmetic throws on overflow so the caller can
// redo the computation in arbitrary precision.
struct Checked {
  std::int64_t v = 0;
  Checked() = default;
  Checked(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)
  Checked& operator+=(Checked o) {
    if (__builtin_add_overflow(v, o.v, &v)) throw std::overflow_error("charpoly");
    return *this;
  }
  friend Checked operator-(Checked a) {
    if (a.v == INT64_MIN) throw std::overflow_error("charpoly");
    return {-a.v};
  }
  friend Checked operator/(Checked a, std::size_t k) { return {a.v / static_cast<std::int64_t>(k)}; }
  friend Checked operator%(Checked a, std::size_t k) { return {a.v % static_cast<std::int64_t>(k)}; }
  friend bool operator!=(Checked a, int b) { return a.v != b; }
  friend bool operator==(Checked a, int b) { return a.v == b; }
};

BigInt to_big(const BigInt& x) { return x; }
BigInt to_big(Checked x) { return BigInt(x.v); }

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
template <typename Int>
std::vector<BigInt> faddeev_leverrier(const Graph& g) {
  const std::size_t n = g.order();
  using Mat = std::vector<std::vector<Int>>;
  std::vector<Int> c(n + 1, Int(0));
  c[n] = Int(1);
  Mat m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex l : g.neighbors(i))
        for (std::size_t j = 0; j < n; ++j) next[i][j] += m[l][j];
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    Int trace(0);
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex l : g.neighbors(i)) trace += next[l][i];
    if (trace % k != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
    c[n - k] = -trace / k;
    m = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(n + 1);
  for (const auto& x : c) out.push_back(to_big(x));
  return out;
}

}  // namespace

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
  try {
    return faddeev_leverrier<Checked>(g);
  } catch (const std::overflow_error&) {
    return faddeev_leverrier<BigInt>(g);
  }
}

std::vector<double> real_roots(const std::vector<BigInt>& poly, double width) {
  Poly f;
  for (const auto& c : poly) f.emplace_back(c);
  trim(f);
  if (f.empty()) throw std::invalid_argument("real_roots: zero polynomial");

  // Cauchy bound on root magnitude, rounded up to an integer.
  Rational ratio = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) ratio = std::max(ratio, Rational(abs(f[i] / f.back())));
  const BigInt bound = boost::multiprecision::numerator(ratio) / boost::multiprecision::denominator(ratio) + 2;

  // Yun's square-free factorisation: f = prod a_i^i.
  std::vector<double> roots;
  const Poly fp = derivative(f);
  if (fp.empty()) return roots;  // constant
  const Poly a0 = gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = sub(c, derivative(b));
  for (int mult = 1; degree(b) > 0; ++mult) {
    const Poly ai = gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = sub(c, derivative(b));
    if (degree(ai) <= 0) continue;
    const Sturm sturm(ai);
    std::vector<double> found;
    const Dyadic lo{-bound, 0}, hi{bound, 0};
    isolate(sturm, lo, hi, sturm.count(lo, hi), width, found);
    if (static_cast<int>(found.size()) != degree(ai)) throw std::logic_error("real_roots: polynomial is not real-rooted");
    for (double r : found)
      for (int i = 0; i < mult; ++i) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace ef::oracle
