#include "expander_forge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ef {

std::vector<SpectrumGroup> group_multiplicities(const Eigen::VectorXd& sorted, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("group_multiplicities: tolerance must be positive");
  std::vector<SpectrumGroup> groups;
  double sum = 0.0;
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < sorted.size(); ++i) {
    if (count > 0 && std::abs(sorted(i) - sorted(i - 1)) > tol) {
      groups.push_back({sum / static_cast<double>(count), count});
      sum = 0.0;
      count = 0;
    }
    sum += sorted(i);
    ++count;
  }
  if (count > 0) groups.push_back({sum / static_cast<double>(count), count});
  return groups;
}

Spectrum make_spectrum(Eigen::VectorXd decreasing, double tol) {
  Spectrum s;
  s.grouped = group_multiplicities(decreasing, tol);
  s.eigenvalues = std::move(decreasing);
  return s;
}

Spectrum eigenvalues(const Graph& g, double tol) {
  if (g.order() == 0) throw std::invalid_argument("eigenvalues: empty graph");
  return make_spectrum(symmetric_eigenvalues(adjacency_matrix<double>(g)), tol);
}

GapCertificate certify(const Graph& g, const Spectrum& s) {
  const auto k = g.regular_degree();
  if (!k) throw std::invalid_argument("certify: graph is not regular");
  if (s.size() != g.order()) throw std::invalid_argument("certify: spectrum size does not match graph");

  GapCertificate c;
  c.degree = *k;
  const double kd = static_cast<double>(*k);
  c.lambda0 = s[0];
  c.lambda1 = s.size() > 1 ? s[1] : s[0];
  c.gap = c.lambda0 - c.lambda1;
  c.ramanujan_bound = 2.0 * std::sqrt(std::max(kd - 1.0, 0.0));
  c.is_connected = is_connected(g);
  c.is_bipartite_spectral = std::abs(s[s.size() - 1] + kd) <= kTrivialEigenvalueTolerance;

  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double mu = s.eigenvalues(i);
    if (std::abs(std::abs(mu) - kd) <= kTrivialEigenvalueTolerance) continue;
    c.max_nontrivial = std::max(c.max_nontrivial, std::abs(mu));
  }
  c.is_ramanujan = c.is_connected && c.max_nontrivial <= c.ramanujan_bound + kRamanujanSlack;
  return c;
}

WeylCheck check_weyl_bound(const Spectrum& base, const Spectrum& perturbed) {
  if (base.size() != perturbed.size()) throw std::invalid_argument("check_weyl_bound: spectra differ in length");
  WeylCheck w;
  if (base.size() > 0) w.max_deviation = (base.eigenvalues - perturbed.eigenvalues).cwiseAbs().maxCoeff();
  w.holds = w.max_deviation <= 1.0 + 1e-9;
  return w;
}

double gap_lower_bound(std::int64_t p, Perturbation direction) {
  if (!is_odd_prime(p)) throw std::invalid_argument("gap_lower_bound: p must be an odd prime");
  const double pd = static_cast<double>(p);
  const double k = direction == Perturbation::Plus ? pd + 2.0 : pd;
  return std::max(0.0, k - (1.0 + 2.0 * std::sqrt(pd)));
}

double ramanujan_gap(std::size_t k) {
  if (k < 1) throw std::invalid_argument("ramanujan_gap: k must be positive");
  const double kd = static_cast<double>(k);
  return kd - 2.0 * std::sqrt(kd - 1.0);
}

double round4(double x) {
  const double r = std::round(x * 1e4) / 1e4;  // std::round is half away from zero
  return r == 0.0 ? 0.0 : r;
}

std::string format4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", round4(x));
  return buf;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
  os << "eigenvalue,multiplicity\n";
  for (const auto& grp : s.grouped) os << format4(grp.value) << ',' << grp.multiplicity << '\n';
}

}  // namespace ef
