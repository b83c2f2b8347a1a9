// Adjacency spectra, multiplicity grouping, spectral-gap certificates and
// the rank-wise perturbation bound for 1-factor perturbations.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "expander_forge/graph.hpp"

namespace ef {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Symmetric 0/1 adjacency matrix A.
template <typename Scalar = double>
DenseMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = Scalar(1);
  return a;
}

/// Adjacency matrix A_F of the graph (V, F).
template <typename Scalar = double>
DenseMatrix<Scalar> matching_matrix(const Matching& f) {
  const auto n = static_cast<Eigen::Index>(f.order());
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (const auto& e : f.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u), v = static_cast<Eigen::Index>(e.v);
    a(u, v) = a(v, u) = Scalar(1);
  }
  return a;
}

/// Eigenvalues of a symmetric matrix expression, sorted decreasing.
/// Householder tridiagonalisation followed by implicit symmetric QR.
template <typename Derived>
DenseVector<typename Derived::Scalar> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(m.derived(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric_eigenvalues: QR iteration did not converge");
  return solver.eigenvalues().reverse();
}

/// Operator 2-norm of a symmetric matrix: max |eigenvalue|.
template <typename Derived>
typename Derived::Scalar symmetric_operator_norm(const Eigen::MatrixBase<Derived>& m) {
  const auto ev = symmetric_eigenvalues(m);
  return ev.size() == 0 ? typename Derived::Scalar(0) : ev.cwiseAbs().maxCoeff();
}

inline constexpr double kDefaultGroupingTolerance = 1e-6;

struct SpectrumGroup {
  double value = 0.0;  // mean of the merged eigenvalues
  std::size_t multiplicity = 0;
};

/// Merge consecutive sorted values that lie within tol of their neighbour.
/// Input must be sorted (either direction); output keeps that direction.
std::vector<SpectrumGroup> group_multiplicities(const Eigen::VectorXd& sorted, double tol = kDefaultGroupingTolerance);

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // decreasing
  std::vector<SpectrumGroup> grouped;

  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
  /// lambda_j in the decreasing order.
  [[nodiscard]] double operator[](std::size_t j) const { return eigenvalues(static_cast<Eigen::Index>(j)); }
};

Spectrum make_spectrum(Eigen::VectorXd decreasing, double tol = kDefaultGroupingTolerance);

/// Full adjacency spectrum of g.
Spectrum eigenvalues(const Graph& g, double tol = kDefaultGroupingTolerance);

struct GapCertificate {
  std::size_t degree = 0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double gap = 0.0;
  double ramanujan_bound = 0.0;
  /// Largest |mu| over eigenvalues mu other than +-k.
  double max_nontrivial = 0.0;
  bool is_ramanujan = false;
  bool is_connected = false;
  bool is_bipartite_spectral = false;
};

/// Tolerance used to recognise eigenvalues equal to +-k.
inline constexpr double kTrivialEigenvalueTolerance = 1e-8;
inline constexpr double kRamanujanSlack = 1e-9;

/// Throws std::invalid_argument if g is not regular or the sizes disagree.
GapCertificate certify(const Graph& g, const Spectrum& s);

struct WeylCheck {
  double max_deviation = 0.0;
  bool holds = false;
};

/// Rank-wise max |mu_j - lambda_j| and whether it is at most 1 + 1e-9.
WeylCheck check_weyl_bound(const Spectrum& base, const Spectrum& perturbed);

enum class Perturbation { Plus, Minus };

/// Guaranteed spectral gap of X^{p,q} + F (k = p + 2) or X^{p,q} - F
/// (k = p), from lambda_1(X) <= 2 sqrt(p) and the rank-wise bound:
/// k - (1 + 2 sqrt(p)), clamped at 0.
double gap_lower_bound(std::int64_t p, Perturbation direction);

/// k - 2 sqrt(k - 1): the gap a Ramanujan k-regular family would achieve.
double ramanujan_gap(std::size_t k);

/// Round half away from zero to 4 decimals; never returns -0.
double round4(double x);
/// Fixed-point with 4 decimals after round4.
std::string format4(double x);

/// "eigenvalue,multiplicity" then one row per group, decreasing.
void write_spectrum_csv(std::ostream& os, const Spectrum& s);

}  // namespace ef
