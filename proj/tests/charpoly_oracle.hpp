// Exact spectral oracle for small graphs: the integer characteristic
// polynomial and its real roots, found without floating-point linear
// algebra. Used only to check the dense eigensolver.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "expander_forge/graph.hpp"

namespace ef::oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficients c[0..n] of det(x I - A), lowest degree first, computed by
/// the Faddeev-LeVerrier recurrence in exact integer arithmetic.
std::vector<BigInt> characteristic_polynomial(const Graph& g);

/// Real roots of a real-rooted integer polynomial, repeated by multiplicity
/// and sorted decreasing. Square-free factorisation (Yun) separates the
/// multiplicities; Sturm sequences isolate and bisect each root to an
/// interval narrower than `width`, in exact rational arithmetic.
std::vector<double> real_roots(const std::vector<BigInt>& poly, double width = 1e-12);

}  // namespace ef::oracle
