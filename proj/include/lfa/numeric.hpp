#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lfa/discretization.hpp"

namespace lfa {

/// Dense operators of a discretization on a periodic grid. h is the element
/// size; for nodal P2 the n nodes are h/2 apart.
struct PeriodicOperators {
  DiscName disc = DiscName::P1Courant;
  int n = 0;
  double h = 0;
  Eigen::MatrixXd K;
  Eigen::MatrixXd M;
  Eigen::MatrixXd P;   // n x n/2
  Eigen::MatrixXd Kc;  // coarse stiffness, spacing 2h
};

/// Throws BadGridSize: n must be even and >= 8 (>= 16 and divisible by 4 for
/// nodal P2).
PeriodicOperators build_operators(const Discretization& d, int n, double h);
/// h = 1 / (number of elements).
PeriodicOperators build_operators(const Discretization& d, int n);

struct RateEstimate {
  double rate = 0;
  int iterations = 0;
  std::vector<double> history;  // per-step norm ratios
};

/// Power iteration of S C S (damped Jacobi pre/post smoothing) in the K-norm.
RateEstimate measure_twogrid_rate(const PeriodicOperators& ops, double tau, int iters, std::uint64_t seed = 1);
/// Power iteration of the damped Jacobi smoother. With high_freq_only the error
/// is projected onto modes with |k| >= n/4 every step.
RateEstimate measure_smoothing_rate(const PeriodicOperators& ops, double tau, int iters, bool high_freq_only,
                                    std::uint64_t seed = 1);
/// Dominant |eigenvalue| of h^-2 M (I - P Kc^+ P^T K) K^+ on mean-zero vectors.
double measure_approx_constant(const Discretization& d, int n, int iters = 2000, std::uint64_t seed = 1);

}  // namespace lfa
