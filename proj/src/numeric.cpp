#include "lfa/numeric.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "lfa/errors.hpp"

namespace lfa {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int mod(int a, int n) { return ((a % n) + n) % n; }

MatrixXd assemble(const Stencil& s, int n, double h) {
  MatrixXd a = MatrixXd::Zero(n, n);
  const double scale = std::pow(h, s.h_exponent);
  for (int i = 0; i < n; ++i)
    for (const auto& [o, v] : s.row(i % s.pattern_period)) a(i, mod(i + o, n)) += v.to_double() * scale;
  return a;
}

// Pseudo-inverse on mean-zero vectors of a symmetric matrix whose kernel is
// the constants.
MatrixXd mean_zero_inverse(const MatrixXd& a) {
  const auto n = a.rows();
  const MatrixXd ones = MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  return (a + ones).partialPivLu().inverse() - ones;
}

void remove_mean(VectorXd& v) { v.array() -= v.mean(); }

VectorXd random_mean_zero(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = dist(rng);
  remove_mean(v);
  return v;
}

// Norm-ratio power iteration of `op`; the rate is the mean ratio over the last
// quarter of the steps.
RateEstimate power_rate(const MatrixXd& op, const MatrixXd* norm_matrix, int iters, std::uint64_t seed) {
  if (iters < 4) throw std::invalid_argument("need at least 4 iterations");
  auto norm = [norm_matrix](const VectorXd& v) {
    return norm_matrix ? std::sqrt(std::max(0.0, v.dot(*norm_matrix * v))) : v.norm();
  };
  VectorXd e = random_mean_zero(static_cast<int>(op.rows()), seed);
  e /= norm(e);
  RateEstimate r;
  r.iterations = iters;
  for (int k = 0; k < iters; ++k) {
    VectorXd next = op * e;
    remove_mean(next);
    const double nn = norm(next);
    r.history.push_back(nn);
    if (nn == 0.0 || !std::isfinite(nn)) break;
    e = next / nn;
  }
  while (static_cast<int>(r.history.size()) < iters) r.history.push_back(0.0);
  const int start = iters - iters / 4;
  double sum = 0;
  for (int k = start; k < iters; ++k) sum += r.history[static_cast<std::size_t>(k)];
  r.rate = sum / (iters - start);
  if (!(r.rate <= 10.0)) throw Divergence("rate estimate " + std::to_string(r.rate) + " exceeds 10");
  return r;
}

MatrixXd jacobi(const PeriodicOperators& ops, double tau) {
  const VectorXd inv_diag = ops.K.diagonal().cwiseInverse();
  return MatrixXd::Identity(ops.n, ops.n) - tau * inv_diag.asDiagonal() * ops.K;
}

MatrixXd coarse_correction(const PeriodicOperators& ops) {
  return MatrixXd::Identity(ops.n, ops.n) - ops.P * mean_zero_inverse(ops.Kc) * ops.P.transpose() * ops.K;
}

}  // namespace

PeriodicOperators build_operators(const Discretization& d, int n, double h) {
  if (n < 8 || n % 2 != 0) throw BadGridSize("n = " + std::to_string(n) + " must be even and at least 8");
  const int pc = d.refinement.coarse_period;
  if (d.name == DiscName::P2Nodal && (n < 16 || n % 4 != 0))
    throw BadGridSize("nodal P2 needs n divisible by 4 and at least 16, got " + std::to_string(n));
  if ((n / 2) % pc != 0) throw BadGridSize("coarse grid does not fit the node pattern");

  PeriodicOperators ops;
  ops.disc = d.name;
  ops.n = n;
  ops.h = h;
  ops.K = assemble(d.stiffness, n, h);
  ops.M = assemble(d.mass, n, h);
  ops.Kc = assemble(d.stiffness, n / 2, 2 * h);
  ops.P = MatrixXd::Zero(n, n / 2);
  for (int j = 0; j < n / 2; ++j)
    for (const auto& [o, w] : d.refinement.weights[static_cast<std::size_t>(j % pc)])
      ops.P(mod(2 * j + o, n), j) += w.to_double();
  return ops;
}

PeriodicOperators build_operators(const Discretization& d, int n) {
  const double elements = d.name == DiscName::P2Nodal ? n / 2.0 : static_cast<double>(n);
  return build_operators(d, n, 1.0 / elements);
}

RateEstimate measure_twogrid_rate(const PeriodicOperators& ops, double tau, int iters, std::uint64_t seed) {
  const MatrixXd s = jacobi(ops, tau);
  const MatrixXd g = s * coarse_correction(ops) * s;
  return power_rate(g, &ops.K, iters, seed);
}

RateEstimate measure_smoothing_rate(const PeriodicOperators& ops, double tau, int iters, bool high_freq_only,
                                    std::uint64_t seed) {
  MatrixXd s = jacobi(ops, tau);
  if (high_freq_only) {
    const int n = ops.n;
    MatrixXd q = MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double v = 0;
        for (int k = -n / 2 + 1; k <= n / 2; ++k)
          if (4 * std::abs(k) >= n) v += std::cos(2 * std::numbers::pi * k * (j - l) / n);
        q(j, l) = v / n;
      }
    s = q * s * q;
  }
  return power_rate(s, &ops.K, iters, seed);
}

double measure_approx_constant(const Discretization& d, int n, int iters, std::uint64_t seed) {
  const PeriodicOperators ops = build_operators(d, n);
  const MatrixXd g = (1.0 / (ops.h * ops.h)) * ops.M * coarse_correction(ops) * mean_zero_inverse(ops.K);
  return power_rate(g, nullptr, iters, seed).rate;
}

}  // namespace lfa
