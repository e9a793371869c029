#include "lfa/verify.hpp"

#include <cmath>

#include "lfa/errors.hpp"

namespace lfa {

VerifyMode parse_verify_mode(const std::string& id) {
  if (id == "smoother") return VerifyMode::Smoother;
  if (id == "twogrid") return VerifyMode::Twogrid;
  if (id == "approx") return VerifyMode::Approx;
  throw ParseError("unknown verify mode '" + id + "' (expected smoother, twogrid or approx)");
}

std::string verify_mode_id(VerifyMode m) {
  switch (m) {
    case VerifyMode::Smoother: return "smoother";
    case VerifyMode::Twogrid: return "twogrid";
    case VerifyMode::Approx: return "approx";
  }
  return "?";
}

double verify_tolerance(VerifyMode m) {
  switch (m) {
    case VerifyMode::Smoother: return 0.02;
    case VerifyMode::Twogrid: return 0.01;
    case VerifyMode::Approx: return 1e-3;
  }
  return 0;
}

namespace {

std::vector<CosFn> frozen(const TauEigenSet& e, const Rational& tau) {
  std::vector<CosFn> out;
  for (const auto& f : spectral_radius_fn(e)) out.emplace_back(tau_freeze(f, tau));
  return out;
}

const Rational& require_tau(const VerifyRequest& r) {
  if (!r.tau) throw std::invalid_argument(verify_mode_id(r.mode) + " verification needs a damping parameter");
  return *r.tau;
}

}  // namespace

SupResult predict(const VerifyRequest& r) {
  const Discretization d = make_discretization(r.disc);
  switch (r.mode) {
    case VerifyMode::Smoother: {
      const TauEigenSet e = eigenvalues(smoother_symbol(d, HarmonicBasis::of_order(1)));
      const Rational lo = r.high_freq ? high_freq_lo() : Rational(-1);
      const Rational hi = r.high_freq ? high_freq_hi() : Rational(1);
      return sup_abs(frozen(e, require_tau(r)), lo, hi, r.qe_tolerance);
    }
    case VerifyMode::Twogrid: {
      const TauEigenSet e = eigenvalues(twogrid_symbol(d));
      return sup_abs(frozen(e, require_tau(r)), Rational(-1), Rational(1), r.qe_tolerance);
    }
    case VerifyMode::Approx: return approx_report(d, r.qe_tolerance).c_a;
  }
  throw std::logic_error("unreachable verify mode");
}

VerifyResult run_verify(const VerifyRequest& r) {
  const Discretization d = make_discretization(r.disc);
  VerifyResult out;
  out.disc = disc_id(r.disc);
  out.mode = verify_mode_id(r.mode);
  out.n = r.n;
  out.tau = r.tau;
  out.high_freq = r.high_freq && r.mode == VerifyMode::Smoother;
  out.tolerance = verify_tolerance(r.mode);
  out.predicted = predict(r);
  switch (r.mode) {
    case VerifyMode::Smoother:
      out.measured = measure_smoothing_rate(build_operators(d, r.n), require_tau(r).to_double(), r.iterations,
                                            r.high_freq, r.seed)
                         .rate;
      break;
    case VerifyMode::Twogrid:
      out.measured =
          measure_twogrid_rate(build_operators(d, r.n), require_tau(r).to_double(), r.iterations, r.seed).rate;
      break;
    case VerifyMode::Approx:
      out.measured = measure_approx_constant(d, r.n, std::max(r.iterations, 2000), r.seed);
      break;
  }
  out.abs_error = std::abs(out.measured - out.predicted.approx());
  return out;
}

}  // namespace lfa
