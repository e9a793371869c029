#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lfa/analysis.hpp"
#include "lfa/numeric.hpp"

namespace lfa {

enum class VerifyMode { Smoother, Twogrid, Approx };

VerifyMode parse_verify_mode(const std::string& id);
std::string verify_mode_id(VerifyMode m);

struct VerifyRequest {
  DiscName disc = DiscName::P1Courant;
  VerifyMode mode = VerifyMode::Twogrid;
  int n = 128;
  std::optional<Rational> tau;  // required for smoother / twogrid
  bool high_freq = false;       // smoother only
  std::uint64_t seed = 1;
  int iterations = 200;
  Rational qe_tolerance{1, 1000000000};
};

struct VerifyResult {
  std::string disc;
  std::string mode;
  int n = 0;
  std::optional<Rational> tau;
  bool high_freq = false;
  double measured = 0;
  SupResult predicted;
  double abs_error = 0;
  double tolerance = 0;

  bool pass() const { return abs_error <= tolerance; }
};

/// Documented acceptance band per mode: 0.02 smoother, 0.01 two-grid, 1e-3 approx.
double verify_tolerance(VerifyMode m);

/// Exact prediction for the request (no measurement).
SupResult predict(const VerifyRequest& r);
VerifyResult run_verify(const VerifyRequest& r);

}  // namespace lfa
