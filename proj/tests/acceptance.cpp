// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "lfa/analysis.hpp"
#include "lfa/numeric.hpp"
#include "lfa/qe.hpp"
#include "lfa/verify.hpp"

using namespace lfa;

namespace {

const Rational kTol(1, 1000000000);

std::vector<QPoly> polys(std::initializer_list<const char*> texts) {
  std::vector<QPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, 't'));
  return out;
}

std::vector<RealPoint> points(std::initializer_list<Rational> rs) { return {rs.begin(), rs.end()}; }

double eval_d(const QPoly& p, double x) {
  double acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).to_double();
  return acc;
}

TauPoly jacobi_eigen() { return eigenvalues(smoother_symbol(p1_courant(), HarmonicBasis::of_order(1))).eigenvalues.at(0); }

bool criterion1() {
  const PiecewisePoly q = parametric_envelope(jacobi_eigen(), Rational(-1), Rational(1), Substitution::C);
  return q.pieces == polys({"1-2t", "1", "-1+2t"}) && q.breakpoints == points({Rational(0), Rational(1)});
}

bool criterion2() {
  const PiecewisePoly q = parametric_envelope(jacobi_eigen(), high_freq_lo(), high_freq_hi(), Substitution::C);
  const MinResult m = piecewise_min(q);
  return q.pieces == polys({"1-2t", "1-t", "-1+2t"}) && q.breakpoints == points({Rational(0), Rational(2, 3)}) &&
         m.exact() && m.argmin == RealPoint(Rational(2, 3)) && m.lo == Rational(1, 3);
}

bool criterion3() {
  const TauEigenSet e = eigenvalues(twogrid_symbol(p1_courant()));
  const auto& rho = spectral_radius_fn(e);
  if (rho.size() != 1 || rho[0] != parse_taupoly("(1-2t+t^2) + (-2t+3t^2)c^2")) return false;
  const PiecewisePoly q = parametric_envelope(rho[0], Rational(0), Rational(1), Substitution::CSquared);
  const MinResult m = piecewise_min(q);
  return q.pieces == polys({"1-4t+4t^2", "1-2t+t^2", "1-4t+4t^2"}) &&
         q.breakpoints == points({Rational(0), Rational(2, 3)}) && m.exact() &&
         m.argmin == RealPoint(Rational(2, 3)) && m.lo == Rational(1, 9);
}

bool criterion4() {
  const ApproxReport p1 = approx_report(p1_courant());
  const ApproxReport sp = approx_report(p2_spline());
  const ApproxReport nd = approx_report(p2_nodal());
  auto constants = [](const ApproxReport& r, Rational ca, Rational norm, Rational lemma) {
    return r.c_a.exact() && r.c_a.value() == ca && r.normalized() == norm && r.lemma_constant() == lemma;
  };
  bool ok = constants(p1, Rational(1, 3), Rational(1, 3), Rational(4, 3)) &&
            constants(sp, Rational(2, 5), Rational(2, 5), Rational(8, 5)) &&
            constants(nd, Rational(1, 10), Rational(2, 5), Rational(2, 5));
  ok = ok && p1.eigen.zeros == 1 && p1.eigen.eigenvalues == std::vector<CosFn>{CosFn(Rational(1, 3))};
  // (-51 + 14 cos 2t + cos 4t) / (40 (cos t - 2)(cos t + 2)(2 + cos 2t)) in c
  const CosFn eq17(QPoly({Rational(-64), Rational(0), Rational(20), Rational(0), Rational(8)}),
                   QPoly({Rational(-4), Rational(0), Rational(1)}) * QPoly({Rational(1), Rational(0), Rational(2)}) *
                       QPoly({Rational(40)}));
  ok = ok && sp.eigen.zeros == 1 && sp.eigen.eigenvalues == std::vector<CosFn>{eq17};
  ok = ok && nd.eigen.zeros == 2 && nd.eigen.eigenvalues.size() == 2;
  if (ok) {
    std::vector<Rational> vals;
    for (const auto& f : nd.eigen.eigenvalues) {
      if (!f.is_constant()) return false;
      vals.push_back(f.num().coeff(0));
    }
    std::sort(vals.begin(), vals.end());
    ok = vals == std::vector<Rational>{Rational(1, 30), Rational(1, 10)};
  }
  return ok;
}

bool criterion5() {
  auto check = [](DiscName d, VerifyMode mode, std::optional<Rational> tau, bool hf) {
    VerifyRequest r;
    r.disc = d;
    r.mode = mode;
    r.n = 128;
    r.tau = tau;
    r.high_freq = hf;
    const VerifyResult v = run_verify(r);
    std::printf("    %s %s: measured %.6f, predicted %s\n", v.disc.c_str(), v.mode.c_str(), v.measured,
                v.predicted.exact() ? v.predicted.value().to_string().c_str() : "enclosure");
    return v.pass();
  };
  bool ok = check(DiscName::P1Courant, VerifyMode::Twogrid, Rational(2, 3), false);
  ok = check(DiscName::P1Courant, VerifyMode::Smoother, Rational(2, 3), true) && ok;
  for (DiscName d : all_discretizations()) ok = check(d, VerifyMode::Approx, std::nullopt, false) && ok;
  double lo = 1e9, hi = -1e9;
  for (int n : {32, 64, 128}) {
    const double r = measure_twogrid_rate(build_operators(p1_courant(), n), 2.0 / 3, 200).rate;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  std::printf("    two-grid rate spread over n = 32, 64, 128: %.2e\n", hi - lo);
  return ok && hi - lo < 0.01;
}

bool criterion6() {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  int sup_ok = 0;
  for (int done = 0; done < 200;) {
    std::vector<Rational> nv, dv;
    for (int k = 0, d = deg(rng); k <= d; ++k) nv.emplace_back(coef(rng));
    for (int k = 0, d = deg(rng); k <= d; ++k) dv.emplace_back(coef(rng));
    const QPoly num(nv), den(dv);
    if (num.is_zero() || den.is_zero()) continue;
    bool far = true;
    for (int s = 0; s <= 2000 && far; ++s) far = std::abs(eval_d(den, -1 + s / 1000.0)) > 0.5;
    if (!far) continue;
    ++done;
    const CosFn f(num, den);
    const SupResult r = sup_abs(f, Rational(-1), Rational(1), kTol);
    double sampled = 0;
    for (int s = 0; s <= 100000; ++s) {
      const double c = -1 + 2.0 * s / 100000;
      sampled = std::max(sampled, std::abs(eval_d(f.num(), c) / eval_d(f.den(), c)));
    }
    if (r.hi.to_double() >= sampled * (1 - 1e-14) && r.hi.to_double() - sampled < 1e-6) ++sup_ok;
  }

  // planted roots: rationals r/q and +-sqrt(m); bisection oracle counts sign changes of each factor
  int sturm_ok = 0;
  std::uniform_int_distribution<long> small(-12, 12);
  std::uniform_int_distribution<long> pos(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly p(Rational(pos(rng)));
    std::vector<double> roots;
    for (int i = 0, n = static_cast<int>(pos(rng)) % 4; i < n; ++i) {
      const Rational r(small(rng), pos(rng));
      p = p * QPoly({-r, Rational(1)});
      roots.push_back(r.to_double());
    }
    const long m = pos(rng) + 1;
    p = p * QPoly({Rational(-m), Rational(0), Rational(1)});
    roots.push_back(std::sqrt(static_cast<double>(m)));
    roots.push_back(-std::sqrt(static_cast<double>(m)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                roots.end());
    const Rational lo(small(rng), pos(rng));
    const Rational hi = lo + Rational(pos(rng) * 2, pos(rng));
    long expected = std::count_if(roots.begin(), roots.end(),
                                  [&](double r) { return r >= lo.to_double() - 1e-15 && r <= hi.to_double() + 1e-15; });
    if (static_cast<long>(sturm_isolate(p, lo, hi).size()) == expected) ++sturm_ok;
  }
  std::printf("    sup soundness %d/200, root counts %d/200\n", sup_ok, sturm_ok);
  return sup_ok == 200 && sturm_ok == 200;
}

bool criterion7() {
  bool ok = true;
  for (DiscName name : all_discretizations()) {
    const Discretization d = make_discretization(name);
    const SymbolMatrix c = coarse_correction(d);
    const SymbolMatrix p = derive_prolongation(d);
    ok = ok && c * c == c;
    ok = ok && restriction_symbol(p) * stiffness_block(d) * p == coarse_stiffness(d);
    ok = ok && c.h_exponent() == 0 && approx_symbol(d).h_exponent() == 0;
  }
  ok = ok && twogrid_symbol(p1_courant()).h_exponent() == 0;
  ok = ok && smoother_symbol(p1_courant(), HarmonicBasis::of_order(2)).h_exponent() == 0;
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<bool()> run;
  };
  const std::vector<Criterion> all{
      {"1 Jacobi envelope", 1, criterion1},
      {"2 smoothing envelope and minimum", 1, criterion2},
      {"3 two-grid symbol, envelope and minimum", 1, criterion3},
      {"4 approximation constants", 5, criterion4},
      {"5 numeric cross-validation", 30, criterion5},
      {"6 QE soundness properties", 60, criterion6},
      {"7 structural invariants", 5, criterion7},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %s (%.2f s, budget %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.name, secs, c.budget_s,
                in_time ? "" : " over budget", err.empty() ? "" : (" error: " + err).c_str());
  }
  return failed == 0 ? 0 : 1;
}
