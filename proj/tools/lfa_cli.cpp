// Command-line front end: smoother | twogrid | approx | verify.
//
// Exit codes: 0 success, 1 analysis failure, 2 usage error, 3 verification
// outside tolerance.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "lfa/analysis.hpp"
#include "lfa/errors.hpp"
#include "lfa/serialize.hpp"
#include "lfa/verify.hpp"

namespace {

using namespace lfa;

enum class Format { Human, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "human";
  std::string tolerance = "1/1000000000";
  std::uint64_t seed = 1;
};

struct SweepArgs {
  std::string disc = "p1";
  std::string tau;
  bool sweep = false;
  bool high_freq = false;
  std::string step = "1/100";
  std::string from = "-1/2";
  std::string to = "3/2";
};

struct ApproxArgs {
  std::string disc = "p1";
  bool normalized = false;
  bool lemma = false;
};

struct VerifyArgs {
  std::string disc = "p1";
  std::string mode;
  int n = 128;
  std::string tau;
  bool high_freq = false;
  int iterations = 200;
};

Format parse_format(const std::string& s) {
  if (s == "human") return Format::Human;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "'");
}

Rational parse_rational_arg(const std::string& what, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

DiscName parse_disc_arg(const std::string& id) {
  try {
    return parse_disc_name(id);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

std::string both(const Rational& r) { return r.to_string() + " (" + format_decimal(r.to_double()) + ")"; }

std::string both(const Rational& lo, const Rational& hi) {
  if (lo == hi) return both(lo);
  return exact_or_enclosure(lo, hi) + " (" + format_decimal(((lo + hi) / Rational(2)).to_double()) + ")";
}

std::string range_text(const PiecewisePoly& q, std::size_t k) {
  const std::string left = k == 0 ? "" : q.breakpoints[k - 1].to_string();
  const std::string right = k == q.breakpoints.size() ? "" : q.breakpoints[k].to_string();
  if (left.empty() && right.empty()) return "all tau";
  if (left.empty()) return "tau <= " + right;
  if (right.empty()) return "tau >= " + left;
  return left + " <= tau <= " + right;
}

// ---------------------------------------------------------------------------

struct FamilySetup {
  std::string title;
  TauEigenSet eigen;
  Rational c_lo;
  Rational c_hi;
};

FamilySetup smoother_family(const SweepArgs& a) {
  const Discretization d = make_discretization(parse_disc_arg(a.disc));
  if (d.name != DiscName::P1Courant) throw UsageError("smoother analysis supports --disc p1 only");
  FamilySetup f;
  f.title = "damped Jacobi, " + a.disc;
  f.eigen = eigenvalues(smoother_symbol(d, HarmonicBasis::of_order(1)));
  f.c_lo = a.high_freq ? high_freq_lo() : Rational(-1);
  f.c_hi = a.high_freq ? high_freq_hi() : Rational(1);
  return f;
}

FamilySetup twogrid_family(const SweepArgs& a) {
  const Discretization d = make_discretization(parse_disc_arg(a.disc));
  if (d.name != DiscName::P1Courant) throw UsageError("two-grid analysis supports --disc p1 only");
  if (a.high_freq) throw UsageError("--high-freq applies to the smoother only");
  return {"two-grid S C S, " + a.disc, eigenvalues(twogrid_symbol(d)), Rational(-1), Rational(1)};
}

PiecewisePoly envelope(const FamilySetup& f) {
  std::vector<QPoly> pieces;
  for (const auto& e : f.eigen.eigenvalues) {
    const bool even = e.degree() <= 2 && e.coeff(1).is_zero();
    const bool symmetric = f.c_lo == -f.c_hi;
    PiecewisePoly q;
    if (even && e.degree() == 2 && symmetric)
      q = parametric_envelope(e, Rational(0), f.c_hi * f.c_hi, Substitution::CSquared);
    else
      q = parametric_envelope(e, f.c_lo, f.c_hi, Substitution::C);
    pieces.insert(pieces.end(), q.pieces.begin(), q.pieces.end());
  }
  if (pieces.empty()) pieces.emplace_back();
  return upper_envelope(pieces);
}

int run_family(const FamilySetup& f, const SweepArgs& a, const Globals& g, const std::string& command) {
  const Format fmt = parse_format(g.format);
  const Rational tol = parse_rational_arg("--tolerance", g.tolerance);
  const std::string range = "[" + f.c_lo.to_string() + ", " + f.c_hi.to_string() + "]";

  if (!a.sweep) {
    if (a.tau.empty()) throw UsageError("give --tau <rational> or --sweep");
    const Rational tau = parse_rational_arg("--tau", a.tau);
    std::vector<CosFn> fs;
    for (const auto& e : f.eigen.eigenvalues) fs.emplace_back(tau_freeze(e, tau));
    const SupResult s = sup_abs(fs, f.c_lo, f.c_hi, tol);
    if (fmt == Format::Json) {
      Json j;
      j["command"] = command;
      j["disc"] = a.disc;
      j["tau"] = tau.to_string();
      j["c_range"] = {f.c_lo.to_string(), f.c_hi.to_string()};
      j["eigen"] = to_json(f.eigen);
      j["sup"] = to_json(s);
      std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
      std::cout << "tau,q_exact,q\n" << tau.to_string() << "," << exact_or_enclosure(s.lo, s.hi) << ","
                << format_decimal(s.approx()) << "\n";
    } else {
      std::cout << f.title << ", tau = " << tau.to_string() << ", c in " << range << "\n";
      std::cout << "  eigenvalues: " << f.eigen.zeros << " zero";
      for (const auto& e : f.eigen.eigenvalues) std::cout << ", " << format_taupoly(e);
      std::cout << "\n  q = sup |lambda| = " << both(s.lo, s.hi) << "\n";
      if (!s.attained_at.empty()) {
        std::cout << "  attained at c =";
        for (const auto& p : s.attained_at) std::cout << " " << p.to_string();
        std::cout << "\n";
      }
    }
    return 0;
  }

  const PiecewisePoly q = envelope(f);
  if (fmt == Format::Csv) {
    const Rational step = parse_rational_arg("--step", a.step);
    const Rational from = parse_rational_arg("--from", a.from);
    const Rational to = parse_rational_arg("--to", a.to);
    if (step.sign() <= 0 || to < from) throw UsageError("sweep needs --step > 0 and --from <= --to");
    std::cout << "tau,q\n";
    for (Rational t = from; t <= to; t += step)
      std::cout << format_decimal(t.to_double()) << "," << format_decimal(q.eval(t).to_double()) << "\n";
    return 0;
  }
  const MinResult m = piecewise_min(q, std::nullopt, std::nullopt, tol);
  if (fmt == Format::Json) {
    Json j;
    j["command"] = command;
    j["disc"] = a.disc;
    j["c_range"] = {f.c_lo.to_string(), f.c_hi.to_string()};
    j["eigen"] = to_json(f.eigen);
    j["envelope"] = to_json(q);
    j["min"] = to_json(m);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << f.title << ", q(tau) = sup over c in " << range << "\n";
  for (std::size_t k = 0; k < q.pieces.size(); ++k)
    std::cout << "  " << format_poly(q.pieces[k], 't') << "  for " << range_text(q, k) << "\n";
  std::cout << "  min q = " << both(m.lo, m.hi) << " at tau = " << m.argmin.to_string() << "\n";
  return 0;
}

int run_approx(const ApproxArgs& a, const Globals& g) {
  const Format fmt = parse_format(g.format);
  const Rational tol = parse_rational_arg("--tolerance", g.tolerance);
  const Discretization d = make_discretization(parse_disc_arg(a.disc));
  const ApproxReport r = approx_report(d, tol);
  if (!r.c_a.exact()) throw IrreducibleSpectrum("C_A is only known as an enclosure");

  if (fmt == Format::Json) {
    Json j;
    j["command"] = "approx";
    j["disc"] = a.disc;
    j["eigen"] = to_json(r.eigen);
    j["c_a"] = to_json(r.c_a);
    if (a.normalized) j["normalized"] = r.normalized().to_string();
    if (a.lemma) j["lemma"] = r.lemma_constant().to_string();
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "quantity,exact,decimal\n";
    std::cout << "C_A," << r.c_a.value().to_string() << "," << format_decimal(r.c_a.approx()) << "\n";
    if (a.normalized)
      std::cout << "normalized," << r.normalized().to_string() << "," << format_decimal(r.normalized().to_double()) << "\n";
    if (a.lemma)
      std::cout << "lemma," << r.lemma_constant().to_string() << "," << format_decimal(r.lemma_constant().to_double())
                << "\n";
  } else {
    std::cout << "approximation constant, " << a.disc << "\n";
    std::cout << "  eigenvalues: " << r.eigen.zeros << " zero";
    for (const auto& e : r.eigen.eigenvalues) std::cout << ", " << format_ratfn(e, 'c');
    std::cout << "\n  C_A = " << both(r.c_a.value()) << "\n";
    if (a.normalized) std::cout << "  normalized C_A = " << both(r.normalized()) << "\n";
    if (a.lemma) std::cout << "  4 C_A = " << both(r.lemma_constant()) << "\n";
  }
  return 0;
}

int run_verify_cmd(const VerifyArgs& a, const Globals& g) {
  const Format fmt = parse_format(g.format);
  VerifyRequest req;
  req.disc = parse_disc_arg(a.disc);
  try {
    req.mode = parse_verify_mode(a.mode);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  req.n = a.n;
  if (!a.tau.empty()) req.tau = parse_rational_arg("--tau", a.tau);
  if (req.mode != VerifyMode::Approx && !req.tau) throw UsageError("--tau is required for mode " + a.mode);
  if (req.mode != VerifyMode::Approx && req.disc != DiscName::P1Courant)
    throw UsageError("mode " + a.mode + " supports --disc p1 only");
  req.high_freq = a.high_freq;
  req.seed = g.seed;
  req.iterations = a.iterations;
  req.qe_tolerance = parse_rational_arg("--tolerance", g.tolerance);

  VerifyResult v;
  try {
    v = run_verify(req);
  } catch (const BadGridSize& e) {
    throw UsageError(e.what());
  }
  if (fmt == Format::Json) {
    std::cout << to_json(v).dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "disc,mode,n,tau,measured,predicted,abs_error,tolerance,pass\n"
              << v.disc << "," << v.mode << "," << v.n << "," << (v.tau ? v.tau->to_string() : "") << ","
              << format_decimal(v.measured) << "," << exact_or_enclosure(v.predicted.lo, v.predicted.hi) << ","
              << format_decimal(v.abs_error) << "," << format_decimal(v.tolerance) << ","
              << (v.pass() ? "pass" : "fail") << "\n";
  } else {
    std::cout << "verify " << v.disc << " " << v.mode << (v.high_freq ? " (high frequencies)" : "") << ", n = " << v.n;
    if (v.tau) std::cout << ", tau = " << v.tau->to_string();
    std::cout << "\n  measured  " << format_decimal(v.measured) << "\n  predicted "
              << both(v.predicted.lo, v.predicted.hi) << "\n  abs error " << format_decimal(v.abs_error)
              << " (tolerance " << format_decimal(v.tolerance) << "): " << (v.pass() ? "pass" : "FAIL") << "\n";
  }
  return v.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local Fourier analysis of 1D finite-element multigrid"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "enclosure width for irrational suprema")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed for numeric verification")->capture_default_str();

  SweepArgs sm;
  auto* smoother = app.add_subcommand("smoother", "damped Jacobi smoothing analysis");
  smoother->add_option("--disc", sm.disc, "p1")->capture_default_str();
  smoother->add_option("--tau", sm.tau, "damping parameter (rational or decimal)");
  smoother->add_flag("--sweep", sm.sweep, "piecewise q(tau) over all tau");
  smoother->add_flag("--high-freq", sm.high_freq, "restrict to high frequencies, c in [-1, 0]");
  smoother->add_option("--step", sm.step, "CSV sweep step")->capture_default_str();
  smoother->add_option("--from", sm.from, "CSV sweep start")->capture_default_str();
  smoother->add_option("--to", sm.to, "CSV sweep end")->capture_default_str();

  SweepArgs tg;
  auto* twogrid = app.add_subcommand("twogrid", "two-grid convergence analysis");
  twogrid->add_option("--disc", tg.disc, "p1")->capture_default_str();
  twogrid->add_option("--tau", tg.tau, "damping parameter (rational or decimal)");
  twogrid->add_flag("--sweep", tg.sweep, "piecewise q(tau) over all tau");
  twogrid->add_option("--step", tg.step, "CSV sweep step")->capture_default_str();
  twogrid->add_option("--from", tg.from, "CSV sweep start")->capture_default_str();
  twogrid->add_option("--to", tg.to, "CSV sweep end")->capture_default_str();

  ApproxArgs ap;
  auto* approx = app.add_subcommand("approx", "approximation constant C_A");
  approx->add_option("--disc", ap.disc, "p1, p2spline or p2nodal")->capture_default_str();
  approx->add_flag("--normalized", ap.normalized, "scale by (h / node spacing)^2");
  approx->add_flag("--with-lemma-factor", ap.lemma, "also print 4 C_A");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "numeric cross-check on a periodic grid");
  verify->add_option("--disc", vf.disc, "p1, p2spline or p2nodal")->capture_default_str();
  verify->add_option("--mode", vf.mode, "smoother, twogrid or approx")->required();
  verify->add_option("--n", vf.n, "number of grid nodes")->capture_default_str();
  verify->add_option("--tau", vf.tau, "damping parameter");
  verify->add_flag("--high-freq", vf.high_freq, "smoother mode: high frequencies only");
  verify->add_option("--iterations", vf.iterations, "power iteration steps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*smoother) return run_family(smoother_family(sm), sm, g, "smoother");
    if (*twogrid) return run_family(twogrid_family(tg), tg, g, "twogrid");
    if (*approx) return run_approx(ap, g);
    if (*verify) return run_verify_cmd(vf, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const lfa::Error& e) {
    std::cerr << "analysis failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
