#include <doctest.h>

#include "lfa/errors.hpp"
#include "lfa/serialize.hpp"

using namespace lfa;

TEST_CASE("eigen sets round trip") {
  const EigenSet e = eigenvalues(approx_symbol(p2_spline()));
  const Json j = to_json(e);
  CHECK(j.at("zeros") == 1);
  const EigenSet back = eigenset_from_json(Json::parse(j.dump()));
  CHECK(back.zeros == e.zeros);
  CHECK(back.eigenvalues == e.eigenvalues);

  const TauEigenSet t = eigenvalues(twogrid_symbol(p1_courant()));
  const Json jt = to_json(t);
  CHECK(jt.dump() == R"({"zeros":1,"eigenvalues":["(1-2t+t^2) + (-2t+3t^2)c^2"]})");
  CHECK(tau_eigenset_from_json(jt).eigenvalues == t.eigenvalues);
}

TEST_CASE("sup results round trip") {
  const SupResult exact = approx_report(p2_spline()).c_a;
  const Json j = to_json(exact);
  CHECK(j.at("kind") == "exact");
  CHECK(j.at("value") == "2/5");
  const SupResult back = sup_from_json(j);
  CHECK(back.exact());
  CHECK(back.value() == Rational(2, 5));
  CHECK(back.attained_at == exact.attained_at);

  const SupResult enc = sup_abs(CosFn(QPoly({Rational(0), Rational(-1), Rational(0), Rational(1)})), Rational(-1),
                                Rational(1), Rational(1, 1000000));
  const SupResult enc_back = sup_from_json(Json::parse(to_json(enc).dump()));
  CHECK_FALSE(enc_back.exact());
  CHECK(enc_back.lo == enc.lo);
  CHECK(enc_back.hi == enc.hi);
  CHECK(enc_back.attained_at == enc.attained_at);
  CHECK(exact_or_enclosure(Rational(1), Rational(2)) == "[1, 2]");
}

TEST_CASE("piecewise polynomials round trip") {
  const PiecewisePoly q = parametric_envelope(parse_taupoly("(1-2t+t^2) + (-2t+3t^2)c^2"), Rational(0), Rational(1),
                                              Substitution::CSquared);
  const Json j = to_json(q);
  CHECK(j.dump() == R"({"breakpoints":["0","2/3"],"pieces":["1-4t+4t^2","1-2t+t^2","1-4t+4t^2"]})");
  CHECK(piecewise_from_json(j) == q);

  const PiecewisePoly irr = upper_envelope({parse_poly("t^2", 't'), parse_poly("2", 't')});
  CHECK(piecewise_from_json(Json::parse(to_json(irr).dump())) == irr);

  const MinResult m = piecewise_min(q);
  const MinResult mb = min_from_json(to_json(m));
  CHECK(mb.argmin == m.argmin);
  CHECK(mb.lo == Rational(1, 9));
}

TEST_CASE("verify results round trip") {
  VerifyResult v;
  v.disc = "p1";
  v.mode = "twogrid";
  v.n = 128;
  v.tau = Rational(2, 3);
  v.measured = 0.1112;
  v.predicted.lo = v.predicted.hi = Rational(1, 9);
  v.abs_error = 0.0001;
  v.tolerance = 0.01;
  const Json j = to_json(v);
  CHECK(j.at("tau") == "2/3");
  CHECK(j.at("predicted") == "1/9");
  CHECK(j.at("pass") == true);
  const VerifyResult b = verify_from_json(j);
  CHECK(b.tau == v.tau);
  CHECK(b.predicted.lo == Rational(1, 9));
  CHECK(b.measured == v.measured);
  CHECK(b.pass());

  v.tau.reset();
  v.predicted.hi = Rational(1, 8);
  v.predicted.kind = SupResult::Kind::CertifiedEnclosure;
  const VerifyResult b2 = verify_from_json(Json::parse(to_json(v).dump()));
  CHECK_FALSE(b2.tau.has_value());
  CHECK(b2.predicted.hi == Rational(1, 8));
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(eigenset_from_json(Json::parse(R"({"zeros":"x"})")), ParseError);
  CHECK_THROWS_AS(sup_from_json(Json::parse(R"({"kind":"maybe","value":"1","attained_at":[]})")), ParseError);
  CHECK_THROWS_AS(piecewise_from_json(Json::parse(R"({"breakpoints":["0"],"pieces":["1"]})")), ParseError);
  CHECK_THROWS_AS(min_from_json(Json::parse(R"({"argmin":"1/0","value":"1"})")), ParseError);
}
