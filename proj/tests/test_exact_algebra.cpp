#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lfa/errors.hpp"
#include "lfa/format.hpp"
#include "lfa/laurent.hpp"
#include "lfa/sturm.hpp"

using namespace lfa;

namespace {

QPoly qp(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return QPoly(std::move(v));
}

double eval_d(const QPoly& p, double x) {
  double acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k).to_double();
  return acc;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("gaussian rationals") {
  const Gauss a(Rational(1, 2), Rational(-3));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
  CHECK(a * a.conj() == Gauss(a.norm2()));
  CHECK(Gauss::i_pow(2) == Gauss(-1));
  CHECK(Gauss::i_pow(-1) == Gauss(0, -1));
  bool ok = false;
  const Gauss r = sqrt_exact(Gauss(Rational(-5), Rational(12)), ok);
  REQUIRE(ok);
  CHECK(r * r == Gauss(Rational(-5), Rational(12)));
  sqrt_exact(Gauss(Rational(2)), ok);
  CHECK_FALSE(ok);
}

TEST_CASE("chebyshev examples") {
  CHECK(chebyshev(0) == qp({1}));
  CHECK(chebyshev(1) == qp({0, 1}));
  CHECK(chebyshev(2) == qp({-1, 0, 2}));
  const double c = std::cos(std::numbers::pi / 3);
  for (int k = 1; k < 6; ++k) {
    const double lhs = eval_d(chebyshev(k + 1), c);
    const double rhs = 2 * c * eval_d(chebyshev(k), c) - eval_d(chebyshev(k - 1), c);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("chebyshev matches cos(k arccos c)") {
  for (int k = 0; k <= 12; ++k) {
    const QPoly t = chebyshev(k);
    CHECK(t.degree() == k);
    for (const auto& coef : t.coeffs()) CHECK(coef.is_integer());
    for (int s = 0; s < 64; ++s) {
      const Rational c = Rational(-1) + Rational(2 * s, 63);
      const double exact = t.eval(c).to_double();
      CHECK(std::abs(exact - std::cos(k * std::acos(c.to_double()))) < 1e-12);
    }
  }
}

TEST_CASE("laurent_to_cospoly examples") {
  const auto k = LaurentSymbol::real({{-1, Rational(-1)}, {0, Rational(2)}, {1, Rational(-1)}}, -1);
  const auto [pk, hk] = laurent_to_cospoly(k);
  CHECK(pk == qp({2, -2}));
  CHECK(hk == -1);

  const auto [p5, h5] = laurent_to_cospoly(LaurentSymbol::real({{0, Rational(5)}}, 0));
  CHECK(p5 == qp({5}));
  CHECK(h5 == 0);

  const auto s2 = LaurentSymbol::real({{-2, Rational(1)}, {2, Rational(1)}}, 0);
  const QPoly p2 = laurent_to_cospoly(s2).first;
  CHECK(p2 == qp({-2, 0, 4}));
  const double th = std::numbers::pi / 4;
  CHECK(eval_d(p2, std::cos(th)) == doctest::Approx(s2.eval_theta(th).real()));
}

TEST_CASE("laurent_to_cospoly rejects non-real symbols") {
  CHECK_THROWS_AS(laurent_to_cospoly(LaurentSymbol::real({{1, Rational(1)}}, 0)), NotHermitian);
  CHECK_THROWS_AS(laurent_to_cospoly(LaurentSymbol::real({{-1, Rational(1)}, {1, Rational(2)}}, 0)),
                  NotHermitian);
  // i z - i z^-1 = -2 sin(theta): real but odd
  CHECK_THROWS_AS(laurent_to_cospoly(LaurentSymbol({{-1, Gauss(0, -1)}, {1, Gauss(0, 1)}}, 0)), NotHermitian);
}

TEST_CASE("laurent_to_cospoly is a ring homomorphism") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> width(0, 3);
  auto random_symbol = [&] {
    std::map<int, Rational> m;
    const int w = width(rng);
    m[0] = Rational(coef(rng));
    for (int k = 1; k <= w; ++k) {
      const Rational a(coef(rng), 1 + (coef(rng) + 9) % 4);
      m[k] = a;
      m[-k] = a;
    }
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
    return LaurentSymbol::real(m, 0);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSymbol a = random_symbol();
    const LaurentSymbol b = random_symbol();
    const QPoly pa = laurent_to_cospoly(a).first;
    const QPoly pb = laurent_to_cospoly(b).first;
    CHECK(laurent_to_cospoly(a + b).first == pa + pb);
    CHECK(laurent_to_cospoly(a * b).first == pa * pb);
  }
}

TEST_CASE("cosine_form of a rational symbol") {
  const auto k = LaurentSymbol::real({{-1, Rational(-1)}, {0, Rational(2)}, {1, Rational(-1)}}, 0);
  const auto m = LaurentSymbol::real({{-1, Rational(1)}, {0, Rational(4)}, {1, Rational(1)}}, 0);
  const CosFn f = cosine_form(k.to_zfn() / m.to_zfn());
  CHECK(f == CosFn(qp({2, -2}), qp({4, 2})));
  CHECK_THROWS_AS(cosine_form(LaurentSymbol::real({{1, Rational(1)}}, 0).to_zfn()), NotHermitian);
}

TEST_CASE("poly gcd examples") {
  CHECK(gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
  CHECK(gcd(qp({0, 0, 1}), qp({1, 1})) == qp({1}));
  CHECK(gcd(qp({2, -2}), qp({4, 0, -4})) == qp({-1, 1}));
  CHECK_THROWS(gcd(QPoly{}, QPoly{}));
}

TEST_CASE("rational functions stay reduced") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto random_poly = [&](int deg) {
    std::vector<Rational> v;
    for (int k = 0; k <= deg; ++k) v.emplace_back(coef(rng));
    return QPoly(v);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const QPoly common = random_poly(2);
    QPoly num = random_poly(3) * common;
    QPoly den = random_poly(2) * common;
    if (den.is_zero() || num.is_zero()) continue;
    const CosFn f(num, den);
    CHECK(gcd(f.num(), f.den()).degree() == 0);
    CHECK(f.den().leading() == Rational(1));
    CHECK(f.num() * den == f.den() * num);
  }
  CHECK_THROWS(CosFn(qp({1}), QPoly{}));
}

TEST_CASE("sturm examples") {
  const auto two = sturm_isolate(qp({-1, 0, 1}), Rational(-2), Rational(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].is_point());
  CHECK(two[0].lo == Rational(-1));
  CHECK(two[1].is_point());
  CHECK(two[1].lo == Rational(1));

  const QPoly p = qp({-2, 0, 1});
  auto roots = sturm_isolate(p, Rational(0), Rational(2));
  REQUIRE(roots.size() == 1);
  CHECK_FALSE(roots[0].is_point());
  refine(p, roots[0], Rational(1, 1000000));
  CHECK(roots[0].width() <= Rational(1, 1000000));
  CHECK(roots[0].lo.to_double() <= std::sqrt(2.0));
  CHECK(roots[0].hi.to_double() >= std::sqrt(2.0));

  const auto dbl = sturm_isolate(qp({0, 0, 3}), Rational(-1), Rational(1));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].lo == Rational(0));
  CHECK(dbl[0].hi == Rational(0));
  CHECK(dbl[0].multiplicity == 2);
}

TEST_CASE("square-free decomposition") {
  // (c-1)^3 (c+2)
  const QPoly p = pow(qp({-1, 1}), 3) * qp({2, 1});
  CHECK(square_free_part(p) == qp({-1, 1}) * qp({2, 1}));
  const auto parts = square_free_decomposition(p);
  REQUIRE(parts.size() == 2);
  QPoly rebuilt(Rational(1));
  for (const auto& [f, m] : parts) rebuilt = rebuilt * pow(f, m);
  CHECK(monic(rebuilt) == monic(p));
}

// Planted roots: distinct rationals from linear factors, +-sqrt(m) from c^2 - m
// and none from c^2 + k. The oracle counts planted roots in [lo, hi] and checks
// a sign change across every non-point interval.
TEST_CASE("sturm isolation agrees with a planted-root oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> small(-12, 12);
  std::uniform_int_distribution<long> pos(1, 6);
  std::uniform_int_distribution<int> nlin(0, 4);
  std::uniform_int_distribution<int> nquad(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly p(Rational(small(rng) == 0 ? 1 : pos(rng)));
    std::vector<double> planted;
    const int lin = nlin(rng);
    for (int i = 0; i < lin; ++i) {
      const Rational r(small(rng), pos(rng));
      const int mult = (i == 0 && trial % 5 == 0) ? 2 : 1;
      p = p * pow(QPoly({-r, Rational(1)}), mult);
      planted.push_back(r.to_double());
    }
    const int quad = nquad(rng);
    for (int i = 0; i < quad && p.degree() <= 6; ++i) {
      const long m = pos(rng) + 1;
      if (i % 2 == 0) {
        p = p * qp({-m, 0, 1});
        const double s = std::sqrt(static_cast<double>(m));
        planted.push_back(s);
        planted.push_back(-s);
      } else {
        p = p * qp({m, 0, 1});
      }
    }
    if (p.degree() < 1) continue;
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                  planted.end());
    const Rational lo(small(rng), pos(rng));
    const Rational hi = lo + Rational(pos(rng) * 2, pos(rng));
    int expected = 0;
    for (double r : planted)
      if (r >= lo.to_double() - 1e-15 && r <= hi.to_double() + 1e-15) ++expected;

    const auto got = sturm_isolate(p, lo, hi);
    CHECK_MESSAGE(static_cast<int>(got.size()) == expected, format_poly(p, 'c'));
    const QPoly sf = square_free_part(p);
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].lo >= lo);
      CHECK(got[i].hi <= hi);
      if (i > 0) CHECK(got[i - 1].hi < got[i].lo);
      if (got[i].is_point()) {
        CHECK(p.eval(got[i].lo).is_zero());
      } else {
        CHECK(sign_at(sf, got[i].lo) * sign_at(sf, got[i].hi) < 0);
      }
    }
  }
}

TEST_CASE("real_roots covers all roots") {
  const auto r = real_roots(qp({-6, 11, -6, 1}));
  REQUIRE(r.size() == 3);
  CHECK(r[0].lo == Rational(1));
  CHECK(r[1].lo == Rational(2));
  CHECK(r[2].lo == Rational(3));
  CHECK(real_roots(qp({1, 0, 1})).empty());
}

TEST_CASE("poly string round trip") {
  const QPoly p({Rational(1), Rational(-2, 3), Rational(0), Rational(4)});
  CHECK(format_poly(p, 't') == "1-(2/3)t+4t^3");
  CHECK(parse_poly(format_poly(p, 't'), 't') == p);
  CHECK(parse_poly(format_poly(p, 'c', true), 'c') == p);
  CHECK_THROWS_AS(parse_poly("1+x", 't'), ParseError);
}
