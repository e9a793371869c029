#include "lfa/serialize.hpp"

#include "lfa/errors.hpp"

namespace lfa {

namespace {

Rational rat(const Json& j) { return Rational::parse(j.get<std::string>()); }

void value_fields(Json& j, const Rational& lo, const Rational& hi) {
  if (lo == hi) {
    j["value"] = lo.to_string();
  } else {
    j["lo"] = lo.to_string();
    j["hi"] = hi.to_string();
  }
}

std::pair<Rational, Rational> read_value(const Json& j) {
  if (j.contains("value")) {
    const Rational v = rat(j.at("value"));
    return {v, v};
  }
  return {rat(j.at("lo")), rat(j.at("hi"))};
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

std::string exact_or_enclosure(const Rational& lo, const Rational& hi) {
  if (lo == hi) return lo.to_string();
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

Json to_json(const EigenSet& e) {
  Json j;
  j["zeros"] = e.zeros;
  j["eigenvalues"] = Json::array();
  for (const auto& f : e.eigenvalues) j["eigenvalues"].push_back(format_ratfn(f, 'c'));
  return j;
}

Json to_json(const TauEigenSet& e) {
  Json j;
  j["zeros"] = e.zeros;
  j["eigenvalues"] = Json::array();
  for (const auto& f : e.eigenvalues) j["eigenvalues"].push_back(format_taupoly(f));
  return j;
}

Json to_json(const SupResult& s) {
  Json j;
  j["kind"] = s.exact() ? "exact" : "enclosure";
  value_fields(j, s.lo, s.hi);
  j["attained_at"] = Json::array();
  for (const auto& p : s.attained_at) j["attained_at"].push_back(p.to_string());
  return j;
}

Json to_json(const PiecewisePoly& q) {
  Json j;
  j["breakpoints"] = Json::array();
  for (const auto& b : q.breakpoints) j["breakpoints"].push_back(b.to_string());
  j["pieces"] = Json::array();
  for (const auto& p : q.pieces) j["pieces"].push_back(format_poly(p, 't'));
  return j;
}

Json to_json(const MinResult& m) {
  Json j;
  j["argmin"] = m.argmin.to_string();
  value_fields(j, m.lo, m.hi);
  return j;
}

Json to_json(const VerifyResult& v) {
  Json j;
  j["disc"] = v.disc;
  j["mode"] = v.mode;
  j["n"] = v.n;
  j["tau"] = v.tau ? Json(v.tau->to_string()) : Json(nullptr);
  j["high_freq"] = v.high_freq;
  j["measured"] = v.measured;
  j["predicted"] = exact_or_enclosure(v.predicted.lo, v.predicted.hi);
  j["abs_error"] = v.abs_error;
  j["tolerance"] = v.tolerance;
  j["pass"] = v.pass();
  return j;
}

EigenSet eigenset_from_json(const Json& j) {
  return guarded([&] {
    EigenSet e;
    e.zeros = j.at("zeros").get<int>();
    for (const auto& s : j.at("eigenvalues")) e.eigenvalues.push_back(parse_ratfn(s.get<std::string>(), 'c'));
    return e;
  });
}

TauEigenSet tau_eigenset_from_json(const Json& j) {
  return guarded([&] {
    TauEigenSet e;
    e.zeros = j.at("zeros").get<int>();
    for (const auto& s : j.at("eigenvalues")) e.eigenvalues.push_back(parse_taupoly(s.get<std::string>()));
    return e;
  });
}

SupResult sup_from_json(const Json& j) {
  return guarded([&] {
    SupResult s;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "exact" && kind != "enclosure") throw ParseError("unknown sup kind '" + kind + "'");
    s.kind = kind == "exact" ? SupResult::Kind::ExactRational : SupResult::Kind::CertifiedEnclosure;
    std::tie(s.lo, s.hi) = read_value(j);
    for (const auto& p : j.at("attained_at")) s.attained_at.push_back(RealPoint::parse(p.get<std::string>()));
    return s;
  });
}

PiecewisePoly piecewise_from_json(const Json& j) {
  return guarded([&] {
    PiecewisePoly q;
    for (const auto& b : j.at("breakpoints")) q.breakpoints.push_back(RealPoint::parse(b.get<std::string>()));
    for (const auto& p : j.at("pieces")) q.pieces.push_back(parse_poly(p.get<std::string>(), 't'));
    if (q.pieces.size() != q.breakpoints.size() + 1) throw ParseError("pieces/breakpoints count mismatch");
    return q;
  });
}

MinResult min_from_json(const Json& j) {
  return guarded([&] {
    MinResult m;
    m.argmin = RealPoint::parse(j.at("argmin").get<std::string>());
    std::tie(m.lo, m.hi) = read_value(j);
    return m;
  });
}

VerifyResult verify_from_json(const Json& j) {
  return guarded([&] {
    VerifyResult v;
    v.disc = j.at("disc").get<std::string>();
    v.mode = j.at("mode").get<std::string>();
    v.n = j.at("n").get<int>();
    if (!j.at("tau").is_null()) v.tau = rat(j.at("tau"));
    v.high_freq = j.at("high_freq").get<bool>();
    v.measured = j.at("measured").get<double>();
    const std::string pred = j.at("predicted").get<std::string>();
    if (!pred.empty() && pred.front() == '[') {
      const auto comma = pred.find(", ");
      if (comma == std::string::npos || pred.back() != ']') throw ParseError("malformed enclosure '" + pred + "'");
      v.predicted.kind = SupResult::Kind::CertifiedEnclosure;
      v.predicted.lo = Rational::parse(pred.substr(1, comma - 1));
      v.predicted.hi = Rational::parse(pred.substr(comma + 2, pred.size() - comma - 3));
    } else {
      v.predicted.lo = v.predicted.hi = Rational::parse(pred);
    }
    v.abs_error = j.at("abs_error").get<double>();
    v.tolerance = j.at("tolerance").get<double>();
    return v;
  });
}

}  // namespace lfa
