#pragma once

#include <json.hpp>

#include "lfa/analysis.hpp"
#include "lfa/qe.hpp"
#include "lfa/verify.hpp"

namespace lfa {

using Json = nlohmann::ordered_json;

// Exact values travel as strings ("2/3"); keys keep a fixed order.
Json to_json(const EigenSet& e);
Json to_json(const TauEigenSet& e);
Json to_json(const SupResult& s);
Json to_json(const PiecewisePoly& q);
Json to_json(const MinResult& m);
Json to_json(const VerifyResult& v);

EigenSet eigenset_from_json(const Json& j);
TauEigenSet tau_eigenset_from_json(const Json& j);
SupResult sup_from_json(const Json& j);
PiecewisePoly piecewise_from_json(const Json& j);
MinResult min_from_json(const Json& j);
VerifyResult verify_from_json(const Json& j);

/// "2/5" for exact results, "[lo, hi]" for enclosures.
std::string exact_or_enclosure(const Rational& lo, const Rational& hi);

}  // namespace lfa
