#pragma once

#include "divisor_forge/checks.hpp"
#include "divisor_forge/divisor.hpp"
#include "divisor_forge/fractional.hpp"
#include "divisor_forge/ring.hpp"
#include "json.hpp"

namespace dforge {

// Rationals are exact strings "p/q" (or "p"), never floating point.
nlohmann::json toJson(const Rational& q);
nlohmann::json toJson(const QuotientRing& R);
nlohmann::json toJson(const Ideal& I);
nlohmann::json toJson(const WeilDivisor& D);
nlohmann::json toJson(const FractionalIdeal& F);
nlohmann::json toJson(const QuotientRing& R, const FieldElement& s);
nlohmann::json toJson(const RingMap& phi);
nlohmann::json toJson(const CheckReport& report, const QuotientRing& R);

}  // namespace dforge
