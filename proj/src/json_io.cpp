#include "divisor_forge/json_io.hpp"

namespace dforge {

namespace {

nlohmann::json formatted(const QuotientRing& R, const std::vector<Polynomial>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (auto& p : ps) out.push_back(R.format(p));
  return out;
}

}  // namespace

nlohmann::json toJson(const Rational& q) { return toString(q); }

nlohmann::json toJson(const QuotientRing& R) {
  nlohmann::json degrees = nlohmann::json::array();
  for (size_t i = 0; i < R.nvars(); ++i) degrees.push_back(R.grading().variableDegree(i));
  std::vector<Polynomial> relations;
  for (auto& r : R.relations())
    if (!r.isZero()) relations.push_back(r);
  return {{"name", R.name()}, {"variables", R.variables()}, {"relations", formatted(R, relations)},
          {"degrees", degrees}};
}

nlohmann::json toJson(const Ideal& I) {
  return {{"ring", I.ring()->name()}, {"generators", formatted(*I.ring(), I.displayGenerators())}};
}

nlohmann::json toJson(const WeilDivisor& D) {
  nlohmann::json terms = nlohmann::json::array();
  for (const WeilDivisor::Term* t : D.displayOrder())
    terms.push_back({{"coeff", toJson(t->coefficient)}, {"prime", formatted(*D.ring(), t->prime.displayGenerators())}});
  return {{"ring", D.ring()->name()},
          {"tier", D.tier() == Tier::Integer ? "integer" : "rational"},
          {"primality_assumed", D.primalityAssumed()},
          {"terms", terms}};
}

nlohmann::json toJson(const FractionalIdeal& F) {
  const QuotientRing& R = *F.ring();
  return {{"ring", R.name()},
          {"numerator", formatted(R, F.numerator().displayGenerators())},
          {"denominator", R.format(F.denominator())}};
}

nlohmann::json toJson(const QuotientRing& R, const FieldElement& s) {
  return {{"ring", R.name()}, {"numerator", R.format(s.numerator)}, {"denominator", R.format(s.denominator)}};
}

nlohmann::json toJson(const RingMap& phi) {
  return {{"source", phi.source()->name()},
          {"target", phi.target()->name()},
          {"images", formatted(*phi.target(), phi.images())}};
}

nlohmann::json toJson(const CheckReport& report, const QuotientRing& R) {
  nlohmann::json witness = nullptr;
  if (report.witnessIdeal)
    witness = toJson(*report.witnessIdeal);
  else if (report.witnessElement)
    witness = toJson(R, *report.witnessElement);
  return {{"verdict", verdictString(report.verdict)}, {"witness", witness}, {"note", report.note}};
}

}  // namespace dforge
