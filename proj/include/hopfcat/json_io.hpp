// JSON forms of exact scalars: a cyclotomic is {"n": order, "c": [[exp, num, den]]}
// at its canonical (minimal) order.  Numerators and denominators that do not
// fit in int64 are written as decimal strings.

#ifndef HOPFCAT_JSON_IO_HPP_
#define HOPFCAT_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace hopfcat {

inline nlohmann::json rational_part_json(const Rational& q, bool numerator) {
  if (q.is_small())
    return numerator ? q.num() : q.den();
  return numerator ? q.numerator_str() : q.denominator_str();
}

inline nlohmann::json cyclo_to_json(const CycloNumber& x) {
  CycloNumber c = x.canonical();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, q] : c.terms())
    terms.push_back({e, rational_part_json(q, true), rational_part_json(q, false)});
  return {{"n", c.order()}, {"c", terms}};
}

inline CycloNumber cyclo_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("c"))
    throw PreconditionViolated("cyclotomic JSON must have \"n\" and \"c\"");
  auto part = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
  };
  std::vector<CycloNumber::Term> terms;
  for (const auto& t : j.at("c")) {
    if (!t.is_array() || t.size() != 3)
      throw PreconditionViolated("cyclotomic term must be [exp, num, den]");
    terms.emplace_back(t[0].get<int>(), Rational::from_strings(part(t[1]), part(t[2])));
  }
  return CycloNumber::from_terms(j.at("n").get<int>(), terms);
}

inline nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const CycloNumber& x : v)
    a.push_back(cyclo_to_json(x));
  return a;
}

inline Vec vec_from_json(const nlohmann::json& j) {
  Vec v;
  for (const auto& x : j)
    v.push_back(cyclo_from_json(x));
  return v;
}

} // namespace hopfcat

#endif
