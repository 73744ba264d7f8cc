#include "greenhall/json_io.hpp"

#include <stdexcept>

#include "greenhall/suites.hpp"

namespace greenhall {

Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int v : p.parts()) j.push_back(v);
  return j;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("partition: expected integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.str();
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial: expected object");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    p.set_coeff(std::stoll(k), Rational::parse(v.get<std::string>()));
  }
  return p;
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json to_json(const ClassFunction& f) {
  Json j = Json::object();
  for (const auto& [cls, v] : f.values()) j[cls.str()] = to_json(v);
  return j;
}

Json to_json(const PairClassFunction& f) {
  Json j = Json::object();
  for (const auto& [cls, v] : f.values()) {
    j[cls.first.str() + "|" + cls.second.str()] = to_json(v);
  }
  return j;
}

Json to_json(const HeckeReport& r) {
  return Json{{"applied", r.applied.str()},
              {"product", r.product.str()},
              {"equal", r.equal}};
}

LocalSystemSpec local_system_from_json(const Json& j) {
  LocalSystemSpec spec;
  if (!j.is_object()) throw std::invalid_argument("local system: expected object");
  spec.rank = j.at("rank").get<int>();
  spec.q = j.at("q").get<long>();
  for (const auto& pj : j.at("places")) {
    Place p;
    p.id = pj.at("id").get<std::string>();
    p.degree = pj.at("degree").get<int>();
    for (const auto& e : pj.at("eigenvalues")) {
      p.eigenvalues.push_back(Rational::parse(e.get<std::string>()));
    }
    spec.places.push_back(std::move(p));
  }
  spec.validate();
  return spec;
}

DivisorTuple divisors_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("divisors: expected object");
  DivisorTuple d;
  for (const auto& [id, arr] : j.items()) {
    if (!arr.is_array()) throw std::invalid_argument("divisors: expected arrays");
    std::vector<int> mult;
    for (const auto& v : arr) {
      int m = v.get<int>();
      if (m < 0) throw std::invalid_argument("divisors: negative multiplicity");
      mult.push_back(m);
    }
    d.entries[id] = std::move(mult);
  }
  return d;
}

Json to_json(const LocalSystemSpec& spec) {
  Json places = Json::array();
  for (const Place& p : spec.places) {
    Json eig = Json::array();
    for (const Rational& e : p.eigenvalues) eig.push_back(e.str());
    places.push_back(Json{{"id", p.id}, {"degree", p.degree}, {"eigenvalues", eig}});
  }
  return Json{{"rank", spec.rank}, {"q", spec.q}, {"places", places}};
}

Json to_json(const DivisorTuple& d) {
  Json j = Json::object();
  for (const auto& [id, mult] : d.entries) {
    Json arr = Json::array();
    for (int m : mult) arr.push_back(m);
    j[id] = arr;
  }
  return j;
}

Json report_to_json(const SuiteReport& report, bool include_timings) {
  Json cases = Json::array();
  for (const SuiteCase& c : report.cases) {
    Json cj{{"id", c.id}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (include_timings) cj["elapsed_us"] = c.elapsed_us;
    cases.push_back(std::move(cj));
  }
  return Json{{"suite", report.suite_name},
              {"bound", report.size_bound},
              {"seed", report.seed},
              {"summary",
               Json{{"total", report.total()},
                    {"passed", report.passed()},
                    {"failed", report.failed()}}},
              {"cases", cases}};
}

}  // namespace greenhall
