#include "ectors/json_io.hpp"

namespace ectors {

Json rat_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Rat json_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json poly_json(const PolyQ& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(rat_json(c));
  return a;
}

PolyQ json_poly(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array");
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(json_rat(x));
  return PolyQ(std::move(c));
}

Json elem_json(const NfElem& x) {
  Json a = Json::array();
  for (const auto& c : x.coords()) a.push_back(rat_json(c));
  return a;
}

NfElem json_elem(const NumberField& K, const Json& j) {
  if (!j.is_array() || j.size() > static_cast<std::size_t>(K.degree()))
    throw ParseError("bad field element " + j.dump());
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(json_rat(x));
  c.resize(static_cast<std::size_t>(K.degree()), Rat(0));
  return K.from_coords(std::move(c));
}

}  // namespace ectors
