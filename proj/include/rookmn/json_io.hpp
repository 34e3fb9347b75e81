#ifndef ROOKMN_JSON_IO_HPP
#define ROOKMN_JSON_IO_HPP

#include <json.hpp>

#include "rookmn/element.hpp"

namespace rookmn {

// JSON form: {"d":1,"k":1,"m":3} for triplets, the string "zero" for zero.
inline void to_json(nlohmann::json& j, const Element& x) {
  if (x.is_zero()) {
    j = "zero";
    return;
  }
  const Triplet& t = x.triplet();
  j = nlohmann::json{{"d", t.d}, {"k", t.k}, {"m", t.m}};
}

inline void from_json(const nlohmann::json& j, Element& x) {
  if (j.is_string()) {
    if (j.get<std::string>() != "zero") {
      throw ValidationError("element JSON string must be \"zero\", got " + j.dump());
    }
    x = Element::zero();
    return;
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("k") || !j.contains("m")) {
    throw ValidationError("element JSON must be \"zero\" or {\"d\":..,\"k\":..,\"m\":..}, got " +
                          j.dump());
  }
  // Route through the checked constructor so invalid triplets are rejected
  // with the same messages as the text parser.
  x = make_element(j.at("d").get<Int>(), j.at("k").get<Int>(), j.at("m").get<Int>(),
                   Ambient::unbounded());
}

}  // namespace rookmn

#endif  // ROOKMN_JSON_IO_HPP
