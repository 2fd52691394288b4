#pragma once

#include <nlohmann/json.hpp>

#include "wiretap/prob/conditional.hpp"
#include "wiretap/prob/pmf.hpp"

namespace wiretap {

using json = nlohmann::json;

inline json to_json(const AxisList& axes) {
  json arr = json::array();
  for (const auto& a : axes) arr.push_back({{"name", a.name}, {"size", a.size}});
  return arr;
}

inline AxisList axes_from_json(const json& j) {
  AxisList axes;
  for (const auto& e : j) {
    axes.push_back({e.at("name").get<std::string>(), e.at("size").get<std::size_t>()});
  }
  return axes;
}

inline json to_json(const Pmf& p) {
  return json{{"axes", to_json(p.axes())}, {"table", p.table()}};
}

inline Pmf pmf_from_json(const json& j, double norm_tol = kNormTol) {
  return Pmf(axes_from_json(j.at("axes")), j.at("table").get<std::vector<double>>(),
             norm_tol);
}

inline json to_json(const ConditionalPmf& c) {
  return json{{"given_axes", to_json(c.given_axes())},
              {"output_axes", to_json(c.output_axes())},
              {"table", c.table()}};
}

inline ConditionalPmf conditional_from_json(const json& j, double norm_tol = kNormTol) {
  return ConditionalPmf(axes_from_json(j.at("given_axes")),
                        axes_from_json(j.at("output_axes")),
                        j.at("table").get<std::vector<double>>(), norm_tol);
}

}  // namespace wiretap
