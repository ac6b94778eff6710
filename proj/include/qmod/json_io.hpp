#pragma once

#include <json.hpp>

#include "qmod/artheory.hpp"
#include "qmod/auslander.hpp"

namespace qmod {

using nlohmann::json;

template <class K>
json to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(FieldTraits<K>::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class K>
json to_json(const Representation<K>& X) {
  json mats = json::array();
  for (const auto& m : X.mats) mats.push_back(to_json(m));
  return json{{"dims", X.dims}, {"mats", std::move(mats)}};
}

template <class K>
json to_json(const EnumerationResult<K>& res) {
  json mods = json::array();
  for (int i = 0; i < res.count(); ++i) {
    mods.push_back(json{{"id", i},
                        {"dims", res.modules[i].dims},
                        {"projective", static_cast<bool>(res.projective[i])},
                        {"injective", static_cast<bool>(res.injective[i])},
                        {"tau", res.tau_link[i]}});
  }
  return json{{"schema", 1},
              {"field", FieldTraits<K>::name()},
              {"status",
               res.status == EnumerationResult<K>::Complete ? "Complete" : "ExceededCap"},
              {"cap_reason", res.cap_reason},
              {"count", res.count()},
              {"caps",
               {{"max_modules", res.caps.max_modules},
                {"max_total_dim", res.caps.max_total_dim}}},
              {"seed", res.seed},
              {"modules", std::move(mods)}};
}

inline json to_json(const AuslanderProfile& p) {
  json j{{"gld", p.gld},
         {"domdim", p.domdim},
         {"domdim_at_cap", p.domdim_at_cap},
         {"prinj", p.prinj},
         {"simple_pd", p.simple_pd}};
  if (p.n)
    j["n"] = *p.n;
  else
    j["n"] = nullptr;
  return j;
}

inline json formula_row(const std::string& name, long long expected, long long observed) {
  return json{{"name", name},
              {"expected", expected},
              {"observed", observed},
              {"pass", expected == observed}};
}

}  // namespace qmod
