#pragma once

#include <json.hpp>

#include "xm/crystal.hpp"
#include "xm/qlaurent.hpp"
#include "xm/rigged.hpp"

namespace xm {

// Canonical JSON forms:
//   tableau {"rows":[[1,1],[2,4]]}
//   path    {"n":4,"factors":[tableau,...]}   (leftmost factor first)
//   rc      {"n":4,"L":[{"a":1,"i":1,"count":2},...],"nu":[[{"len":3,"rig":1},...],...]}
//   poly    {"poly":[{"exp":0,"coef":"2"},...]}  (coefficients as strings)
nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j, int n);
nlohmann::json path_to_json(const Path& p);
Path path_from_json(const nlohmann::json& j);
nlohmann::json rc_to_json(const RiggedConfiguration& rc);
RiggedConfiguration rc_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const QLaurent& p);
QLaurent poly_from_json(const nlohmann::json& j);

}  // namespace xm
