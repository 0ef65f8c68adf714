#include "xm/json_io.hpp"

#include <stdexcept>

namespace xm {

using nlohmann::json;

json tableau_to_json(const Tableau& t) {
    json j;
    j["rows"] = t.rows();
    return j;
}

Tableau tableau_from_json(const json& j, int n) {
    if (!j.contains("rows")) throw std::invalid_argument("tableau JSON: missing \"rows\"");
    return Tableau(n, j.at("rows").get<std::vector<std::vector<int>>>());
}

json path_to_json(const Path& p) {
    json factors = json::array();
    for (const Tableau& t : p.factors()) factors.push_back(tableau_to_json(t));
    return json{{"n", p.n()}, {"factors", std::move(factors)}};
}

Path path_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("factors"))
        throw std::invalid_argument("path JSON: missing \"n\" or \"factors\"");
    int n = j.at("n").get<int>();
    std::vector<Tableau> factors;
    for (const json& f : j.at("factors")) factors.push_back(tableau_from_json(f, n));
    return Path(n, std::move(factors));
}

json rc_to_json(const RiggedConfiguration& rc) {
    json L = json::array();
    for (const auto& [key, c] : rc.L().counts)
        if (c != 0) L.push_back(json{{"a", key.first}, {"i", key.second}, {"count", c}});
    json nu = json::array();
    for (int a = 1; a <= rc.n() - 1; ++a) {
        json part = json::array();
        for (const RcString& s : rc.strings(a))
            part.push_back(json{{"len", s.len}, {"rig", s.rig}});
        nu.push_back(std::move(part));
    }
    return json{{"n", rc.n()}, {"L", std::move(L)}, {"nu", std::move(nu)}};
}

RiggedConfiguration rc_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("L") || !j.contains("nu"))
        throw std::invalid_argument("rc JSON: missing \"n\", \"L\" or \"nu\"");
    MultiplicityArray L;
    L.n = j.at("n").get<int>();
    for (const json& e : j.at("L"))
        L.add(e.at("a").get<int>(), e.at("i").get<int>(), e.at("count").get<int>());
    std::vector<std::vector<RcString>> nu;
    for (const json& part : j.at("nu")) {
        std::vector<RcString> strings;
        for (const json& s : part)
            strings.push_back({s.at("len").get<int>(), s.at("rig").get<int>()});
        nu.push_back(std::move(strings));
    }
    return RiggedConfiguration(L, std::move(nu));
}

json poly_to_json(const QLaurent& p) {
    json terms = json::array();
    for (const auto& [exp, coef] : p.terms())
        terms.push_back(json{{"exp", exp}, {"coef", coef.str()}});
    return json{{"poly", std::move(terms)}};
}

QLaurent poly_from_json(const json& j) {
    if (!j.contains("poly")) throw std::invalid_argument("poly JSON: missing \"poly\"");
    QLaurent out;
    for (const json& t : j.at("poly"))
        out += QLaurent(Int(t.at("coef").get<std::string>()), t.at("exp").get<int>());
    return out;
}

}  // namespace xm
