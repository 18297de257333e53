#include "diastasis/json_io.hpp"

namespace dia {

json to_json(const HermSeries& s) {
    json terms = json::array();
    for (const auto& [k, v] : s.terms())
        terms.push_back({{"i", k.i}, {"j", k.j}, {"c", grat_to_string(v)}});
    return {{"schema", "herm-series/1"},
            {"nvars", s.nvars()},
            {"order", s.order()},
            {"terms", terms}};
}

HermSeries series_from_json(const json& j) {
    if (j.value("schema", "") != "herm-series/1") throw parse_error("not a herm-series/1 object");
    HermSeries s(j.at("nvars").get<unsigned>(), j.at("order").get<unsigned>());
    for (const auto& t : j.at("terms"))
        s.set(t.at("i").get<MultiIndex>(), t.at("j").get<MultiIndex>(),
              grat_from_string(t.at("c").get<std::string>()));
    return s;
}

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [e, v] : p.terms()) terms.push_back({{"e", e}, {"c", grat_to_string(v)}});
    return {{"schema", "poly/1"}, {"cvars", p.cvars()}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
    if (j.value("schema", "") != "poly/1") throw parse_error("not a poly/1 object");
    Poly p(j.at("cvars").get<unsigned>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("e").get<MultiIndex>(), grat_from_string(t.at("c").get<std::string>()));
    return p;
}

json to_json(const RationalFunction& f) {
    return {{"schema", "rational-function/1"}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction rational_function_from_json(const json& j) {
    if (j.value("schema", "") != "rational-function/1")
        throw parse_error("not a rational-function/1 object");
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const ProjectiveVerdict& v) {
    json out{{"verdict", v.refuted ? "REFUTED" : "CONSISTENT_UP_TO"}, {"order", v.order}};
    if (v.witness) {
        out["witness"] = {{"index_i", v.witness_i},
                          {"index_j", v.witness_j},
                          {"value", grat_to_string(v.witness->value)},
                          {"from_minor", v.witness->from_minor}};
    }
    return out;
}

}  // namespace dia
