#include "mshopf/serialize.hpp"

namespace mshopf {

nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", num_string(r)}, {"den", den_string(r)}};
}

nlohmann::json poly_to_json(const Poly& p) {
    auto terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::object();
        for (const auto& [v, e] : m) vars[v] = e;
        terms.push_back({{"coefficient", rational_to_json(c)}, {"monomial", vars}});
    }
    return terms;
}

nlohmann::json monomial_to_json(const Monomial& m) {
    auto factors = nlohmann::json::array();
    for (const auto& g : m) factors.push_back(graph_to_json(g));
    return factors;
}

nlohmann::json algebra_to_json(const AlgebraElement& x) {
    auto terms = nlohmann::json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"coefficient", rational_to_json(c)}, {"monomial", monomial_to_json(m)}});
    return terms;
}

nlohmann::json tensor_to_json(const TensorElement& t) {
    auto terms = nlohmann::json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back({{"coefficient", rational_to_json(c)},
                         {"left", monomial_to_json(k.first)},
                         {"right", monomial_to_json(k.second)}});
    return terms;
}

nlohmann::json series_tuple_to_json(const SeriesTuple& t) {
    nlohmann::json j;
    j["rho"] = t.rho;
    j["order"] = t.order;
    auto comps = nlohmann::json::array();
    for (int i = -1; i <= t.rho; ++i)
        comps.push_back({{"scale", i}, {"series", poly_to_json(t.at_scale(i).poly)}});
    j["components"] = comps;
    return j;
}

nlohmann::json forests_to_json(const HopfAlgebra& hopf, const AssignedGraph& g) {
    nlohmann::json j;
    auto forests = nlohmann::json::array();
    for (const auto& forest : hopf.dangerous_forests(g)) {
        auto members = nlohmann::json::array();
        for (uint32_t mask : forest) {
            auto edges = nlohmann::json::array();
            for (int e = 0; e < g.edge_count(); ++e)
                if (mask & (1u << e)) edges.push_back(e);
            members.push_back(edges);
        }
        forests.push_back(members);
    }
    j["graph"] = graph_to_json(g);
    j["forests"] = forests;
    j["antipode"] = algebra_to_json(hopf.antipode_by_forests(g));
    return j;
}

} // namespace mshopf
