#include "mshopf/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mshopf {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer for " + what + ", got '" + s + "'");
    }
}

struct Builder {
    std::string name;
    int valence = 4;
    std::map<std::string, int> vertex_ids;
    FeynmanGraph g{4};
    std::vector<int> scales;
    bool any = false;

    int vertex(const std::string& id) {
        auto it = vertex_ids.find(id);
        if (it == vertex_ids.end()) throw ParseError("unknown vertex '" + id + "'");
        return it->second;
    }

    NamedGraph finish() {
        int rho = 0;
        for (int s : scales) rho = std::max(rho, s);
        return NamedGraph{name, AssignedGraph(g, ScaleAssignment{scales, rho})};
    }
};

} // namespace

std::vector<NamedGraph> parse_graph_specs(const std::string& text) {
    std::vector<NamedGraph> out;
    std::istringstream is(text);
    std::string line;
    Builder b;
    int lineno = 0;
    auto fail = [&](const std::string& m) {
        throw ParseError("line " + std::to_string(lineno) + ": " + m);
    };
    while (std::getline(is, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty()) continue;
        try {
            if (t[0] == "graph") {
                if (b.any) out.push_back(b.finish());
                b = Builder{};
                b.any = true;
                if (t.size() < 2) fail("graph line needs a name");
                b.name = t[1];
                if (t.size() >= 4 && t[2] == "valence") {
                    b.valence = to_int(t[3], "valence");
                    b.g = FeynmanGraph(b.valence);
                } else if (t.size() != 2) {
                    fail("expected: graph <name> [valence <k>]");
                }
            } else if (t[0] == "vertex") {
                if (!b.any) fail("vertex before graph header");
                if (t.size() != 2) fail("expected: vertex <id>");
                if (b.vertex_ids.count(t[1])) fail("duplicate vertex '" + t[1] + "'");
                b.vertex_ids[t[1]] = b.g.add_vertex();
            } else if (t[0] == "internal") {
                if (!b.any) fail("internal before graph header");
                if (t.size() != 4 && !(t.size() == 6 && t[4] == "scale"))
                    fail("expected: internal <id> <v1> <v2> [scale <i>]");
                b.g.add_edge(b.vertex(t[2]), b.vertex(t[3]));
                b.scales.push_back(t.size() == 6 ? to_int(t[5], "scale") : 0);
            } else if (t[0] == "external") {
                if (!b.any) fail("external before graph header");
                if (t.size() != 3) fail("expected: external <label> <v>");
                b.g.add_leg(b.vertex(t[2]));
            } else {
                fail("unknown declaration '" + t[0] + "'");
            }
        } catch (const GraphError& e) {
            fail(e.what());
        }
    }
    if (b.any) {
        try {
            out.push_back(b.finish());
        } catch (const GraphError& e) {
            throw ParseError(std::string("invalid graph: ") + e.what());
        }
    }
    if (out.empty()) throw ParseError("no graph declarations found");
    return out;
}

NamedGraph parse_graph_spec(const std::string& text) { return parse_graph_specs(text).front(); }

std::vector<NamedGraph> load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_graph_specs(os.str());
}

std::string to_graph_spec(const AssignedGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << (name.empty() ? "g" : name) << " valence " << g.graph().valence() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "vertex v" << v;
        if (g.graph().kinds()[v] == VertexKind::TwoPointInsertion) os << "  # 2-point insertion";
        os << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e)
        os << "internal e" << e << " v" << g.graph().edges()[e].u << " v"
           << g.graph().edges()[e].v << " scale " << g.scale(e) << "\n";
    for (int k = 0; k < g.leg_count(); ++k)
        os << "external x" << (k + 1) << " v" << g.graph().legs()[k] << "\n";
    return os.str();
}

nlohmann::json graph_to_json(const AssignedGraph& g, const std::string& name) {
    nlohmann::json j;
    if (!name.empty()) j["name"] = name;
    j["valence"] = g.graph().valence();
    j["labeled_externals"] = g.graph().labeled_legs();
    j["rho"] = g.rho();
    j["loop_number"] = g.loop_number();
    auto vertices = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"id", v},
                            {"kind", g.graph().kinds()[v] == VertexKind::TwoPointInsertion
                                         ? "two_point_insertion"
                                         : "normal"}});
    j["vertices"] = vertices;
    const int E = g.edge_count();
    auto half_edges = nlohmann::json::array();
    auto internal_edges = nlohmann::json::array();
    for (int e = 0; e < E; ++e) {
        half_edges.push_back({{"id", 2 * e}, {"vertex", g.graph().edges()[e].u}});
        half_edges.push_back({{"id", 2 * e + 1}, {"vertex", g.graph().edges()[e].v}});
        internal_edges.push_back(
            {{"id", e}, {"half_edges", {2 * e, 2 * e + 1}}, {"scale", g.scale(e)}});
    }
    auto legs = nlohmann::json::array();
    for (int k = 0; k < g.leg_count(); ++k) {
        half_edges.push_back({{"id", 2 * E + k}, {"vertex", g.graph().legs()[k]}});
        legs.push_back({{"label", "x" + std::to_string(k + 1)},
                        {"half_edge", 2 * E + k},
                        {"vertex", g.graph().legs()[k]}});
    }
    j["half_edges"] = half_edges;
    j["internal_edges"] = internal_edges;
    j["external_legs"] = legs;
    return j;
}

AssignedGraph graph_from_json(const nlohmann::json& j) {
    FeynmanGraph g(j.at("valence").get<int>());
    g.set_labeled_legs(j.value("labeled_externals", true));
    for (const auto& v : j.at("vertices"))
        g.add_vertex(v.at("kind").get<std::string>() == "two_point_insertion"
                         ? VertexKind::TwoPointInsertion
                         : VertexKind::Normal);
    std::map<int, int> half_vertex;
    for (const auto& h : j.at("half_edges"))
        half_vertex[h.at("id").get<int>()] = h.at("vertex").get<int>();
    std::vector<int> scales;
    for (const auto& e : j.at("internal_edges")) {
        const auto& hs = e.at("half_edges");
        g.add_edge(half_vertex.at(hs.at(0).get<int>()), half_vertex.at(hs.at(1).get<int>()));
        scales.push_back(e.at("scale").get<int>());
    }
    for (const auto& l : j.at("external_legs")) g.add_leg(half_vertex.at(l.at("half_edge").get<int>()));
    const int rho = j.value("rho", 0);
    return AssignedGraph(std::move(g), ScaleAssignment{std::move(scales), rho});
}

} // namespace mshopf
