#include "mshopf/cli.hpp"

#include <CLI11.hpp>

#include "mshopf/effective.hpp"
#include "mshopf/gn_hopf.hpp"
#include "mshopf/renorm.hpp"
#include "mshopf/serialize.hpp"
#include "mshopf/verify.hpp"

namespace mshopf {

namespace {

AssignedGraph load_one(const std::string& path) { return load_graph_file(path).front().graph; }

AssignedGraph with_cutoff(const AssignedGraph& g, int rho) {
    if (rho < 0) return g;
    return g.with_scales(g.scales(), rho);
}

Amplitude select_amplitude(const std::string& name) {
    if (name == "toy") return toy_amplitude();
    if (name == "symbols") return symbols_amplitude();
    throw PreconditionError("unknown amplitude model '" + name + "'");
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of multiscale renormalization on assigned Feynman graphs"};
    app.require_subcommand(1);

    std::string input, input2, format = "json", amplitude = "toy", suite = "all";
    std::string morphism_kind;
    int rho = -1, order = 3, max_loops = 3, max_vertices = 3, pairs = 4;
    bool all_divergent = false, pad_gn = false;

    auto* parse = app.add_subcommand("parse", "validate a graph-spec file, emit canonical form");
    parse->add_option("input", input)->required();
    parse->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* coproduct = app.add_subcommand("coproduct", "multiscale coproduct of a generator");
    coproduct->add_option("input", input)->required();
    coproduct->add_option("--rho", rho);
    coproduct->add_flag("--all-divergent", all_divergent);

    auto* antipode = app.add_subcommand("antipode", "recursive antipode of a generator");
    antipode->add_option("input", input)->required();
    antipode->add_option("--rho", rho);
    antipode->add_flag("--all-divergent", all_divergent);

    auto* forests = app.add_subcommand("forests", "dangerous forests and the antipode they sum to");
    forests->add_option("input", input)->required();
    forests->add_option("--rho", rho);
    forests->add_flag("--all-divergent", all_divergent);

    auto* gn = app.add_subcommand("gn-tree", "Gallavotti-Nicolo tree of an assigned graph");
    gn->add_option("input", input)->required();
    gn->add_option("--rho", rho);
    gn->add_flag("--pad-gn", pad_gn);
    gn->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* morphism = app.add_subcommand("morphism", "apply pi_GN, pi_RT or pi_CK");
    morphism->add_option("input", input)->required();
    morphism->add_flag("--pi-gn{gn},--pi-rt{rt},--pi-ck{ck}", morphism_kind)->required();
    morphism->add_option("--rho", rho);
    morphism->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* counterterms = app.add_subcommand("counterterms", "useful counterterms of a quadruped");
    counterterms->add_option("input", input)->required();
    counterterms->add_option("--rho", rho);
    counterterms->add_option("--amplitude", amplitude)->check(CLI::IsMember({"toy", "symbols"}));

    auto* effective = app.add_subcommand("effective", "effective-coupling series Psi(tau A)");
    effective->add_option("--rho", rho)->required();
    effective->add_option("--order", order);
    effective->add_option("--amplitude", amplitude)->check(CLI::IsMember({"toy", "symbols"}));

    auto* lemma = app.add_subcommand("lemma", "combinatorial insertion lemma for two quadrupeds");
    lemma->add_option("--g1", input)->required();
    lemma->add_option("--g2", input2)->required();

    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite);
    verify->add_option("--max-loops", max_loops);
    verify->add_option("--rho", rho);
    verify->add_option("--max-vertices", max_vertices);
    verify->add_option("--order", order);
    verify->add_option("--pairs", pairs);

    try {
        std::vector<const char*> argv{"mshopf"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.get_name() << ": " << e.what() << "\n";
        return 1;
    }

    try {
        if (parse->parsed()) {
            const auto graphs = load_graph_file(input);
            if (format == "text") {
                for (const auto& [name, g] : graphs) out << to_graph_spec(g, name);
            } else {
                auto j = nlohmann::json::array();
                for (const auto& [name, g] : graphs) j.push_back(graph_to_json(g, name));
                emit(out, j);
            }
            return 0;
        }
        if (coproduct->parsed() || antipode->parsed() || forests->parsed()) {
            const HopfAlgebra hopf(all_divergent);
            const AssignedGraph g = with_cutoff(load_one(input), rho).unlabeled();
            if (coproduct->parsed()) emit(out, tensor_to_json(hopf.coproduct(g)));
            if (antipode->parsed()) emit(out, algebra_to_json(hopf.antipode(g)));
            if (forests->parsed()) emit(out, forests_to_json(hopf, g));
            return 0;
        }
        if (gn->parsed()) {
            const GNTree t = gn_tree(with_cutoff(load_one(input), rho).unlabeled(), pad_gn);
            if (format == "json") {
                nlohmann::json j;
                j["depth"] = t.depth();
                j["padded"] = t.padded();
                auto nodes = nlohmann::json::array();
                for (const auto& n : t.nodes())
                    nodes.push_back({{"depth", n.depth},
                                     {"parent", n.parent},
                                     {"decoration", graph_to_json(n.decoration)}});
                j["nodes"] = nodes;
                emit(out, j);
            } else {
                out << gn_tree_to_dot(t);
            }
            return 0;
        }
        if (morphism->parsed()) {
            const AssignedGraph g = load_one(input).unlabeled();
            if (morphism_kind == "gn") {
                const GNTree t = pi_gn(with_cutoff(g, rho));
                if (format == "dot") {
                    out << gn_tree_to_dot(t);
                } else {
                    nlohmann::json j;
                    j["grading"] = gn_grading(t);
                    auto nodes = nlohmann::json::array();
                    for (const auto& n : t.nodes())
                        nodes.push_back({{"depth", n.depth},
                                         {"parent", n.parent},
                                         {"decoration", graph_to_json(n.decoration)}});
                    j["nodes"] = nodes;
                    emit(out, j);
                }
            } else if (morphism_kind == "rt") {
                const RootedTree t = pi_rt(pi_gn(with_cutoff(g, rho)));
                auto tree_json = [](auto&& self, const RootedTree& node) -> nlohmann::json {
                    auto kids = nlohmann::json::array();
                    for (const auto& c : node.children()) kids.push_back(self(self, c));
                    return {{"children", kids}};
                };
                nlohmann::json j;
                j["nodes"] = t.node_count();
                j["tree"] = tree_json(tree_json, t);
                emit(out, j);
            } else {
                const int cutoff = rho < 0 ? g.rho() : rho;
                const AlgebraElement x = pi_ck(g, cutoff);
                nlohmann::json j;
                std::map<std::string, int> multiset;
                Rational total = 0;
                auto classes = nlohmann::json::array();
                for (const auto& [m, c] : x.terms()) {
                    classes.push_back(
                        {{"multiplicity", rational_to_json(c)}, {"graph", graph_to_json(m.front())}});
                    ++multiset[to_string(c)];
                    total += c;
                }
                j["rho"] = cutoff;
                j["classes"] = classes;
                j["coefficient_multiset"] = multiset;
                j["total"] = to_string(total);
                emit(out, j);
            }
            return 0;
        }
        if (counterterms->parsed()) {
            const HopfAlgebra hopf;
            const Amplitude a = select_amplitude(amplitude);
            const AssignedGraph g = with_cutoff(load_one(input), rho).unlabeled();
            const Poly recursive = useful_counterterms(hopf, g, a);
            const Poly via_antipode = tau_character(a).on_element(hopf.antipode(g));
            nlohmann::json j;
            j["amplitude"] = a.name;
            j["counterterm"] = poly_to_json(recursive);
            j["antipode_route"] = poly_to_json(via_antipode);
            j["match"] = recursive == via_antipode;
            emit(out, j);
            return 0;
        }
        if (effective->parsed()) {
            const Amplitude a = select_amplitude(amplitude);
            emit(out, series_tuple_to_json(psi(tau_character(a), rho, order)));
            return 0;
        }
        if (lemma->parsed()) {
            const AssignedGraph g1 = load_one(input).unlabeled();
            const AssignedGraph g2 = load_one(input2).unlabeled();
            const auto report = check_combinatorial_lemma(g1, g2);
            nlohmann::json j;
            j["lhs"] = to_string(report.lhs);
            j["rhs"] = to_string(report.rhs);
            j["holds"] = report.holds();
            auto hosts = nlohmann::json::array();
            for (const auto& [host, n] : report.insertion_counts)
                hosts.push_back({{"insertions", n}, {"graph", graph_to_json(host)}});
            j["hosts"] = hosts;
            emit(out, j);
            return report.holds() ? 0 : 3;
        }
        if (verify->parsed()) {
            VerifyOptions o;
            o.max_vertices = max_vertices;
            o.max_loops = max_loops;
            if (rho >= 0) o.rho = rho;
            o.order = order;
            o.pairs = pairs;
            bool ok = true;
            for (const auto& res : run_verify(suite, o)) {
                out << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << ": " << res.description
                    << " -- " << res.detail << "\n";
                ok = ok && res.pass;
            }
            return ok ? 0 : 3;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const GraphError& e) {
        err << "invalid graph: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace mshopf
