#pragma once

#include <string>
#include <vector>

#include "mshopf/character.hpp"
#include "mshopf/renorm.hpp"
#include "mshopf/wick.hpp"

namespace mshopf {

// Coupling variable for scale i in [-1, rho]; lambda_{-1} is the
// renormalized coupling, lambda_rho the bare one.
std::string lambda_var(int scale);

// Truncated formal power series in the coupling variables: terms whose total
// degree in the lambda variables exceeds `order` are dropped by every
// operation.
struct FormalSeries {
    Poly poly;
    int order = 0;

    FormalSeries() = default;
    FormalSeries(Poly p, int ord) : poly(p.truncated("lambda_", ord)), order(ord) {}

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
        return a.order == b.order && a.poly == b.poly;
    }
};

// One series per scale i in {-1, ..., rho}; component i has linear part
// lambda_i plus higher-order corrections.
struct SeriesTuple {
    int rho = 0;
    int order = 0;
    std::vector<FormalSeries> components; // index i+1 holds scale i

    const FormalSeries& at_scale(int i) const { return components.at(i + 1); }
    static SeriesTuple identity(int rho, int order);

    friend bool operator==(const SeriesTuple& a, const SeriesTuple& b) {
        return a.rho == b.rho && a.order == b.order && a.components == b.components;
    }
};

// Monomial prod_v lambda_{e_v(mu)} where e_v is the highest scale on the
// edges attached to v (-1 when only true external legs touch v).
Poly vertex_coupling_monomial(const AssignedGraph& g);

// The effective-coupling map: component i is
//   lambda_i + sum over assigned biped-free quadrupeds with i_G(mu) > i of
//   N/sigma alpha(G,mu) prod_v lambda_{e_v(mu)},
// summed over the catalog with v(G) <= order and scales bounded by rho.
SeriesTuple psi(const Character& alpha, int rho, int order, int valence = 4);

// Substitution of the inner components into the outer variables, truncated.
SeriesTuple compose(const SeriesTuple& outer, const SeriesTuple& inner);

struct LemmaReport {
    Rational lhs = 0;
    Rational rhs = 0;
    std::vector<std::pair<AssignedGraph, long>> insertion_counts; // per host class
    bool holds() const { return lhs == rhs; }
};

// Number of subgraphs of `host` isomorphic to g1 whose cograph is isomorphic
// to g2 (unassigned). An edgeless g1 counts vertex choices.
long insertion_count(const AssignedGraph& host, const AssignedGraph& g1, const AssignedGraph& g2);
// Assigned refinement: the subgraph must additionally be high and match
// (g1, mu1) as an assigned graph, the cograph matching (g2, mu2).
long high_insertion_count(const AssignedGraph& host, const AssignedGraph& g1,
                          const AssignedGraph& g2);

// sum_G N(G)/sigma(G) N(G1, G2, G) = N1/sigma1 N2/sigma2 v(G2), evaluated
// over the complete catalog at v(G1)+v(G2)-1 vertices. sigma and N come from
// the supplied providers (graph-core by default; the acceptance suite passes
// the Wick oracle).
struct LemmaProviders {
    std::function<long(const AssignedGraph&)> sigma = [](const AssignedGraph& g) {
        return g.automorphism_order();
    };
    std::function<long(const AssignedGraph&)> n_labelings = [](const AssignedGraph& g) {
        return external_labelings(g);
    };
};

LemmaReport check_combinatorial_lemma(const AssignedGraph& g1, const AssignedGraph& g2,
                                      const LemmaProviders& providers = {});

// Assigned version: the right-hand side counts the insertable vertices of
// (g2, mu2), i.e. those with e_v(mu2) < i_{G1}(mu1).
LemmaReport check_assigned_combinatorial_lemma(const AssignedGraph& g1, const AssignedGraph& g2,
                                               int rho);

// Infinitesimal antimorphism identity for delta characters supported on
// (g1, mu1) and (g2, mu2): polynomial identity in the lambda variables.
bool check_infinitesimal_antimorphism(const AssignedGraph& g1, const AssignedGraph& g2, int rho);

struct CorollaryReport {
    Poly bare;
    Poly effective;
    bool holds() const { return bare == effective; }
};

// Bare vs effective expansion of the connected 4-point function: the bare
// series sum N/sigma A(G,mu) lambda_rho^v equals the effective series sum
// N/sigma A_UR(G,mu) prod_v lambda_{e_v}, with the effective couplings
// lambda_i(lambda_rho) given by Psi(tau A) evaluated on the diagonal
// lambda_j = lambda_rho. `beta` substitutes a different counterterm-defining
// character (used by the scheme-covariance test); by default it is tau A.
CorollaryReport check_effective_corollary(const Amplitude& a, int rho, int order);
CorollaryReport check_effective_corollary_with(const HopfAlgebra& hopf, const Amplitude& a,
                                               const Character& beta, int rho, int order);

} // namespace mshopf
