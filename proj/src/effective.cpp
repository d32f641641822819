#include "mshopf/effective.hpp"

#include <algorithm>

namespace mshopf {

std::string lambda_var(int scale) { return "lambda_" + std::to_string(scale); }

SeriesTuple SeriesTuple::identity(int rho, int order) {
    SeriesTuple t;
    t.rho = rho;
    t.order = order;
    for (int i = -1; i <= rho; ++i)
        t.components.emplace_back(Poly::variable(lambda_var(i)), order);
    return t;
}

Poly vertex_coupling_monomial(const AssignedGraph& g) {
    Poly m(1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int best = kExternalScale;
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.graph().edges()[e].u == v || g.graph().edges()[e].v == v)
                best = std::max(best, g.scale(e));
        m *= Poly::variable(lambda_var(best));
    }
    return m;
}

namespace {

int internal_index(const AssignedGraph& g) {
    int idx = g.rho() + 1;
    for (int e = 0; e < g.edge_count(); ++e) idx = std::min(idx, g.scale(e));
    return idx;
}

// Assigned biped-free connected quadrupeds with at least one edge, up to
// `order` vertices, scales bounded by rho.
std::vector<AssignedGraph> quadruped_catalog(int order, int rho, int valence) {
    CatalogFilter f;
    f.biped_free = true;
    f.external = valence;
    const auto bases = catalog(order, valence, f, valence);
    return assigned_catalog(bases, rho);
}

} // namespace

SeriesTuple psi(const Character& alpha, int rho, int order, int valence) {
    SeriesTuple t = SeriesTuple::identity(rho, order);
    for (const auto& g : quadruped_catalog(order, rho, valence)) {
        if (g.vertex_count() > order) continue;
        const Rational weight = rat(external_labelings(g), g.automorphism_order());
        const Poly term = Poly(weight) * alpha(g) * vertex_coupling_monomial(g);
        const int ig = internal_index(g);
        for (int i = -1; i < ig; ++i) {
            Poly p = t.at_scale(i).poly + term;
            t.components[i + 1] = FormalSeries(std::move(p), order);
        }
    }
    return t;
}

SeriesTuple compose(const SeriesTuple& outer, const SeriesTuple& inner) {
    if (outer.rho != inner.rho || outer.order != inner.order)
        throw PreconditionError("compose: mismatched cutoff or truncation order");
    std::map<std::string, Poly> subs;
    for (int i = -1; i <= inner.rho; ++i) subs[lambda_var(i)] = inner.at_scale(i).poly;
    SeriesTuple t;
    t.rho = outer.rho;
    t.order = outer.order;
    for (int i = -1; i <= outer.rho; ++i)
        t.components.emplace_back(outer.at_scale(i).poly.substituted(subs), outer.order);
    return t;
}

// ---------------------------------------------------------------------------

namespace {

// Unassigned comparison form: unlabeled legs, every scale reset to zero.
AssignedGraph unassigned_form(const AssignedGraph& g) {
    return g.with_scales(std::vector<int>(g.edge_count(), 0), 0).unlabeled();
}

} // namespace

long insertion_count(const AssignedGraph& host, const AssignedGraph& g1,
                     const AssignedGraph& g2) {
    const AssignedGraph u1 = unassigned_form(g1);
    const AssignedGraph u2 = unassigned_form(g2);
    const AssignedGraph h = unassigned_form(host);
    if (u1.edge_count() == 0) return h == u2 ? h.vertex_count() : 0;
    long count = 0;
    const int e = h.edge_count();
    for (uint32_t mask = 1; mask < (1u << e); ++mask) {
        const auto comps = subgraph_components(h, mask);
        if (comps.size() != 1) continue;
        if (!comps.front().divergent(h.graph().valence())) continue;
        if (extract_subgraph(h, mask) != u1) continue;
        if (shrink(h, mask) == u2) ++count;
    }
    return count;
}

long high_insertion_count(const AssignedGraph& host, const AssignedGraph& g1,
                          const AssignedGraph& g2) {
    const AssignedGraph u1 = g1.graph().labeled_legs() ? g1.unlabeled() : g1;
    const AssignedGraph u2 = g2.graph().labeled_legs() ? g2.unlabeled() : g2;
    const AssignedGraph h = host.graph().labeled_legs() ? host.unlabeled() : host;
    if (u1.edge_count() == 0) return h == u2 ? h.vertex_count() : 0;
    long count = 0;
    const int e = h.edge_count();
    for (uint32_t mask = 1; mask < (1u << e); ++mask) {
        const auto comps = subgraph_components(h, mask);
        if (comps.size() != 1) continue;
        if (!comps.front().divergent(h.graph().valence()) || !comps.front().high()) continue;
        if (extract_subgraph(h, mask) != u1) continue;
        if (shrink(h, mask) == u2) ++count;
    }
    return count;
}

namespace {

std::vector<AssignedGraph> lemma_hosts(int v, int valence, int rho) {
    CatalogFilter f;
    f.external = valence;
    f.allow_tadpoles = true;
    const auto all = catalog(v, valence, f, valence);
    std::vector<AssignedGraph> exact;
    for (const auto& g : all)
        if (g.vertex_count() == v) exact.push_back(g);
    if (rho == 0) return exact;
    return assigned_catalog(exact, rho);
}

} // namespace

LemmaReport check_combinatorial_lemma(const AssignedGraph& g1, const AssignedGraph& g2,
                                      const LemmaProviders& providers) {
    LemmaReport r;
    const int v = g1.vertex_count() + g2.vertex_count() - 1;
    for (const auto& host : lemma_hosts(v, g1.graph().valence(), 0)) {
        const long n = insertion_count(host, g1, g2);
        if (n == 0) continue;
        r.insertion_counts.emplace_back(host, n);
        r.lhs += rat(providers.n_labelings(host), providers.sigma(host)) * n;
    }
    r.rhs = rat(providers.n_labelings(g1), providers.sigma(g1)) *
            rat(providers.n_labelings(g2), providers.sigma(g2)) * g2.vertex_count();
    return r;
}

LemmaReport check_assigned_combinatorial_lemma(const AssignedGraph& g1, const AssignedGraph& g2,
                                               int rho) {
    LemmaReport r;
    const int v = g1.vertex_count() + g2.vertex_count() - 1;
    for (const auto& host : lemma_hosts(v, g1.graph().valence(), rho)) {
        const long n = high_insertion_count(host, g1, g2);
        if (n == 0) continue;
        r.insertion_counts.emplace_back(host, n);
        r.lhs += rat(external_labelings(host), host.automorphism_order()) * n;
    }
    const int ig1 = internal_index(g1);
    long insertable = 0;
    for (int vtx = 0; vtx < g2.vertex_count(); ++vtx) {
        int ev = kExternalScale;
        for (int e = 0; e < g2.edge_count(); ++e)
            if (g2.graph().edges()[e].u == vtx || g2.graph().edges()[e].v == vtx)
                ev = std::max(ev, g2.scale(e));
        if (ev < ig1) ++insertable;
    }
    r.rhs = rat(external_labelings(g1), g1.automorphism_order()) *
            rat(external_labelings(g2), g2.automorphism_order()) * insertable;
    return r;
}

bool check_infinitesimal_antimorphism(const AssignedGraph& g1, const AssignedGraph& g2, int rho) {
    const int v = g1.vertex_count() + g2.vertex_count() - 1;
    Poly lhs;
    for (const auto& host : lemma_hosts(v, g1.graph().valence(), rho)) {
        const long n = high_insertion_count(host, g1, g2);
        if (n == 0) continue;
        lhs += Poly(rat(external_labelings(host), host.automorphism_order()) * n) *
               vertex_coupling_monomial(host);
    }
    Poly rhs_derivative;
    const Poly g2_part = Poly(rat(external_labelings(g2), g2.automorphism_order())) *
                         vertex_coupling_monomial(g2);
    for (int i = -1; i < internal_index(g1); ++i)
        rhs_derivative += g2_part.derivative(lambda_var(i));
    const Poly rhs = Poly(rat(external_labelings(g1), g1.automorphism_order())) *
                     vertex_coupling_monomial(g1) * rhs_derivative;
    return lhs == rhs;
}

// ---------------------------------------------------------------------------

CorollaryReport check_effective_corollary(const Amplitude& a, int rho, int order) {
    const HopfAlgebra hopf;
    return check_effective_corollary_with(hopf, a, tau_character(a), rho, order);
}

CorollaryReport check_effective_corollary_with(const HopfAlgebra& hopf, const Amplitude& a,
                                               const Character& beta, int rho, int order) {
    const int valence = 4;
    CatalogFilter f;
    f.biped_free = true;
    f.external = valence;
    f.include_edgeless = true;
    const auto bases = catalog(order, valence, f, valence);
    std::vector<AssignedGraph> classes;
    for (const auto& b : bases) {
        if (b.vertex_count() > order) continue;
        for (const auto& [g, mult] : assigned_classes(b, rho)) classes.push_back(g);
    }

    // Effective couplings from Psi(beta), evaluated on the diagonal
    // lambda_j = lambda_rho.
    const SeriesTuple tuple = psi(beta, rho, order, valence);
    std::map<std::string, Poly> diag_sub;
    for (int i = -1; i <= rho; ++i) diag_sub[lambda_var(i)] = Poly::variable(lambda_var(rho));
    std::map<std::string, Poly> coupling; // lambda_i -> lambda_i(lambda_rho)
    for (int i = -1; i <= rho; ++i)
        coupling[lambda_var(i)] =
            tuple.at_scale(i).poly.substituted(diag_sub).truncated("lambda_", order);

    const Character counterterm = convolution_inverse(hopf, beta);

    CorollaryReport report;
    for (const auto& g : classes) {
        const Rational weight = rat(external_labelings(g), g.automorphism_order());
        report.bare += Poly(weight) * a.eval(g) *
                       Poly::variable(lambda_var(rho), g.vertex_count());

        // A_UR via the coaction with the counterterm character.
        Poly a_ur;
        const CoactionElement co = coaction(hopf, g.labeled());
        for (const auto& [key, c] : co.terms) {
            a_ur += counterterm.on_monomial(key.first) * a.eval(key.second.unlabeled()) * c;
        }
        const Poly monomial = vertex_coupling_monomial(g).substituted(coupling);
        report.effective += Poly(weight) * a_ur * monomial;
    }
    report.bare = report.bare.truncated("lambda_", order);
    report.effective = report.effective.truncated("lambda_", order);
    return report;
}

} // namespace mshopf
