#include <doctest.h>

#include "fixtures.hpp"
#include "mshopf/renorm.hpp"
#include "mshopf/wick.hpp"

using namespace mshopf;

namespace {

const HopfAlgebra& hopf() {
    static HopfAlgebra h;
    return h;
}

std::vector<AssignedGraph> biped_free_quadrupeds(int v_max, int rho, int max_loops) {
    CatalogFilter f;
    f.biped_free = true;
    f.external = 4;
    f.max_loops = max_loops;
    return assigned_catalog(catalog(v_max, 4, f), rho);
}

} // namespace

TEST_CASE("tau is the identity projection on toy values") {
    const Amplitude a = toy_amplitude();
    const Poly q3 = Poly::variable("q", 3);
    CHECK(a.tau(q3) == q3);
    CHECK(a.tau(a.tau(q3)) == a.tau(q3));
}

TEST_CASE("tau A is a character when A is") {
    const Amplitude a = toy_amplitude();
    const Character ta = tau_character(a);
    const auto g1 = fixtures::bubble(1, 2, 2, false);
    const auto g2 = fixtures::sunset(0, 1, 1, 2, false);
    CHECK(ta.on_monomial(monomial_product({g1}, {g2})) == ta(g1) * ta(g2));
    CHECK(ta.on_monomial({}) == Poly(1));
}

TEST_CASE("amplitude values depend only on the canonical class") {
    for (const Amplitude& a : {toy_amplitude(), symbols_amplitude()}) {
        const auto x = fixtures::bubble(1, 2, 2, false);
        const auto y = fixtures::bubble(2, 1, 2, false); // same class
        CHECK(a.eval(x) == a.eval(y));
        // Edgeless graphs evaluate to the empty product.
        CHECK(a.eval(fixtures::bare_vertex(false)) == Poly(1));
    }
}

TEST_CASE("counterterm base case: no divergent subgraphs") {
    for (const Amplitude& a : {toy_amplitude(), symbols_amplitude()}) {
        const auto b = fixtures::bubble(1, 1, 1, false);
        CHECK(useful_counterterms(hopf(), b, a) == -a.tau(a.eval(b)));
    }
}

TEST_CASE("counterterm with one nested high bubble") {
    const auto g = fixtures::chain3(0, 0, 3, 3, 3, false);
    const auto inner = fixtures::bubble(3, 3, 3, false);
    const auto cograph = fixtures::bubble(0, 0, 3, false);

    const Amplitude sym = symbols_amplitude();
    const Poly expected =
        -sym.eval(g) + sym.eval(cograph) * sym.eval(inner); // -tau A(G) + tau A(G/b) tau A(b)
    CHECK(useful_counterterms(hopf(), g, sym) == expected);

    // In the toy model tau A(G) = tau A(G/b) tau A(b) (scales add), so the
    // two terms cancel exactly.
    CHECK(useful_counterterms(hopf(), g, toy_amplitude()) == Poly(0));
}

TEST_CASE("counterterms equal (tau A) . S on biped-free quadrupeds") {
    for (const Amplitude& a : {toy_amplitude(), symbols_amplitude()}) {
        const Counterterms cu(hopf(), a);
        const Character ta = tau_character(a);
        for (const auto& g : biped_free_quadrupeds(3, 2, 3))
            CHECK(cu.value(g) == ta.on_element(hopf().antipode(g)));
    }
}

TEST_CASE("counterterms are multiplicative (a character)") {
    const Amplitude a = symbols_amplitude();
    const Counterterms cu(hopf(), a);
    const Character c = cu.character();
    const auto g1 = fixtures::bubble(1, 2, 2, false);
    const auto g2 = fixtures::chain3(0, 0, 2, 2, 2, false);
    CHECK(c.on_monomial(monomial_product({g1}, {g2})) == c(g1) * c(g2));
    CHECK(c.on_monomial({}) == Poly(1));
}

TEST_CASE("counterterms reject the biped sector") {
    CHECK_THROWS_AS(useful_counterterms(hopf(), fixtures::sunset(0, 1, 2, 2, false),
                                        toy_amplitude()),
                    BipedSectorError);
}

TEST_CASE("C_U * tau A is the counit (group inverse law)") {
    for (const Amplitude& a : {toy_amplitude(), symbols_amplitude()}) {
        const Counterterms cu(hopf(), a);
        const Character conv = convolve(hopf(), cu.character(), tau_character(a));
        for (const auto& g : biped_free_quadrupeds(3, 1, 3)) CHECK(conv(g) == Poly(0));
    }
}

TEST_CASE("coaction of a primitive has only the leading and trivial terms") {
    const auto b = fixtures::bubble(1, 1, 1); // labeled
    const CoactionElement c = coaction(hopf(), b);
    REQUIRE(c.terms.size() == 2);
    CoactionElement expected;
    expected.add({}, b, 1);                                   // 1 (x) G
    expected.add({b.unlabeled()}, fixtures::bare_vertex(), 1); // G-bar (x) vertex
    CHECK(c == expected);
}

TEST_CASE("coaction axioms hold on samples") {
    const AssignedGraph samples[] = {
        fixtures::bubble(0, 1, 2),
        fixtures::chain3(0, 0, 2, 2, 2),
        fixtures::chain3(1, 0, 2, 2, 3),
        fixtures::theta3(2, 2, 0, 1, 2),
        fixtures::bare_vertex(),
    };
    for (const auto& g : samples) {
        CHECK(check_coaction_counit(hopf(), g));
        CHECK(check_coaction_coassociativity(hopf(), g));
    }
}

TEST_CASE("renormalized amplitudes: counit on generators, 1 on the bare vertex") {
    for (const Amplitude& a : {toy_amplitude(), symbols_amplitude()}) {
        CHECK(renormalized_amplitude(hopf(), fixtures::bare_vertex(), a) == Poly(1));
        for (const auto& g : biped_free_quadrupeds(3, 1, 3))
            CHECK(renormalized_amplitude(hopf(), g.labeled(), a) == Poly(0));
    }
}

TEST_CASE("antipode forests satisfy the high nesting condition") {
    for (const auto& g : biped_free_quadrupeds(3, 2, 3)) {
        for (const auto& forest : hopf().dangerous_forests(g)) {
            const uint32_t full = g.edge_count() == 0 ? 0 : ((1u << g.edge_count()) - 1);
            for (uint32_t mask : forest) {
                if (mask == full) continue;
                CHECK(is_high(g, mask));
                // Nested pairs: the inner subgraph sits at strictly higher
                // scales than its external edges inside the outer one.
                for (uint32_t outer : forest) {
                    if (outer == mask || (mask & outer) != mask) continue;
                    const auto idx = indices(g, mask);
                    CHECK(idx.external_index < idx.internal_index);
                }
            }
        }
    }
}
