#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "mshopf/gn_hopf.hpp"
#include "mshopf/wick.hpp"

using namespace mshopf;

TEST_CASE("gn coproduct: constant decoration gives a primitive tree") {
    const auto t = gn_tree(fixtures::sunset(2, 2, 2, 2, false));
    CHECK(cuttable_arrows(t).empty());
    const auto d = gn_coproduct(t);
    CHECK(d.terms.size() == 2); // T(x)1 and 1(x)T only
}

TEST_CASE("gn coproduct: bubble chain with one decoration change has one cut") {
    const auto g = fixtures::chain3(0, 0, 3, 3, 3, false);
    const auto t = gn_tree(g);
    REQUIRE(cuttable_arrows(t).size() == 1);
    const auto d = gn_coproduct(t);
    REQUIRE(d.terms.size() == 3);
    // The cut term: completion of the inner bubble tensor the cograph tree.
    const GNTree inner = gn_tree(fixtures::bubble(3, 3, 3, false));
    const GNTree cograph = gn_tree(fixtures::bubble(0, 0, 3, false));
    bool found = false;
    for (const auto& [key, c] : d.terms)
        if (key.first.size() == 1 && key.second.size() == 1 && key.first[0] == inner &&
            key.second[0] == cograph) {
            found = true;
            CHECK(c == 1);
        }
    CHECK(found);
}

TEST_CASE("gn grading and its reduction under cuts") {
    const auto gens = generator_set(3, 2, 2);
    for (const auto& g : gens) {
        const auto t = gn_tree(g);
        const int n = gn_grading(t);
        const auto d = gn_coproduct(t);
        for (const auto& [key, c] : d.terms) {
            int left = 0;
            for (const auto& x : key.first) left += gn_grading(x);
            int right = 0;
            for (const auto& x : key.second) right += gn_grading(x);
            CHECK(left + right == n);
        }
    }
}

TEST_CASE("pi_gn is a bijection onto its image and intertwines the coproducts") {
    const HopfAlgebra hopf;
    const auto gens = generator_set(3, 2, 2);
    std::set<std::vector<int32_t>> keys;
    for (const auto& g : gens) {
        keys.insert(pi_gn(g).key());
        CHECK(check_pi_gn_intertwines(hopf, g));
    }
    CHECK(keys.size() == gens.size());
}

TEST_CASE("bubble with scales (1,2): literal same-graph contraction is not a morphism") {
    // The depth-2 node is a single edge with six external edges, so the GN
    // tree is primitive, while the literal rooted-tree image is a 2-node
    // path with one admissible cut.
    const auto t = gn_tree(fixtures::bubble(1, 2, 2, false));
    CHECK(cuttable_arrows(t).empty());
    const RootedTree literal = pi_rt_equal_decorations(t);
    CHECK(literal.node_count() == 2);
    const RootedTensor rt_side = rooted_tree_coproduct(literal);
    // pi x pi of the primitive coproduct has two terms; the rooted-tree side
    // has three. The Hopf-compatible contraction collapses the path instead.
    CHECK(rt_side.terms.size() == 3);
    CHECK(pi_rt(t).node_count() == 1);
    CHECK(check_pi_rt_intertwines(t));
}

TEST_CASE("pi_rt intertwines the coproducts on the generator set") {
    for (const auto& g : generator_set(3, 2, 2)) CHECK(check_pi_rt_intertwines(gn_tree(g)));
}

TEST_CASE("pi_rt of a constant-decoration path is a single node") {
    const auto t = gn_tree(fixtures::sunset(3, 3, 3, 3, false));
    CHECK(pi_rt(t).node_count() == 1);
    CHECK(pi_rt_equal_decorations(t).node_count() == 1);
}

TEST_CASE("pi_ck on the sunset reproduces the multiplicity pattern") {
    const auto sunset = fixtures::sunset(0, 0, 0, 2, false);
    for (int rho : {2, 3}) {
        const AlgebraElement x = pi_ck(sunset, rho);
        std::map<Rational, int> by_coefficient;
        Rational total = 0;
        for (const auto& [m, c] : x.terms()) {
            REQUIRE(m.size() == 1);
            by_coefficient[c] += 1;
            total += c;
        }
        // Distinct multiplicities {6, 3, 1}: strictly ordered scales, exactly
        // two equal, all equal.
        std::set<Rational> values;
        for (const auto& [c, count] : by_coefficient) values.insert(c);
        CHECK(values == std::set<Rational>({Rational(1), Rational(3), Rational(6)}));
        const int s = rho + 1; // scales available
        CHECK(by_coefficient[Rational(6)] == s * (s - 1) * (s - 2) / 6);
        CHECK(by_coefficient[Rational(3)] == s * (s - 1));
        CHECK(by_coefficient[Rational(1)] == s);
        CHECK(total == Rational(s) * Rational(s) * Rational(s));
    }
}

TEST_CASE("pi_ck multiplicities equal automorphism orbit sizes") {
    const auto bubble = fixtures::bubble(0, 0, 0, false);
    const AlgebraElement x = pi_ck(bubble, 2);
    for (const auto& [m, c] : x.terms()) {
        REQUIRE(m.size() == 1);
        CHECK(c == Rational(bubble.automorphism_order() / m.front().automorphism_order()));
    }
}

TEST_CASE("pi_ck intertwines the all-divergent coproducts") {
    CHECK(check_pi_ck_intertwines(fixtures::sunset(0, 0, 0, 0, false), 1));
    CHECK(check_pi_ck_intertwines(fixtures::bubble(0, 0, 0, false), 2));
    CHECK(check_pi_ck_intertwines(fixtures::chain3(0, 0, 0, 0, 0, false), 1));
}

TEST_CASE("rooted tree coproduct on a 2-node path") {
    const RootedTree leaf;
    const RootedTree path(std::vector<RootedTree>{leaf});
    REQUIRE(path.node_count() == 2);
    const auto d = rooted_tree_coproduct(path);
    // path(x)1, 1(x)path, leaf(x)leaf.
    CHECK(d.terms.size() == 3);
    RootedTensor expected;
    expected.add({path}, {}, 1);
    expected.add({}, {path}, 1);
    expected.add({leaf}, {leaf}, 1);
    CHECK(d == expected);
}
