#pragma once

#include <map>
#include <vector>

#include "mshopf/algebra.hpp"
#include "mshopf/multiscale.hpp"

namespace mshopf {

// ---------------------------------------------------------------------------
// Plain rooted trees (the Connes-Kreimer target of pi_RT).

class RootedTree {
public:
    RootedTree() { rebuild_key(); }
    explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
        normalize();
    }

    const std::vector<RootedTree>& children() const { return children_; }
    int node_count() const;
    const std::vector<int32_t>& key() const { return key_; }

    friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.key_ == b.key_; }
    friend bool operator!=(const RootedTree& a, const RootedTree& b) { return !(a == b); }
    friend bool operator<(const RootedTree& a, const RootedTree& b) { return a.key_ < b.key_; }

private:
    void normalize();
    void rebuild_key();
    std::vector<RootedTree> children_;
    std::vector<int32_t> key_;
};

using RootedForest = std::vector<RootedTree>; // sorted multiset

// Element of the rooted-tree Hopf algebra tensor square, used for the pi_RT
// morphism check.
struct RootedTensor {
    std::map<std::pair<RootedForest, RootedForest>, Rational> terms;
    void add(RootedForest l, RootedForest r, const Rational& c);
    friend bool operator==(const RootedTensor& a, const RootedTensor& b) {
        return a.terms == b.terms;
    }
};

// Connes-Kreimer coproduct on rooted trees: sum over admissible cuts,
// pruned forest on the left, trunk on the right.
RootedTensor rooted_tree_coproduct(const RootedTree& t);

// ---------------------------------------------------------------------------
// The Gallavotti-Nicolo tree Hopf algebra.

using GnMonomial = std::vector<GNTree>; // sorted multiset of trees

GnMonomial sorted_gn_monomial(GnMonomial m);

struct GnTensor {
    std::map<std::pair<GnMonomial, GnMonomial>, Rational> terms;
    void add(GnMonomial l, GnMonomial r, const Rational& c);
    friend bool operator==(const GnTensor& a, const GnTensor& b) { return a.terms == b.terms; }
};

// Grading: number of arrows joining differently decorated nodes, plus one.
int gn_grading(const GNTree& t);

// Child ends of the admissible-cut arrows: the arrow joins differently
// decorated nodes and the child decoration is superficially divergent (1PI
// components with two or `valence` external edges).
std::vector<int> cuttable_arrows(const GNTree& t);

// Coproduct by admissible cuts: completions of the cut subtrees on the left,
// the Gallavotti-Nicolo tree of the corresponding cograph on the right.
// Requires a tree built by gn_tree (decorations carry their edge subsets).
GnTensor gn_coproduct(const GNTree& t);

// ---------------------------------------------------------------------------
// Morphisms.

// pi_GN: generator -> its Gallavotti-Nicolo tree (a Hopf isomorphism onto
// its image).
GNTree pi_gn(const AssignedGraph& g);

// pi_RT: forget decorations after contracting every non-cuttable arrow
// (arrows between equal decorations and arrows into non-divergent children).
// Contracting only equal-decoration arrows fails the Hopf-morphism property;
// see pi_rt_equal_decorations for the literal variant.
RootedTree pi_rt(const GNTree& t);
RootedTree pi_rt_equal_decorations(const GNTree& t);

// pi_CK: sum over all (rho+1)^E scale assignments of the graph, collected by
// isomorphism class with multiplicities. Stored scales of `base` are
// ignored.
AlgebraElement pi_ck(const AssignedGraph& base, int rho);

// Morphism property checks (exact, term by term).
bool check_pi_gn_intertwines(const HopfAlgebra& hopf, const AssignedGraph& g);
bool check_pi_rt_intertwines(const GNTree& t);
// pi_CK intertwines the all-divergent coproducts on unassigned and assigned
// graphs: (pi_CK (x) pi_CK) . Delta_CK = Delta-tilde . pi_CK.
bool check_pi_ck_intertwines(const AssignedGraph& base, int rho);

} // namespace mshopf
