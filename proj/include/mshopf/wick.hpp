#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mshopf/graph.hpp"
#include "mshopf/rational.hpp"

namespace mshopf {

// Brute-force classification of Wick configurations for v vertices of the
// given valence and n_ext labeled external legs. A configuration is an
// injective placement of the external labels onto the v*valence half-edge
// slots followed by a perfect matching of the remaining slots; every
// configuration is visited exactly once and bucketed by the canonical
// labeled graph it produces. Disconnected, tadpole and biped classes are
// all enumerated; filtering happens afterwards.
struct WickClassification {
    int v = 0;
    int n_ext = 0;
    int valence = 4;
    // Canonical labeled (scale-0) class -> number of configurations.
    std::map<AssignedGraph, uint64_t> counts;
    uint64_t total = 0;

    // v! (valence!)^v.
    Rational labelings_of_internal_slots() const;
    // Expected total: (v*valence)_{n_ext} * (v*valence - n_ext - 1)!!.
    Rational expected_total() const;

    // sigma recovered from the pairing count of the labeled class:
    // count * sigma = v! (valence!)^v. Throws if the class is absent or the
    // division is not exact.
    long sigma(const AssignedGraph& labeled_class) const;
    // N recovered as the number of labeled classes whose unlabeled canonical
    // form matches.
    long n_labelings(const AssignedGraph& unlabeled_class) const;
};

WickClassification enumerate_pairings(int v, int n_ext, int valence = 4);

// ---------------------------------------------------------------------------
// Catalogs derived from the Wick universe.

struct CatalogFilter {
    bool connected = true;
    bool one_pi = true;
    bool biped_free = false;
    bool allow_tadpoles = false;
    int external = -1;          // exact external-leg count, -1 = any
    bool include_edgeless = false;
    int max_loops = -1;         // -1 = unbounded
};

// Deterministic, duplicate-free list of unlabeled (scale-0) classes with
// v <= v_max vertices and n_ext legs satisfying the filter.
std::vector<AssignedGraph> catalog(int v_max, int n_ext, const CatalogFilter& filter,
                                   int valence = 4);

// All scale assignments of `base` with scales in [0, rho], collected by
// isomorphism class with multiplicities (how many raw assignments land in
// each class).
std::map<AssignedGraph, long> assigned_classes(const AssignedGraph& base, int rho);

// Union of assigned classes over a list of base graphs.
std::vector<AssignedGraph> assigned_catalog(const std::vector<AssignedGraph>& bases, int rho);

// The Hopf-suite generator set: assigned classes over the tadpole-free
// connected 1PI catalogs at n_ext in {0, 2, 4}, with at most max_loops loops
// and v <= v_max vertices.
std::vector<AssignedGraph> generator_set(int v_max, int rho, int max_loops);

} // namespace mshopf
