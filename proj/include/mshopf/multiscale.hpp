#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mshopf/graph.hpp"

namespace mshopf {

struct HighEnumerationOptions {
    // When false, the high condition is dropped and the enumerator extracts
    // every superficially divergent subgraph (the Connes-Kreimer side of
    // pi_CK). One code path, one flag.
    bool require_high = true;
    // Include the full edge set as a candidate (used by the coaction, never
    // by the coproduct).
    bool include_improper = false;
};

// All nonempty proper subsets of internal edges (plus the improper one on
// request) each of whose connected components is 1PI, has 2 or `valence`
// external edges, and is high. Returned sorted ascending as bitmasks.
std::vector<uint32_t> enumerate_high_divergent(const AssignedGraph& g,
                                               HighEnumerationOptions opts = {});

// All nonempty connected high subgraphs (any external count), as bitmasks.
std::vector<uint32_t> connected_high_subgraphs(const AssignedGraph& g);

// Forest lemma oracle: every pair of connected high subgraphs is nested (as
// edge sets) or vertex-disjoint. The lemma says this always holds.
bool check_forest(const AssignedGraph& g);

// ---------------------------------------------------------------------------
// Gallavotti-Nicolo trees.

struct GNTreeNode {
    int depth = 0;
    int parent = -1;             // index into nodes(); -1 for the root
    std::vector<int> children;   // indices into nodes()
    uint32_t mask = 0;           // edge subset of the source graph
    AssignedGraph decoration;    // the subgraph as a standalone assigned graph
};

// Rooted tree whose depth-i nodes are the connected components of the
// restriction of the source graph to edges of scale >= i; arrows follow
// high-subgraph inclusion. Depth runs to the maximal scale present; padding
// repeats each leaf decoration down to depth rho (presentation only).
class GNTree {
public:
    GNTree() = default;
    GNTree(AssignedGraph source, bool pad);

    const AssignedGraph& source() const { return source_; }
    const std::vector<GNTreeNode>& nodes() const { return nodes_; }
    bool padded() const { return padded_; }
    int depth() const;

    const std::vector<int32_t>& key() const { return key_; }
    friend bool operator==(const GNTree& a, const GNTree& b) { return a.key_ == b.key_; }
    friend bool operator!=(const GNTree& a, const GNTree& b) { return !(a == b); }
    friend bool operator<(const GNTree& a, const GNTree& b) { return a.key_ < b.key_; }

private:
    AssignedGraph source_;
    std::vector<GNTreeNode> nodes_;
    bool padded_ = false;
    std::vector<int32_t> key_;
};

inline GNTree gn_tree(const AssignedGraph& g, bool pad = false) { return GNTree(g, pad); }

// DOT rendering with depth as rank and decoration hashes as node labels.
std::string gn_tree_to_dot(const GNTree& t);

} // namespace mshopf
