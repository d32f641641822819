#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mshopf/errors.hpp"

namespace mshopf {

// Vertices created by shrinking a two-point subgraph carry a marker: the
// shrunk vertex stands for a mass-type insertion and has arity 2 instead of
// the graph valence. No derivative-coupling semantics are attached to it.
enum class VertexKind : uint8_t { Normal = 0, TwoPointInsertion = 1 };

struct Edge {
    int u = 0, v = 0; // endpoint vertices, normalized u <= v; u == v is a self-loop
};

// A phi^4-style Feynman graph: internal vertices of fixed valence, unlabeled
// internal edges (as vertex pairs; the half-edge presentation is derived
// deterministically for serialization) and an ordered list of external legs.
// `labeled_legs` chooses the isomorphism notion: leg-position-preserving
// (elements of K_n) or leg-permuting (generators of the graph algebra H).
class FeynmanGraph {
public:
    FeynmanGraph() = default;
    explicit FeynmanGraph(int valence) : valence_(valence) {}

    int valence() const { return valence_; }
    int vertex_count() const { return static_cast<int>(kinds_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int leg_count() const { return static_cast<int>(legs_.size()); }

    const std::vector<VertexKind>& kinds() const { return kinds_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& legs() const { return legs_; } // leg position -> vertex
    bool labeled_legs() const { return labeled_legs_; }
    void set_labeled_legs(bool b) { labeled_legs_ = b; }

    int add_vertex(VertexKind kind = VertexKind::Normal) {
        kinds_.push_back(kind);
        return vertex_count() - 1;
    }
    int add_edge(int u, int v) {
        if (u > v) std::swap(u, v);
        edges_.push_back(Edge{u, v});
        return edge_count() - 1;
    }
    int add_leg(int v) {
        legs_.push_back(v);
        return leg_count() - 1;
    }

    int arity(int v) const {
        return kinds_[v] == VertexKind::TwoPointInsertion ? 2 : valence_;
    }
    // Incident half-edge count: loops contribute two, legs one.
    int degree(int v) const;

    // Throws GraphError unless every vertex has exactly `arity` incident
    // half-edges, no vertex is isolated, and all indices are in range.
    void validate() const;

    bool is_connected() const;
    // True iff no single internal edge disconnects the graph. Throws
    // DisconnectedError on disconnected input.
    bool is_one_pi() const;
    // Independent loops of a connected graph: E - V + 1.
    int loop_number() const;

private:
    int valence_ = 4;
    std::vector<VertexKind> kinds_;
    std::vector<Edge> edges_;
    std::vector<int> legs_;
    bool labeled_legs_ = true;
};

// Scales for the internal edges of one graph, bounded by the cutoff rho.
// True external legs of a whole graph carry no stored scale; everywhere a
// scale is asked of them the sentinel -1 is used.
struct ScaleAssignment {
    std::vector<int> scales; // edge id -> scale in [0, rho]
    int rho = 0;
};

constexpr int kExternalScale = -1;

// An isomorphism class of (graph, scale assignment), stored as the
// lexicographically minimal relabeling over all scale-preserving (and, for
// labeled graphs, leg-position-preserving) isomorphisms. Construction
// canonicalizes; two AssignedGraphs are equal iff they are isomorphic.
class AssignedGraph {
public:
    AssignedGraph() = default;
    AssignedGraph(FeynmanGraph g, ScaleAssignment mu);
    // Uniform scale 0, rho 0: the representation used for unassigned graphs.
    static AssignedGraph unassigned(FeynmanGraph g);

    const FeynmanGraph& graph() const { return graph_; }
    const std::vector<int>& scales() const { return scales_; }
    int rho() const { return rho_; }
    int scale(int edge) const { return scales_[edge]; }

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int leg_count() const { return graph_.leg_count(); }
    int loop_number() const { return graph_.loop_number(); }

    // Copy of this class with a different scale assignment / leg convention.
    AssignedGraph with_scales(std::vector<int> scales, int rho) const;
    AssignedGraph unlabeled() const;
    AssignedGraph labeled() const;

    // Order of the scale- and leg-preserving automorphism group at the
    // half-edge level (the symmetry factor sigma).
    long automorphism_order() const { return sigma_; }

    const std::vector<int32_t>& code() const { return code_; }
    std::size_t hash() const;

    friend bool operator==(const AssignedGraph& a, const AssignedGraph& b) {
        return a.code_ == b.code_;
    }
    friend bool operator!=(const AssignedGraph& a, const AssignedGraph& b) {
        return !(a == b);
    }
    friend bool operator<(const AssignedGraph& a, const AssignedGraph& b) {
        return a.code_ < b.code_;
    }

private:
    FeynmanGraph graph_;
    std::vector<int> scales_;
    int rho_ = 0;
    long sigma_ = 1;
    std::vector<int32_t> code_;
};

// Idempotent by construction: AssignedGraph is stored canonically, so this
// re-wraps an arbitrary (graph, scales) pair.
inline AssignedGraph canonicalize(FeynmanGraph g, ScaleAssignment mu) {
    return AssignedGraph(std::move(g), std::move(mu));
}

inline long automorphism_order(const AssignedGraph& g) { return g.automorphism_order(); }

// Number of inequivalent labelings of the external legs: distinct labeled
// classes reachable by assigning positions 1..n to the legs of g.
long external_labelings(const AssignedGraph& g);

inline bool is_one_pi(const FeynmanGraph& g) { return g.is_one_pi(); }
inline int loop_number(const AssignedGraph& g) { return g.loop_number(); }

// ---------------------------------------------------------------------------
// Subgraphs: identified with subsets of the parent's internal edges, vertices
// induced. External edges of a subgraph are counted per attachment: an
// internal edge of the parent outside the subset contributes one external
// edge for each endpoint lying in the subgraph.

struct SubgraphComponent {
    uint32_t edges = 0;              // bitmask into parent edge ids
    std::vector<int> vertices;       // induced, sorted
    int edge_count = 0;
    int internal_min = 0;            // min scale over component edges
    std::vector<int> external_scales; // one entry per attachment; -1 for legs
    int external_max = kExternalScale;
    bool one_pi = false;

    int external_count() const { return static_cast<int>(external_scales.size()); }
    bool high() const { return external_max < internal_min; }
    // Superficially divergent and shrinkable: 1PI with 2 or `valence` (4 in
    // phi^4) external edges.
    bool divergent(int valence) const {
        const int n = external_count();
        return one_pi && (n == 2 || n == valence);
    }
};

// Connected components of the edge subset `mask`, each with its scale indices
// and external attachments computed in the parent.
std::vector<SubgraphComponent> subgraph_components(const AssignedGraph& parent, uint32_t mask);

// The subset as a standalone assigned graph: induced vertices, component
// edges with their scales, every external attachment turned into an
// (unlabeled) leg.
AssignedGraph extract_subgraph(const AssignedGraph& parent, uint32_t mask);

struct ScaleIndices {
    int internal_index = 0;
    int external_index = kExternalScale;
};

// (min internal scale, max external scale) of a nonempty edge subset.
ScaleIndices indices(const AssignedGraph& parent, uint32_t mask);

// Connected AND strictly high (external index < internal index).
bool is_high(const AssignedGraph& parent, uint32_t mask);

// ---------------------------------------------------------------------------
// Shrinking and gluing.

// Contract every component of `mask` to a single vertex; erase the component
// edges and their scales, keep everything else. A two-point component leaves
// a marked 2-valent vertex, a four-point component a normal vertex.
// Preconditions: every component is 1PI with 2 or 4 external edges.
AssignedGraph shrink(const AssignedGraph& g, uint32_t mask);

struct GluingData {
    enum class Site { Edge, Vertex };
    Site site = Site::Vertex;
    int site_index = 0;            // host edge id or host vertex id
    std::vector<int> leg_to_half;  // insert leg position -> attachment slot at the site
    // Scale each insert leg carries at the interface (its external assignment
    // index); must equal the host scale seen at the matched attachment.
    std::vector<int> interface_scales;
};

// Deterministic enumeration of the attachment slots at a gluing site:
// Site::Edge -> slot 0 = u end, slot 1 = v end of the edge;
// Site::Vertex -> edge incidences ordered by (edge id, end), loops giving two
// slots, followed by legs in position order.
int site_arity(const AssignedGraph& host, const GluingData& d);

// Insert a 2- or 4-point graph at the site. Scales of the insert are kept,
// identified interface edges keep their common scale. Throws
// PreconditionError on arity or interface-scale mismatch.
AssignedGraph glue(const AssignedGraph& host, const AssignedGraph& insert, const GluingData& d);

// shrink() variant that also reports how to glue the extracted piece back:
// result.first == shrink(g, mask) and glue(result.first, extract_subgraph(g,
// mask-component), result.second[i]) round-trips component i.
std::pair<AssignedGraph, std::vector<GluingData>> shrink_with_gluing(const AssignedGraph& g,
                                                                     uint32_t mask);

// ---------------------------------------------------------------------------
// Predicates used by catalogs and the renormalization sector.

// No connected edge subset (proper or not) has exactly two external
// attachments. Tadpole-containing graphs are never biped-free.
bool is_biped_free(const AssignedGraph& g);

bool has_self_loop(const FeynmanGraph& g);

} // namespace mshopf
