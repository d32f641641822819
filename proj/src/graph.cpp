#include "mshopf/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mshopf {

namespace {

constexpr long kMaxOrderings = 5'000'000;

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int FeynmanGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    for (int lv : legs_)
        if (lv == v) ++d;
    return d;
}

void FeynmanGraph::validate() const {
    const int n = vertex_count();
    if (n == 0) throw GraphError("graph has no vertices");
    if (valence_ < 2) throw GraphError("valence must be at least 2");
    for (const Edge& e : edges_)
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw GraphError("edge endpoint out of range");
    for (int lv : legs_)
        if (lv < 0 || lv >= n) throw GraphError("leg vertex out of range");
    for (int v = 0; v < n; ++v) {
        const int d = degree(v);
        if (d == 0) throw GraphError("isolated vertex " + std::to_string(v));
        if (d != arity(v))
            throw GraphError("vertex " + std::to_string(v) + " has " + std::to_string(d) +
                             " half-edges, expected " + std::to_string(arity(v)));
    }
}

bool FeynmanGraph::is_connected() const {
    const int n = vertex_count();
    if (n == 0) return false;
    DisjointSet ds(n);
    for (const Edge& e : edges_) ds.unite(e.u, e.v);
    const int root = ds.find(0);
    for (int v = 1; v < n; ++v)
        if (ds.find(v) != root) return false;
    return true;
}

bool FeynmanGraph::is_one_pi() const {
    if (!is_connected()) throw DisconnectedError("is_one_pi: graph is disconnected");
    const int n = vertex_count();
    for (int cut = 0; cut < edge_count(); ++cut) {
        if (edges_[cut].u == edges_[cut].v) continue; // self-loops are never bridges
        DisjointSet ds(n);
        for (int e = 0; e < edge_count(); ++e)
            if (e != cut) ds.unite(edges_[e].u, edges_[e].v);
        const int root = ds.find(0);
        for (int v = 1; v < n; ++v)
            if (ds.find(v) != root) return false;
    }
    return true;
}

int FeynmanGraph::loop_number() const {
    if (!is_connected()) throw DisconnectedError("loop_number: graph is disconnected");
    return edge_count() - vertex_count() + 1;
}

bool has_self_loop(const FeynmanGraph& g) {
    for (const Edge& e : g.edges())
        if (e.u == e.v) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Canonical search.

namespace {

// Iso-invariant vertex colors, refined by neighborhood until stable. The
// colors only prune the ordering search; correctness comes from exhaustive
// enumeration within color classes.
std::vector<std::string> vertex_colors(const FeynmanGraph& g, const std::vector<int>& scales) {
    const int n = g.vertex_count();
    std::vector<std::string> color(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> inc; // (scale, loop?) per incident half
        int legs_here = 0;
        std::string leg_positions;
        for (int e = 0; e < g.edge_count(); ++e) {
            const int s = scales[e];
            const bool loop = g.edges()[e].u == g.edges()[e].v;
            if (g.edges()[e].u == v) inc.emplace_back(s, loop ? 1 : 0);
            if (g.edges()[e].v == v) inc.emplace_back(s, loop ? 1 : 0);
        }
        for (int k = 0; k < g.leg_count(); ++k) {
            if (g.legs()[k] == v) {
                ++legs_here;
                if (g.labeled_legs()) leg_positions += ":" + std::to_string(k);
            }
        }
        std::sort(inc.begin(), inc.end());
        std::string c = "k" + std::to_string(static_cast<int>(g.kinds()[v])) + "l" +
                        std::to_string(legs_here) + leg_positions + "e";
        for (auto [s, loop] : inc) c += "(" + std::to_string(s) + "," + std::to_string(loop) + ")";
        color[v] = c;
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::string> nb;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edges()[e];
                if (ed.u == ed.v) continue;
                if (ed.u == v) nb.push_back(std::to_string(scales[e]) + "~" + color[ed.v]);
                if (ed.v == v) nb.push_back(std::to_string(scales[e]) + "~" + color[ed.u]);
            }
            std::sort(nb.begin(), nb.end());
            next[v] = color[v] + "|";
            for (const auto& s : nb) next[v] += s + ";";
        }
        // Stop once the induced partition stabilizes.
        std::map<std::string, std::set<int>> pa, pb;
        for (int v = 0; v < n; ++v) {
            pa[color[v]].insert(v);
            pb[next[v]].insert(v);
        }
        std::set<std::set<int>> sa, sb;
        for (auto& [k, s] : pa) sa.insert(s);
        for (auto& [k, s] : pb) sb.insert(s);
        const bool changed = sa != sb;
        color = std::move(next);
        if (!changed) break;
    }
    return color;
}

struct SearchResult {
    std::vector<int32_t> code;   // minimal encoding
    std::vector<int> new_of_old; // old vertex -> canonical index for one minimizer
    long min_count = 0;          // orderings attaining the minimum
};

void encode(const FeynmanGraph& g, const std::vector<int>& scales,
            const std::vector<int>& new_of_old, std::vector<int32_t>& out) {
    const int n = g.vertex_count();
    out.clear();
    out.push_back(n);
    out.push_back(g.valence());
    out.push_back(g.labeled_legs() ? 1 : 0);
    out.push_back(g.edge_count());
    out.push_back(g.leg_count());
    std::vector<int> old_of_new(n);
    for (int v = 0; v < n; ++v) old_of_new[new_of_old[v]] = v;
    for (int v = 0; v < n; ++v) out.push_back(static_cast<int32_t>(g.kinds()[old_of_new[v]]));
    std::vector<std::array<int32_t, 3>> tri;
    tri.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = new_of_old[g.edges()[e].u];
        int b = new_of_old[g.edges()[e].v];
        if (a > b) std::swap(a, b);
        tri.push_back({a, b, scales[e]});
    }
    std::sort(tri.begin(), tri.end());
    for (const auto& t : tri) {
        out.push_back(t[0]);
        out.push_back(t[1]);
        out.push_back(t[2]);
    }
    if (g.labeled_legs()) {
        for (int lv : g.legs()) out.push_back(new_of_old[lv]);
    } else {
        std::vector<int> lv;
        for (int v : g.legs()) lv.push_back(new_of_old[v]);
        std::sort(lv.begin(), lv.end());
        for (int v : lv) out.push_back(v);
    }
}

SearchResult canonical_search(const FeynmanGraph& g, const std::vector<int>& scales) {
    const int n = g.vertex_count();
    const auto colors = vertex_colors(g, scales);

    // Class blocks in canonical (color-sorted) order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    std::vector<std::pair<int, int>> blocks; // [begin, end) into `order`
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colors[order[j]] == colors[order[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    long total = 1;
    for (auto [b, e] : blocks) {
        for (int k = 2; k <= e - b; ++k) {
            total *= k;
            if (total > kMaxOrderings)
                throw PreconditionError("canonicalization search space too large");
        }
    }

    SearchResult res;
    std::vector<int> new_of_old(n);
    std::vector<int32_t> code;
    std::vector<std::vector<int>> members;
    for (auto [b, e] : blocks)
        members.emplace_back(order.begin() + b, order.begin() + e);
    for (auto& m : members) std::sort(m.begin(), m.end());

    // Recursively permute each class block; evaluate complete orderings.
    auto evaluate = [&]() {
        int pos = 0;
        for (const auto& m : members)
            for (int old : m) new_of_old[old] = pos++;
        encode(g, scales, new_of_old, code);
        if (res.code.empty() || code < res.code) {
            res.code = code;
            res.new_of_old = new_of_old;
            res.min_count = 1;
        } else if (code == res.code) {
            ++res.min_count;
        }
    };
    auto recurse = [&](auto&& self, std::size_t block) -> void {
        if (block == members.size()) {
            evaluate();
            return;
        }
        auto& m = members[block];
        std::sort(m.begin(), m.end());
        do {
            self(self, block + 1);
        } while (std::next_permutation(m.begin(), m.end()));
    };
    recurse(recurse, 0);
    return res;
}

// sigma = |vertex-level automorphisms| * parallel-edge and self-loop factors.
long half_edge_factor(const FeynmanGraph& g, const std::vector<int>& scales) {
    std::map<std::array<int, 3>, int> cls; // (u, v, scale) -> multiplicity
    for (int e = 0; e < g.edge_count(); ++e)
        ++cls[{g.edges()[e].u, g.edges()[e].v, scales[e]}];
    long f = 1;
    for (const auto& [key, m] : cls) {
        if (key[0] == key[1]) {
            for (int k = 1; k <= m; ++k) f *= 2 * k; // 2^m * m!
        } else {
            for (int k = 2; k <= m; ++k) f *= k;
        }
    }
    return f;
}

} // namespace

AssignedGraph::AssignedGraph(FeynmanGraph g, ScaleAssignment mu) {
    g.validate();
    if (static_cast<int>(mu.scales.size()) != g.edge_count())
        throw GraphError("scale assignment size does not match edge count");
    if (mu.rho < 0) throw GraphError("negative cutoff");
    for (int s : mu.scales)
        if (s < 0 || s > mu.rho)
            throw GraphError("edge scale outside [0, rho]");
    if (g.edge_count() > 31) throw PreconditionError("graphs with more than 31 edges unsupported");

    const SearchResult sr = canonical_search(g, mu.scales);

    // Rebuild the graph in canonical vertex order with sorted edges.
    const int n = g.vertex_count();
    FeynmanGraph canon(g.valence());
    canon.set_labeled_legs(g.labeled_legs());
    std::vector<int> old_of_new(n);
    for (int v = 0; v < n; ++v) old_of_new[sr.new_of_old[v]] = v;
    for (int v = 0; v < n; ++v) canon.add_vertex(g.kinds()[old_of_new[v]]);
    std::vector<std::array<int, 3>> tri;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = sr.new_of_old[g.edges()[e].u];
        int b = sr.new_of_old[g.edges()[e].v];
        if (a > b) std::swap(a, b);
        tri.push_back({a, b, mu.scales[e]});
    }
    std::sort(tri.begin(), tri.end());
    std::vector<int> scales;
    for (const auto& t : tri) {
        canon.add_edge(t[0], t[1]);
        scales.push_back(t[2]);
    }
    if (g.labeled_legs()) {
        for (int lv : g.legs()) canon.add_leg(sr.new_of_old[lv]);
    } else {
        std::vector<int> lv;
        for (int v : g.legs()) lv.push_back(sr.new_of_old[v]);
        std::sort(lv.begin(), lv.end());
        for (int v : lv) canon.add_leg(v);
    }

    graph_ = std::move(canon);
    scales_ = std::move(scales);
    rho_ = mu.rho;
    code_ = sr.code;

    // sigma is the labeled notion (automorphisms fixing every leg).
    if (g.labeled_legs()) {
        sigma_ = sr.min_count * half_edge_factor(graph_, scales_);
    } else {
        FeynmanGraph lab = graph_;
        lab.set_labeled_legs(true);
        const SearchResult lsr = canonical_search(lab, scales_);
        sigma_ = lsr.min_count * half_edge_factor(graph_, scales_);
    }
}

AssignedGraph AssignedGraph::unassigned(FeynmanGraph g) {
    ScaleAssignment mu;
    mu.scales.assign(g.edge_count(), 0);
    mu.rho = 0;
    return AssignedGraph(std::move(g), std::move(mu));
}

AssignedGraph AssignedGraph::with_scales(std::vector<int> scales, int rho) const {
    ScaleAssignment mu{std::move(scales), rho};
    return AssignedGraph(graph_, std::move(mu));
}

AssignedGraph AssignedGraph::unlabeled() const {
    FeynmanGraph g = graph_;
    g.set_labeled_legs(false);
    return AssignedGraph(std::move(g), ScaleAssignment{scales_, rho_});
}

AssignedGraph AssignedGraph::labeled() const {
    FeynmanGraph g = graph_;
    g.set_labeled_legs(true);
    return AssignedGraph(std::move(g), ScaleAssignment{scales_, rho_});
}

std::size_t AssignedGraph::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (int32_t x : code_) {
        h ^= static_cast<std::size_t>(static_cast<uint32_t>(x));
        h *= 1099511628211ULL;
    }
    return h;
}

long external_labelings(const AssignedGraph& g) {
    const int n = g.leg_count();
    if (n > 8) throw PreconditionError("external_labelings: too many legs");
    FeynmanGraph base = g.graph();
    base.set_labeled_legs(true);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int32_t>> seen;
    do {
        FeynmanGraph h(base.valence());
        h.set_labeled_legs(true);
        for (int v = 0; v < base.vertex_count(); ++v) h.add_vertex(base.kinds()[v]);
        for (const Edge& e : base.edges()) h.add_edge(e.u, e.v);
        for (int k = 0; k < n; ++k) h.add_leg(base.legs()[perm[k]]);
        AssignedGraph lab(std::move(h), ScaleAssignment{g.scales(), g.rho()});
        seen.insert(lab.code());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<long>(seen.size());
}

// ---------------------------------------------------------------------------
// Subgraph analysis.

std::vector<SubgraphComponent> subgraph_components(const AssignedGraph& parent, uint32_t mask) {
    const FeynmanGraph& g = parent.graph();
    const int n = g.vertex_count();
    DisjointSet ds(n);
    for (int e = 0; e < g.edge_count(); ++e)
        if (mask & (1u << e)) ds.unite(g.edges()[e].u, g.edges()[e].v);

    std::map<int, SubgraphComponent> by_root;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(mask & (1u << e))) continue;
        SubgraphComponent& c = by_root[ds.find(g.edges()[e].u)];
        c.edges |= 1u << e;
        ++c.edge_count;
    }
    for (auto& [root, c] : by_root) {
        for (int v = 0; v < n; ++v)
            if ((mask != 0) && ds.find(v) == root) {
                // Only vertices touching a masked edge belong to the component.
                bool touches = false;
                for (int e = 0; e < g.edge_count(); ++e)
                    if ((c.edges & (1u << e)) && (g.edges()[e].u == v || g.edges()[e].v == v))
                        touches = true;
                if (touches) c.vertices.push_back(v);
            }
        c.internal_min = parent.rho() + 1;
        for (int e = 0; e < g.edge_count(); ++e)
            if (c.edges & (1u << e)) c.internal_min = std::min(c.internal_min, parent.scale(e));
        for (int e = 0; e < g.edge_count(); ++e) {
            if (c.edges & (1u << e)) continue;
            for (int end : {g.edges()[e].u, g.edges()[e].v})
                if (std::binary_search(c.vertices.begin(), c.vertices.end(), end))
                    c.external_scales.push_back(parent.scale(e));
        }
        for (int k = 0; k < g.leg_count(); ++k)
            if (std::binary_search(c.vertices.begin(), c.vertices.end(), g.legs()[k]))
                c.external_scales.push_back(kExternalScale);
        std::sort(c.external_scales.begin(), c.external_scales.end());
        c.external_max = c.external_scales.empty() ? kExternalScale : c.external_scales.back();

        // 1PI: no bridge among the component edges.
        c.one_pi = true;
        for (int cut = 0; cut < g.edge_count(); ++cut) {
            if (!(c.edges & (1u << cut))) continue;
            if (g.edges()[cut].u == g.edges()[cut].v) continue;
            DisjointSet sub(n);
            for (int e = 0; e < g.edge_count(); ++e)
                if ((c.edges & (1u << e)) && e != cut) sub.unite(g.edges()[e].u, g.edges()[e].v);
            const int r = sub.find(c.vertices.front());
            for (int v : c.vertices)
                if (sub.find(v) != r) c.one_pi = false;
            if (!c.one_pi) break;
        }
    }
    std::vector<SubgraphComponent> out;
    for (auto& [root, c] : by_root) out.push_back(std::move(c));
    return out;
}

AssignedGraph extract_subgraph(const AssignedGraph& parent, uint32_t mask) {
    if (mask == 0) throw PreconditionError("extract_subgraph: empty edge subset");
    const FeynmanGraph& g = parent.graph();
    std::vector<int> vmap(g.vertex_count(), -1);
    FeynmanGraph sub(g.valence());
    sub.set_labeled_legs(false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool used = false;
        for (int e = 0; e < g.edge_count(); ++e)
            if ((mask & (1u << e)) && (g.edges()[e].u == v || g.edges()[e].v == v)) used = true;
        if (used) vmap[v] = sub.add_vertex(g.kinds()[v]);
    }
    std::vector<int> scales;
    for (int e = 0; e < g.edge_count(); ++e)
        if (mask & (1u << e)) {
            sub.add_edge(vmap[g.edges()[e].u], vmap[g.edges()[e].v]);
            scales.push_back(parent.scale(e));
        }
    // External attachments become unlabeled legs.
    for (int e = 0; e < g.edge_count(); ++e) {
        if (mask & (1u << e)) continue;
        for (int end : {g.edges()[e].u, g.edges()[e].v})
            if (vmap[end] >= 0) sub.add_leg(vmap[end]);
    }
    for (int k = 0; k < g.leg_count(); ++k)
        if (vmap[g.legs()[k]] >= 0) sub.add_leg(vmap[g.legs()[k]]);
    return AssignedGraph(std::move(sub), ScaleAssignment{std::move(scales), parent.rho()});
}

ScaleIndices indices(const AssignedGraph& parent, uint32_t mask) {
    if (mask == 0) throw PreconditionError("indices: empty edge subset");
    ScaleIndices idx;
    idx.internal_index = parent.rho() + 1;
    idx.external_index = kExternalScale;
    const auto comps = subgraph_components(parent, mask);
    for (const auto& c : comps) {
        idx.internal_index = std::min(idx.internal_index, c.internal_min);
        idx.external_index = std::max(idx.external_index, c.external_max);
    }
    return idx;
}

bool is_high(const AssignedGraph& parent, uint32_t mask) {
    const auto comps = subgraph_components(parent, mask);
    if (comps.size() != 1) return false;
    return comps.front().high();
}

// ---------------------------------------------------------------------------
// Shrinking.

AssignedGraph shrink(const AssignedGraph& g, uint32_t mask) {
    if (mask == 0) throw PreconditionError("shrink: empty edge subset");
    const uint32_t all = g.edge_count() == 0 ? 0 : ((1u << g.edge_count()) - 1);
    if ((mask & ~all) != 0) throw PreconditionError("shrink: edge subset out of range");
    const auto comps = subgraph_components(g, mask);
    for (const auto& c : comps) {
        const int next = c.external_count();
        if (next != 2 && next != g.graph().valence())
            throw PreconditionError("shrink: component has " + std::to_string(next) +
                                    " external edges");
        if (!c.one_pi) throw PreconditionError("shrink: component is not 1PI");
    }

    const FeynmanGraph& gr = g.graph();
    std::vector<int> vmap(gr.vertex_count(), -1);
    FeynmanGraph out(gr.valence());
    out.set_labeled_legs(gr.labeled_legs());
    // Surviving vertices first (in id order), then one vertex per component.
    std::vector<bool> in_comp(gr.vertex_count(), false);
    for (const auto& c : comps)
        for (int v : c.vertices) in_comp[v] = true;
    for (int v = 0; v < gr.vertex_count(); ++v)
        if (!in_comp[v]) vmap[v] = out.add_vertex(gr.kinds()[v]);
    for (const auto& c : comps) {
        const VertexKind kind =
            c.external_count() == 2 ? VertexKind::TwoPointInsertion : VertexKind::Normal;
        const int nv = out.add_vertex(kind);
        for (int v : c.vertices) vmap[v] = nv;
    }
    std::vector<int> scales;
    for (int e = 0; e < gr.edge_count(); ++e) {
        if (mask & (1u << e)) continue;
        out.add_edge(vmap[gr.edges()[e].u], vmap[gr.edges()[e].v]);
        scales.push_back(g.scale(e));
    }
    for (int k = 0; k < gr.leg_count(); ++k) out.add_leg(vmap[gr.legs()[k]]);
    return AssignedGraph(std::move(out), ScaleAssignment{std::move(scales), g.rho()});
}

// ---------------------------------------------------------------------------
// Gluing.

namespace {

struct Slot {
    bool is_leg = false;
    int edge = -1; // host edge id for edge slots
    int end = 0;   // 0 = u end, 1 = v end
    int leg = -1;  // host leg position for leg slots
    int scale = kExternalScale;
};

std::vector<Slot> vertex_slots(const AssignedGraph& host, int w) {
    std::vector<Slot> slots;
    const FeynmanGraph& g = host.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges()[e].u == w) slots.push_back({false, e, 0, -1, host.scale(e)});
        if (g.edges()[e].v == w) slots.push_back({false, e, 1, -1, host.scale(e)});
    }
    for (int k = 0; k < g.leg_count(); ++k)
        if (g.legs()[k] == w) slots.push_back({true, -1, 0, k, kExternalScale});
    return slots;
}

} // namespace

int site_arity(const AssignedGraph& host, const GluingData& d) {
    if (d.site == GluingData::Site::Edge) return 2;
    return static_cast<int>(vertex_slots(host, d.site_index).size());
}

AssignedGraph glue(const AssignedGraph& host, const AssignedGraph& insert, const GluingData& d) {
    const FeynmanGraph& hg = host.graph();
    const FeynmanGraph& ig = insert.graph();
    if (hg.valence() != ig.valence()) throw PreconditionError("glue: valence mismatch");
    const int arity = site_arity(host, d);
    if (ig.leg_count() != arity)
        throw PreconditionError("glue: insert has " + std::to_string(ig.leg_count()) +
                                " external edges, site expects " + std::to_string(arity));
    if (static_cast<int>(d.leg_to_half.size()) != arity ||
        static_cast<int>(d.interface_scales.size()) != arity)
        throw PreconditionError("glue: gluing data arity mismatch");
    std::vector<bool> used(arity, false);
    for (int h : d.leg_to_half) {
        if (h < 0 || h >= arity || used[h]) throw PreconditionError("glue: bijection invalid");
        used[h] = true;
    }

    FeynmanGraph out(hg.valence());
    out.set_labeled_legs(hg.labeled_legs());
    std::vector<int> scales;
    const int rho = std::max(host.rho(), insert.rho());

    if (d.site == GluingData::Site::Edge) {
        const int e0 = d.site_index;
        if (e0 < 0 || e0 >= hg.edge_count()) throw PreconditionError("glue: bad host edge");
        const int s = host.scale(e0);
        for (int k = 0; k < arity; ++k)
            if (d.interface_scales[k] != s)
                throw PreconditionError("glue: interface scale mismatch at leg " +
                                        std::to_string(k));
        for (int v = 0; v < hg.vertex_count(); ++v) out.add_vertex(hg.kinds()[v]);
        std::vector<int> imap(ig.vertex_count());
        for (int v = 0; v < ig.vertex_count(); ++v) imap[v] = out.add_vertex(ig.kinds()[v]);
        for (int e = 0; e < hg.edge_count(); ++e) {
            if (e == e0) continue;
            out.add_edge(hg.edges()[e].u, hg.edges()[e].v);
            scales.push_back(host.scale(e));
        }
        for (int e = 0; e < ig.edge_count(); ++e) {
            out.add_edge(imap[ig.edges()[e].u], imap[ig.edges()[e].v]);
            scales.push_back(insert.scale(e));
        }
        // Slot 0 = u end, slot 1 = v end.
        for (int leg = 0; leg < arity; ++leg) {
            const int slot = d.leg_to_half[leg];
            const int hv = slot == 0 ? hg.edges()[e0].u : hg.edges()[e0].v;
            out.add_edge(hv, imap[ig.legs()[leg]]);
            scales.push_back(s);
        }
        for (int k = 0; k < hg.leg_count(); ++k) out.add_leg(hg.legs()[k]);
        return AssignedGraph(std::move(out), ScaleAssignment{std::move(scales), rho});
    }

    const int w = d.site_index;
    if (w < 0 || w >= hg.vertex_count()) throw PreconditionError("glue: bad host vertex");
    const auto slots = vertex_slots(host, w);
    // leg position of the insert welded onto each slot
    std::vector<int> leg_at_slot(arity, -1);
    for (int leg = 0; leg < arity; ++leg) {
        const int slot = d.leg_to_half[leg];
        if (d.interface_scales[leg] != slots[slot].scale)
            throw PreconditionError("glue: interface scale mismatch at leg " + std::to_string(leg));
        leg_at_slot[slot] = leg;
    }

    std::vector<int> vmap(hg.vertex_count(), -1);
    for (int v = 0; v < hg.vertex_count(); ++v)
        if (v != w) vmap[v] = out.add_vertex(hg.kinds()[v]);
    std::vector<int> imap(ig.vertex_count());
    for (int v = 0; v < ig.vertex_count(); ++v) imap[v] = out.add_vertex(ig.kinds()[v]);

    // Endpoint of host edge e at the replaced vertex, per slot.
    std::vector<std::array<int, 2>> edge_new_end(hg.edge_count(), {-1, -1});
    for (int si = 0; si < arity; ++si) {
        const Slot& sl = slots[si];
        if (!sl.is_leg) edge_new_end[sl.edge][sl.end] = imap[ig.legs()[leg_at_slot[si]]];
    }
    for (int e = 0; e < hg.edge_count(); ++e) {
        int a = hg.edges()[e].u == w ? edge_new_end[e][0] : vmap[hg.edges()[e].u];
        int b = hg.edges()[e].v == w ? edge_new_end[e][1] : vmap[hg.edges()[e].v];
        out.add_edge(a, b);
        scales.push_back(host.scale(e));
    }
    for (int e = 0; e < ig.edge_count(); ++e) {
        out.add_edge(imap[ig.edges()[e].u], imap[ig.edges()[e].v]);
        scales.push_back(insert.scale(e));
    }
    std::vector<int> leg_new_vertex(hg.leg_count(), -1);
    for (int si = 0; si < arity; ++si)
        if (slots[si].is_leg) leg_new_vertex[slots[si].leg] = imap[ig.legs()[leg_at_slot[si]]];
    for (int k = 0; k < hg.leg_count(); ++k)
        out.add_leg(hg.legs()[k] == w ? leg_new_vertex[k] : vmap[hg.legs()[k]]);
    return AssignedGraph(std::move(out), ScaleAssignment{std::move(scales), rho});
}

// ---------------------------------------------------------------------------

bool is_biped_free(const AssignedGraph& g) {
    const int e = g.edge_count();
    if (e > 22) throw PreconditionError("is_biped_free: too many edges");
    for (uint32_t mask = 1; mask < (1u << e); ++mask) {
        const auto comps = subgraph_components(g, mask);
        if (comps.size() != 1) continue;
        if (comps.front().external_count() == 2) return false;
    }
    return true;
}

} // namespace mshopf
