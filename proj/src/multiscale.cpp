#include "mshopf/multiscale.hpp"

#include <algorithm>
#include <sstream>

namespace mshopf {

std::vector<uint32_t> enumerate_high_divergent(const AssignedGraph& g,
                                               HighEnumerationOptions opts) {
    const int e = g.edge_count();
    if (e > 22) throw PreconditionError("enumerate_high_divergent: too many edges");
    const uint32_t full = e == 0 ? 0 : ((1u << e) - 1);
    std::vector<uint32_t> out;
    for (uint32_t mask = 1; mask <= full && full != 0; ++mask) {
        if (mask == full && !opts.include_improper) continue;
        bool ok = true;
        for (const auto& c : subgraph_components(g, mask)) {
            if (!c.divergent(g.graph().valence()) || (opts.require_high && !c.high())) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(mask);
    }
    return out;
}

std::vector<uint32_t> connected_high_subgraphs(const AssignedGraph& g) {
    const int e = g.edge_count();
    if (e > 22) throw PreconditionError("connected_high_subgraphs: too many edges");
    std::vector<uint32_t> out;
    const uint32_t full = e == 0 ? 0 : ((1u << e) - 1);
    for (uint32_t mask = 1; mask <= full && full != 0; ++mask) {
        const auto comps = subgraph_components(g, mask);
        if (comps.size() == 1 && comps.front().high()) out.push_back(mask);
    }
    return out;
}

bool check_forest(const AssignedGraph& g) {
    const auto highs = connected_high_subgraphs(g);
    // Vertex sets needed for the disjointness clause.
    std::vector<std::vector<int>> verts;
    verts.reserve(highs.size());
    for (uint32_t m : highs) verts.push_back(subgraph_components(g, m).front().vertices);
    for (std::size_t i = 0; i < highs.size(); ++i) {
        for (std::size_t j = i + 1; j < highs.size(); ++j) {
            const uint32_t a = highs[i], b = highs[j];
            if ((a & b) == a || (a & b) == b) continue; // nested
            bool share = false;
            for (int v : verts[i])
                if (std::binary_search(verts[j].begin(), verts[j].end(), v)) share = true;
            if (share) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

GNTree::GNTree(AssignedGraph source, bool pad) : source_(std::move(source)), padded_(pad) {
    if (!source_.graph().is_connected())
        throw DisconnectedError("gn_tree: source graph is disconnected");
    const int e = source_.edge_count();
    const uint32_t full = e == 0 ? 0 : ((1u << e) - 1);

    GNTreeNode root;
    root.depth = 0;
    root.parent = -1;
    root.mask = full;
    root.decoration = source_.unlabeled();
    nodes_.push_back(std::move(root));

    int max_scale = 0;
    for (int i = 0; i < e; ++i) max_scale = std::max(max_scale, source_.scale(i));

    std::vector<int> previous_level{0};
    for (int depth = 1; depth <= max_scale; ++depth) {
        uint32_t restriction = 0;
        for (int i = 0; i < e; ++i)
            if (source_.scale(i) >= depth) restriction |= 1u << i;
        if (restriction == 0) break;
        std::vector<int> level;
        for (const auto& comp : subgraph_components(source_, restriction)) {
            GNTreeNode node;
            node.depth = depth;
            node.mask = comp.edges;
            node.decoration = extract_subgraph(source_, comp.edges);
            for (int p : previous_level)
                if ((nodes_[p].mask & comp.edges) == comp.edges) node.parent = p;
            const int idx = static_cast<int>(nodes_.size());
            nodes_[node.parent].children.push_back(idx);
            nodes_.push_back(std::move(node));
            level.push_back(idx);
        }
        previous_level = std::move(level);
    }

    if (padded_) {
        // Repeat each leaf decoration down to depth rho.
        const int rho = source_.rho();
        std::vector<int> leaves;
        for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
            if (nodes_[i].children.empty()) leaves.push_back(i);
        for (int leaf : leaves) {
            int prev = leaf;
            for (int d = nodes_[leaf].depth + 1; d <= rho; ++d) {
                GNTreeNode node;
                node.depth = d;
                node.parent = prev;
                node.mask = nodes_[leaf].mask;
                node.decoration = nodes_[leaf].decoration;
                const int idx = static_cast<int>(nodes_.size());
                nodes_[prev].children.push_back(idx);
                nodes_.push_back(std::move(node));
                prev = idx;
            }
        }
    }

    // Canonical key: recursive encoding with sorted child keys.
    auto encode = [&](auto&& self, int idx) -> std::vector<int32_t> {
        std::vector<std::vector<int32_t>> kids;
        for (int c : nodes_[idx].children) kids.push_back(self(self, c));
        std::sort(kids.begin(), kids.end());
        std::vector<int32_t> k;
        const auto& deco = nodes_[idx].decoration.code();
        k.push_back(static_cast<int32_t>(deco.size()));
        k.insert(k.end(), deco.begin(), deco.end());
        k.push_back(static_cast<int32_t>(kids.size()));
        for (const auto& kk : kids) {
            k.push_back(static_cast<int32_t>(kk.size()));
            k.insert(k.end(), kk.begin(), kk.end());
        }
        return k;
    };
    key_ = encode(encode, 0);
}

int GNTree::depth() const {
    int d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.depth);
    return d;
}

std::string gn_tree_to_dot(const GNTree& t) {
    std::ostringstream os;
    os << "digraph gn_tree {\n  rankdir=TB;\n  node [shape=box];\n";
    std::vector<std::vector<int>> by_depth(t.depth() + 1);
    for (int i = 0; i < static_cast<int>(t.nodes().size()); ++i)
        by_depth[t.nodes()[i].depth].push_back(i);
    for (int d = 0; d < static_cast<int>(by_depth.size()); ++d) {
        os << "  { rank=same;";
        for (int i : by_depth[d]) os << " n" << i << ";";
        os << " }\n";
    }
    for (int i = 0; i < static_cast<int>(t.nodes().size()); ++i) {
        const auto& n = t.nodes()[i];
        char buf[32];
        std::snprintf(buf, sizeof buf, "%08zx", n.decoration.hash() & 0xffffffffu);
        os << "  n" << i << " [label=\"d" << n.depth << ":" << buf << "\\nE="
           << n.decoration.edge_count() << " ext=" << n.decoration.leg_count() << "\"];\n";
        if (n.parent >= 0) os << "  n" << n.parent << " -> n" << i << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace mshopf
