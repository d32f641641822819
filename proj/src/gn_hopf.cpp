#include "mshopf/gn_hopf.hpp"

#include <algorithm>

#include "mshopf/wick.hpp"

namespace mshopf {

// ---------------------------------------------------------------------------
// Rooted trees.

void RootedTree::normalize() {
    for (auto& c : children_) c.normalize();
    std::sort(children_.begin(), children_.end());
    rebuild_key();
}

void RootedTree::rebuild_key() {
    key_.clear();
    key_.push_back(static_cast<int32_t>(children_.size()));
    for (const auto& c : children_) {
        key_.push_back(static_cast<int32_t>(c.key().size()));
        key_.insert(key_.end(), c.key().begin(), c.key().end());
    }
}

int RootedTree::node_count() const {
    int n = 1;
    for (const auto& c : children_) n += c.node_count();
    return n;
}

void RootedTensor::add(RootedForest l, RootedForest r, const Rational& c) {
    if (mshopf::is_zero(c)) return;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    const auto key = std::make_pair(std::move(l), std::move(r));
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (mshopf::is_zero(it->second)) terms.erase(it);
    }
}

namespace {

struct FlatTree {
    // Preorder flattening; node 0 is the root.
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<RootedTree> subtree;

    explicit FlatTree(const RootedTree& t) { visit(t, -1); }
    int visit(const RootedTree& t, int par) {
        const int id = static_cast<int>(parent.size());
        parent.push_back(par);
        children.emplace_back();
        subtree.push_back(t);
        if (par >= 0) children[par].push_back(id);
        for (const auto& c : t.children()) visit(c, id);
        return id;
    }
    bool is_ancestor(int a, int d) const {
        for (int x = parent[d]; x >= 0; x = parent[x])
            if (x == a) return true;
        return false;
    }
    // The tree with the subtrees at `cut` removed.
    RootedTree trunk(const std::vector<int>& cut, int at = 0) const {
        std::vector<RootedTree> kids;
        for (int c : children[at])
            if (std::find(cut.begin(), cut.end(), c) == cut.end())
                kids.push_back(trunk(cut, c));
        return RootedTree(std::move(kids));
    }
};

} // namespace

RootedTensor rooted_tree_coproduct(const RootedTree& t) {
    RootedTensor out;
    out.add(RootedForest{t}, RootedForest{}, 1);
    out.add(RootedForest{}, RootedForest{t}, 1);
    const FlatTree flat(t);
    const int n = static_cast<int>(flat.parent.size());
    std::vector<int> non_root;
    for (int i = 1; i < n; ++i) non_root.push_back(i);
    const std::size_t m = non_root.size();
    if (m > 20) throw PreconditionError("rooted tree too large for cut enumeration");
    for (uint32_t pick = 1; pick < (1u << m); ++pick) {
        std::vector<int> cut;
        for (std::size_t i = 0; i < m; ++i)
            if (pick & (1u << i)) cut.push_back(non_root[i]);
        bool antichain = true;
        for (std::size_t i = 0; i < cut.size() && antichain; ++i)
            for (std::size_t j = 0; j < cut.size() && antichain; ++j)
                if (i != j && flat.is_ancestor(cut[i], cut[j])) antichain = false;
        if (!antichain) continue;
        RootedForest pruned;
        for (int c : cut) pruned.push_back(flat.subtree[c]);
        out.add(std::move(pruned), RootedForest{flat.trunk(cut)}, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// GN Hopf algebra.

GnMonomial sorted_gn_monomial(GnMonomial m) {
    std::sort(m.begin(), m.end());
    return m;
}

void GnTensor::add(GnMonomial l, GnMonomial r, const Rational& c) {
    if (mshopf::is_zero(c)) return;
    const auto key = std::make_pair(sorted_gn_monomial(std::move(l)), sorted_gn_monomial(std::move(r)));
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (mshopf::is_zero(it->second)) terms.erase(it);
    }
}

int gn_grading(const GNTree& t) {
    int arrows = 0;
    for (const auto& n : t.nodes())
        if (n.parent >= 0 && n.decoration != t.nodes()[n.parent].decoration) ++arrows;
    return arrows + 1;
}

std::vector<int> cuttable_arrows(const GNTree& t) {
    std::vector<int> out;
    const int valence = t.source().graph().valence();
    for (int i = 0; i < static_cast<int>(t.nodes().size()); ++i) {
        const auto& n = t.nodes()[i];
        if (n.parent < 0) continue;
        if (n.decoration == t.nodes()[n.parent].decoration) continue;
        const int ext = n.decoration.leg_count();
        if (ext != 2 && ext != valence) continue;
        if (!n.decoration.graph().is_one_pi()) continue;
        out.push_back(i);
    }
    return out;
}

GnTensor gn_coproduct(const GNTree& t) {
    if (t.padded()) throw PreconditionError("gn_coproduct acts on unpadded trees");
    GnTensor out;
    out.add(GnMonomial{t}, GnMonomial{}, 1);
    out.add(GnMonomial{}, GnMonomial{t}, 1);

    const auto cuttable = cuttable_arrows(t);
    const std::size_t m = cuttable.size();
    if (m > 20) throw PreconditionError("too many cuttable arrows");
    auto is_ancestor = [&](int a, int d) {
        for (int x = t.nodes()[d].parent; x >= 0; x = t.nodes()[x].parent)
            if (x == a) return true;
        return false;
    };
    for (uint32_t pick = 1; pick < (1u << m); ++pick) {
        std::vector<int> cut;
        for (std::size_t i = 0; i < m; ++i)
            if (pick & (1u << i)) cut.push_back(cuttable[i]);
        bool antichain = true;
        for (std::size_t i = 0; i < cut.size() && antichain; ++i)
            for (std::size_t j = 0; j < cut.size() && antichain; ++j)
                if (i != j && is_ancestor(cut[i], cut[j])) antichain = false;
        if (!antichain) continue;
        GnMonomial left;
        uint32_t union_mask = 0;
        for (int c : cut) {
            left.push_back(gn_tree(t.nodes()[c].decoration));
            union_mask |= t.nodes()[c].mask;
        }
        out.add(std::move(left), GnMonomial{gn_tree(shrink(t.source(), union_mask))}, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Morphisms.

GNTree pi_gn(const AssignedGraph& g) { return gn_tree(g.unlabeled()); }

namespace {

RootedTree contract_tree(const GNTree& t, const std::vector<int>& keep_child) {
    // keep_child[i] true: the arrow into node i survives as a tree edge.
    const int n = static_cast<int>(t.nodes().size());
    std::vector<int> rep(n, 0);
    std::vector<std::vector<int>> kids(n); // children in the contracted tree, by representative
    for (int i = 1; i < n; ++i) {
        const int p = rep[t.nodes()[i].parent];
        if (keep_child[i]) {
            rep[i] = i;
            kids[p].push_back(i);
        } else {
            rep[i] = p;
        }
    }
    auto build = [&](auto&& self, int node) -> RootedTree {
        std::vector<RootedTree> ch;
        for (int c : kids[node]) ch.push_back(self(self, c));
        return RootedTree(std::move(ch));
    };
    return build(build, 0);
}

} // namespace

RootedTree pi_rt(const GNTree& t) {
    std::vector<int> keep(t.nodes().size(), 0);
    for (int c : cuttable_arrows(t)) keep[c] = 1;
    return contract_tree(t, keep);
}

RootedTree pi_rt_equal_decorations(const GNTree& t) {
    std::vector<int> keep(t.nodes().size(), 0);
    for (int i = 1; i < static_cast<int>(t.nodes().size()); ++i)
        if (t.nodes()[i].decoration != t.nodes()[t.nodes()[i].parent].decoration) keep[i] = 1;
    return contract_tree(t, keep);
}

AlgebraElement pi_ck(const AssignedGraph& base, int rho) {
    std::vector<int> zero(base.edge_count(), 0);
    const AssignedGraph unassigned = base.with_scales(zero, 0).unlabeled();
    AlgebraElement out;
    for (const auto& [cls, mult] : assigned_classes(unassigned, rho))
        out.add(Monomial{cls}, Rational(mult));
    return out;
}

bool check_pi_gn_intertwines(const HopfAlgebra& hopf, const AssignedGraph& g) {
    GnTensor lhs;
    const TensorElement d = hopf.coproduct(g.unlabeled());
    for (const auto& [key, c] : d.terms()) {
        GnMonomial l, r;
        for (const auto& x : key.first) l.push_back(pi_gn(x));
        for (const auto& x : key.second) r.push_back(pi_gn(x));
        lhs.add(std::move(l), std::move(r), c);
    }
    return lhs == gn_coproduct(pi_gn(g));
}

bool check_pi_rt_intertwines(const GNTree& t) {
    RootedTensor lhs;
    const GnTensor d = gn_coproduct(t);
    for (const auto& [key, c] : d.terms) {
        RootedForest l, r;
        for (const auto& x : key.first) l.push_back(pi_rt(x));
        for (const auto& x : key.second) r.push_back(pi_rt(x));
        lhs.add(std::move(l), std::move(r), c);
    }
    return lhs == rooted_tree_coproduct(pi_rt(t));
}

namespace {

TensorElement tensor_of(const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement t;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add(ma, mb, ca * cb);
    return t;
}

AlgebraElement pi_ck_monomial(const Monomial& m, int rho) {
    AlgebraElement out = AlgebraElement::unit();
    for (const auto& g : m) out = out * pi_ck(g, rho);
    return out;
}

} // namespace

bool check_pi_ck_intertwines(const AssignedGraph& base, int rho) {
    const HopfAlgebra all_div(/*all_divergent=*/true);
    std::vector<int> zero(base.edge_count(), 0);
    const AssignedGraph unassigned = base.with_scales(zero, 0).unlabeled();

    TensorElement lhs;
    const TensorElement d = all_div.coproduct(unassigned);
    for (const auto& [key, c] : d.terms()) {
        const TensorElement piece =
            tensor_of(pi_ck_monomial(key.first, rho), pi_ck_monomial(key.second, rho));
        for (const auto& [k2, c2] : piece.terms()) lhs.add(k2.first, k2.second, c * c2);
    }
    const TensorElement rhs = all_div.coproduct(pi_ck(unassigned, rho));
    return lhs == rhs;
}

} // namespace mshopf
