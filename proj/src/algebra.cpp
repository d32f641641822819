#include "mshopf/algebra.hpp"

#include <algorithm>

namespace mshopf {

Monomial sorted_monomial(Monomial m) {
    std::sort(m.begin(), m.end());
    return m;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    m.insert(m.end(), b.begin(), b.end());
    return sorted_monomial(std::move(m));
}

int monomial_grade(const Monomial& m) {
    int g = 0;
    for (const auto& f : m) g += f.loop_number();
    return g;
}

AlgebraElement AlgebraElement::unit(const Rational& c) {
    AlgebraElement x;
    x.add(Monomial{}, c);
    return x;
}

AlgebraElement AlgebraElement::generator(const AssignedGraph& g) {
    if (g.graph().labeled_legs())
        throw PreconditionError("algebra generators carry unlabeled external legs");
    if (!g.graph().is_connected() || !g.graph().is_one_pi())
        throw PreconditionError("algebra generators must be connected and 1PI");
    AlgebraElement x;
    x.add(Monomial{g}, 1);
    return x;
}

AlgebraElement AlgebraElement::from_monomial(Monomial m, const Rational& c) {
    AlgebraElement x;
    x.add(sorted_monomial(std::move(m)), c);
    return x;
}

void AlgebraElement::add(const Monomial& m, const Rational& c) {
    if (mshopf::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (mshopf::is_zero(it->second)) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add(monomial_product(ma, mb), ca * cb);
    return r;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
    if (mshopf::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Rational AlgebraElement::counit() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------

TensorElement TensorElement::unit(const Rational& c) {
    TensorElement t;
    t.add(Monomial{}, Monomial{}, c);
    return t;
}

void TensorElement::add(const Monomial& l, const Monomial& r, const Rational& c) {
    if (mshopf::is_zero(c)) return;
    const Key k{l, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (mshopf::is_zero(it->second)) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add(monomial_product(ka.first, kb.first), monomial_product(ka.second, kb.second),
                  ca * cb);
    return r;
}

void TensorK::add(Key k, const Rational& c) {
    if (mshopf::is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (mshopf::is_zero(it->second)) terms_.erase(it);
    }
}

// ---------------------------------------------------------------------------

TensorElement HopfAlgebra::coproduct(const AssignedGraph& g) const {
    TensorElement t;
    t.add(Monomial{g}, Monomial{}, 1);
    t.add(Monomial{}, Monomial{g}, 1);
    HighEnumerationOptions opts;
    opts.require_high = !all_divergent_;
    opts.include_improper = false;
    for (uint32_t mask : enumerate_high_divergent(g, opts)) {
        Monomial left;
        for (const auto& comp : subgraph_components(g, mask))
            left.push_back(extract_subgraph(g, comp.edges));
        t.add(sorted_monomial(std::move(left)), Monomial{shrink(g, mask)}, 1);
    }
    return t;
}

TensorElement HopfAlgebra::coproduct(const Monomial& m) const {
    TensorElement t = TensorElement::unit();
    for (const auto& g : m) t = t * coproduct(g);
    return t;
}

TensorElement HopfAlgebra::coproduct(const AlgebraElement& x) const {
    TensorElement t;
    for (const auto& [m, c] : x.terms()) {
        TensorElement tm = coproduct(m);
        for (const auto& [k, v] : tm.terms()) t.add(k.first, k.second, v * c);
    }
    return t;
}

TensorElement HopfAlgebra::reduced_coproduct(const AlgebraElement& x) const {
    TensorElement t = coproduct(x);
    for (const auto& [m, c] : x.terms()) {
        t.add(m, Monomial{}, -c);
        t.add(Monomial{}, m, -c);
    }
    t += TensorElement::unit(x.counit());
    return t;
}

AlgebraElement HopfAlgebra::antipode_uncached(const AssignedGraph& g) const {
    // S(G) = -G - sum over divergent subsets of S(g) (G/g).
    AlgebraElement s = AlgebraElement::from_monomial(Monomial{g}, -1);
    HighEnumerationOptions opts;
    opts.require_high = !all_divergent_;
    for (uint32_t mask : enumerate_high_divergent(g, opts)) {
        Monomial left;
        for (const auto& comp : subgraph_components(g, mask))
            left.push_back(extract_subgraph(g, comp.edges));
        const AlgebraElement s_left = antipode(sorted_monomial(std::move(left)));
        s -= s_left * AlgebraElement::from_monomial(Monomial{shrink(g, mask)});
    }
    return s;
}

AlgebraElement HopfAlgebra::antipode(const AssignedGraph& g) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = antipode_memo_.find(g);
        if (it != antipode_memo_.end()) return it->second;
    }
    AlgebraElement s = antipode_uncached(g);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    antipode_memo_.emplace(g, s);
    return s;
}

AlgebraElement HopfAlgebra::antipode(const Monomial& m) const {
    // Algebra antihomomorphism; the algebra is commutative.
    AlgebraElement s = AlgebraElement::unit();
    for (const auto& g : m) s = s * antipode(g);
    return s;
}

AlgebraElement HopfAlgebra::antipode(const AlgebraElement& x) const {
    AlgebraElement s;
    for (const auto& [m, c] : x.terms()) s += antipode(m) * c;
    return s;
}

std::vector<std::vector<uint32_t>> HopfAlgebra::dangerous_forests(const AssignedGraph& g) const {
    HighEnumerationOptions opts;
    opts.require_high = !all_divergent_;
    // Connected proper divergent subgraphs.
    std::vector<uint32_t> connected;
    for (uint32_t mask : enumerate_high_divergent(g, opts))
        if (subgraph_components(g, mask).size() == 1) connected.push_back(mask);

    // Vertex sets for the disjointness test (needed for the all-divergent
    // variant; with the high filter the forest lemma makes every pair nested
    // or disjoint anyway).
    std::vector<std::vector<int>> verts;
    for (uint32_t m : connected) verts.push_back(subgraph_components(g, m).front().vertices);
    auto compatible = [&](std::size_t i, std::size_t j) {
        const uint32_t a = connected[i], b = connected[j];
        if ((a & b) == a || (a & b) == b) return true;
        for (int v : verts[i])
            if (std::binary_search(verts[j].begin(), verts[j].end(), v)) return false;
        return true;
    };

    const uint32_t full = g.edge_count() == 0 ? 0 : ((1u << g.edge_count()) - 1);
    std::vector<std::vector<uint32_t>> forests;
    const std::size_t n = connected.size();
    if (n > 20) throw PreconditionError("too many divergent subgraphs for forest enumeration");
    for (uint32_t pick = 0; pick < (1u << n); ++pick) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((pick & (1u << i)) && (pick & (1u << j)) && !compatible(i, j)) ok = false;
        if (!ok) continue;
        std::vector<uint32_t> forest;
        for (std::size_t i = 0; i < n; ++i)
            if (pick & (1u << i)) forest.push_back(connected[i]);
        forest.push_back(full); // the improper full graph always belongs
        forests.push_back(std::move(forest));
    }
    return forests;
}

namespace {

// The forest element `mask`, contracted by its maximal children, as a
// standalone assigned graph (children are connected subgraphs of mask).
AssignedGraph contracted_piece(const AssignedGraph& g, uint32_t mask,
                               const std::vector<uint32_t>& children) {
    const FeynmanGraph& gr = g.graph();
    // Vertex -> child component id, -1 if none.
    std::vector<int> child_of(gr.vertex_count(), -1);
    for (std::size_t c = 0; c < children.size(); ++c)
        for (const auto& comp : subgraph_components(g, children[c]))
            for (int v : comp.vertices) child_of[v] = static_cast<int>(c);

    const auto comps = subgraph_components(g, mask);
    if (comps.size() != 1) throw PreconditionError("forest element must be connected");
    const auto& piece = comps.front();

    FeynmanGraph out(gr.valence());
    out.set_labeled_legs(false);
    std::vector<int> vmap(gr.vertex_count(), -1);
    std::vector<int> child_vertex(children.size(), -1);
    for (int v : piece.vertices) {
        if (child_of[v] >= 0) {
            if (child_vertex[child_of[v]] < 0) {
                const auto cc = subgraph_components(g, children[child_of[v]]);
                const VertexKind kind = cc.front().external_count() == 2
                                            ? VertexKind::TwoPointInsertion
                                            : VertexKind::Normal;
                child_vertex[child_of[v]] = out.add_vertex(kind);
            }
            vmap[v] = child_vertex[child_of[v]];
        } else {
            vmap[v] = out.add_vertex(gr.kinds()[v]);
        }
    }
    uint32_t child_union = 0;
    for (uint32_t c : children) child_union |= c;
    std::vector<int> scales;
    for (int e = 0; e < gr.edge_count(); ++e) {
        if (!(mask & (1u << e)) || (child_union & (1u << e))) continue;
        out.add_edge(vmap[gr.edges()[e].u], vmap[gr.edges()[e].v]);
        scales.push_back(g.scale(e));
    }
    // External attachments of the piece in G.
    for (int e = 0; e < gr.edge_count(); ++e) {
        if (mask & (1u << e)) continue;
        for (int end : {gr.edges()[e].u, gr.edges()[e].v})
            if (vmap[end] >= 0 &&
                std::binary_search(piece.vertices.begin(), piece.vertices.end(), end))
                out.add_leg(vmap[end]);
    }
    for (int k = 0; k < gr.leg_count(); ++k)
        if (std::binary_search(piece.vertices.begin(), piece.vertices.end(), gr.legs()[k]))
            out.add_leg(vmap[gr.legs()[k]]);
    return AssignedGraph(std::move(out), ScaleAssignment{std::move(scales), g.rho()});
}

} // namespace

AlgebraElement HopfAlgebra::antipode_by_forests(const AssignedGraph& g) const {
    if (g.edge_count() == 0) return AlgebraElement::from_monomial(Monomial{g}, -1);
    AlgebraElement result;
    for (const auto& forest : dangerous_forests(g)) {
        Monomial pieces;
        for (uint32_t mask : forest) {
            // Maximal children of mask within the forest.
            std::vector<uint32_t> children;
            for (uint32_t other : forest) {
                if (other == mask) continue;
                if ((other & mask) != other) continue; // not a subset
                bool maximal = true;
                for (uint32_t mid : forest)
                    if (mid != mask && mid != other && (mid & mask) == mid &&
                        (other & mid) == other)
                        maximal = false;
                if (maximal) children.push_back(other);
            }
            pieces.push_back(contracted_piece(g, mask, children));
        }
        const Rational sign = (forest.size() % 2 == 0) ? 1 : -1;
        result.add(sorted_monomial(std::move(pieces)), sign);
    }
    return result;
}

// ---------------------------------------------------------------------------

TensorK HopfAlgebra::as_rank1(const AlgebraElement& x) const {
    TensorK t(1);
    for (const auto& [m, c] : x.terms()) t.add({m}, c);
    return t;
}

TensorK HopfAlgebra::expand_slot(const TensorK& t, int slot, bool reduced) const {
    TensorK out(t.rank() + 1);
    for (const auto& [key, c] : t.terms()) {
        AlgebraElement x = AlgebraElement::from_monomial(key[slot]);
        const TensorElement d = reduced ? reduced_coproduct(x) : coproduct(x);
        for (const auto& [pair, v] : d.terms()) {
            TensorK::Key k;
            k.reserve(key.size() + 1);
            for (int i = 0; i < slot; ++i) k.push_back(key[i]);
            k.push_back(pair.first);
            k.push_back(pair.second);
            for (std::size_t i = slot + 1; i < key.size(); ++i) k.push_back(key[i]);
            out.add(std::move(k), c * v);
        }
    }
    return out;
}

bool HopfAlgebra::check_coassociativity(const AlgebraElement& x) const {
    const TensorK rank1 = as_rank1(x);
    const TensorK d = expand_slot(rank1, 0, false);
    const TensorK left = expand_slot(d, 0, false);  // (D (x) id) D
    const TensorK right = expand_slot(d, 1, false); // (id (x) D) D
    return left == right;
}

bool HopfAlgebra::check_counit_laws(const AlgebraElement& x) const {
    const TensorElement d = coproduct(x);
    AlgebraElement left, right;
    for (const auto& [k, c] : d.terms()) {
        if (k.first.empty()) left.add(k.second, c);   // (eps (x) id) D
        if (k.second.empty()) right.add(k.first, c);  // (id (x) eps) D
    }
    return left == x && right == x;
}

bool HopfAlgebra::check_antipode_laws(const AssignedGraph& g) const {
    const TensorElement d = coproduct(g);
    AlgebraElement left, right;
    for (const auto& [k, c] : d.terms()) {
        left += (antipode(k.first) * AlgebraElement::from_monomial(k.second)) * c;
        right += (AlgebraElement::from_monomial(k.first) * antipode(k.second)) * c;
    }
    const AlgebraElement expected = AlgebraElement::unit(AlgebraElement::generator(g).counit());
    return left == expected && right == expected;
}

bool HopfAlgebra::check_grading(const AssignedGraph& g) const {
    const int grade = g.loop_number();
    const TensorElement d = coproduct(g);
    for (const auto& [k, c] : d.terms())
        if (monomial_grade(k.first) + monomial_grade(k.second) != grade) return false;
    return true;
}

} // namespace mshopf
