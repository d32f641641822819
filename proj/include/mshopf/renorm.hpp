#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mshopf/algebra.hpp"
#include "mshopf/character.hpp"

namespace mshopf {

// An amplitude model: a multiplicative evaluation of assigned graphs into
// the exact polynomial target, together with the projection tau applied to
// its values. In both bundled models the values are already constants in
// the space-time sense, so tau is the identity; it stays a named hook so a
// genuine projection can be substituted.
struct Amplitude {
    std::string name;
    std::function<Poly(const AssignedGraph&)> eval;
    std::function<Poly(const Poly&)> tau = [](const Poly& p) { return p; };
};

// q^(sum of internal scales).
Amplitude toy_amplitude();
// An independent formal symbol per canonical generator (edgeless graphs
// evaluate to 1, the empty product). Rules out accidental cancellations.
Amplitude symbols_amplitude();

// The amplitude as a character of the graph algebra (labels ignored).
Character amplitude_character(const Amplitude& a);
// tau A as a character.
Character tau_character(const Amplitude& a);

// ---------------------------------------------------------------------------
// Useful counterterms.

// C_U(G) = -tau A(G) + sum over high families g of -tau A(G/g) C_U(g), the
// sum running over families whose components are biped-free quadrupeds.
// Throws BipedSectorError when G contains a two-point subgraph. Values are
// memoized per canonical generator; agreement with (tau A) . S is a theorem
// checked by the test and acceptance suites.
class Counterterms {
public:
    Counterterms(const HopfAlgebra& hopf, Amplitude amplitude);

    Poly value(const AssignedGraph& g) const;
    // As a constant-valued character of the graph algebra.
    Character character() const;

private:
    struct Memo {
        std::map<AssignedGraph, Poly> values;
        std::mutex mutex;
    };
    const HopfAlgebra& hopf_;
    Amplitude amplitude_;
    std::shared_ptr<Memo> memo_;
};

inline Poly useful_counterterms(const HopfAlgebra& hopf, const AssignedGraph& g,
                                const Amplitude& a) {
    return Counterterms(hopf, a).value(g);
}

// ---------------------------------------------------------------------------
// The Hopf coaction on externally labeled graphs.

// Tensor in H (x) K: unlabeled extracted monomial on the left, a single
// labeled graph on the right.
struct CoactionElement {
    std::map<std::pair<Monomial, AssignedGraph>, Rational> terms;
    void add(Monomial l, AssignedGraph r, const Rational& c);
    friend bool operator==(const CoactionElement& a, const CoactionElement& b) {
        return a.terms == b.terms;
    }
};

// Sum over every family of disjoint high divergent subgraphs, including the
// empty family (giving 1 (x) G) and, when the whole graph qualifies, the
// improper one (giving (G-bar) (x) bare vertex). The right factor keeps the
// external labels; the left factors are unlabeled.
CoactionElement coaction(const HopfAlgebra& hopf, const AssignedGraph& g);

// Axioms: m(counit (x) id) = id and (Delta (x) id) coaction = (id (x)
// coaction) coaction, checked exactly.
bool check_coaction_counit(const HopfAlgebra& hopf, const AssignedGraph& g);
bool check_coaction_coassociativity(const HopfAlgebra& hopf, const AssignedGraph& g);

// A_UR = C_U . A = m (C_U (x) A) coaction. With the identity tau this equals
// the counit on every generator with internal edges and 1 on the bare
// vertex; the value is label-independent in both bundled models.
Poly renormalized_amplitude(const HopfAlgebra& hopf, const AssignedGraph& g, const Amplitude& a);

} // namespace mshopf
