#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "mshopf/multiscale.hpp"
#include "mshopf/poly.hpp"
#include "mshopf/rational.hpp"

namespace mshopf {

// A monomial of the free commutative algebra on assigned graphs: a sorted
// multiset of canonical generators. The empty monomial is the unit 1_H.
using Monomial = std::vector<AssignedGraph>;

Monomial sorted_monomial(Monomial m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
int monomial_grade(const Monomial& m); // sum of loop numbers

// Finite rational linear combination of monomials.
class AlgebraElement {
public:
    using Terms = std::map<Monomial, Rational>;

    AlgebraElement() = default;
    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit(const Rational& c = 1);
    // Throws PreconditionError unless g is connected, 1PI and unlabeled.
    static AlgebraElement generator(const AssignedGraph& g);
    static AlgebraElement from_monomial(Monomial m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Monomial& m, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement& operator*=(const Rational& c);
    friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    // Coefficient of the empty monomial.
    Rational counit() const;

private:
    Terms terms_;
};

inline Rational counit(const AlgebraElement& x) { return x.counit(); }

// Element of H (x) H.
class TensorElement {
public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, Rational>;

    TensorElement() = default;
    static TensorElement unit(const Rational& c = 1); // 1 (x) 1

    const Terms& terms() const { return terms_; }
    void add(const Monomial& l, const Monomial& r, const Rational& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    // Componentwise algebra product (a (x) b)(c (x) d) = ac (x) bd.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

private:
    Terms terms_;
};

// Rank-k tensors, used by the coassociativity and nilpotency checks.
class TensorK {
public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, Rational>;

    explicit TensorK(int rank) : rank_(rank) {}
    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    void add(Key k, const Rational& c);

    friend bool operator==(const TensorK& a, const TensorK& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    int rank_;
    Terms terms_;
};

// The multiscale Hopf structure on the graph algebra. `all_divergent`
// switches to the Connes-Kreimer-style coproduct that extracts every
// superficially divergent subgraph, not only high ones (the target of
// pi_CK); everything else is the same code path.
class HopfAlgebra {
public:
    explicit HopfAlgebra(bool all_divergent = false) : all_divergent_(all_divergent) {}

    bool all_divergent() const { return all_divergent_; }

    TensorElement coproduct(const AssignedGraph& g) const;
    TensorElement coproduct(const Monomial& m) const;
    TensorElement coproduct(const AlgebraElement& x) const;

    // Reduced coproduct on the augmentation ideal:
    // D'(x) = D(x) - x(x)1 - 1(x)x + counit(x) 1(x)1.
    TensorElement reduced_coproduct(const AlgebraElement& x) const;

    AlgebraElement antipode(const AssignedGraph& g) const;
    AlgebraElement antipode(const Monomial& m) const;
    AlgebraElement antipode(const AlgebraElement& x) const;

    // Non-recursive antipode: signed sum over forests of nested-or-disjoint
    // connected divergent (high) proper subgraphs, with the full graph
    // adjoined to every forest; each forest element is contracted by its
    // children.
    AlgebraElement antipode_by_forests(const AssignedGraph& g) const;

    // The forests themselves (as families of edge masks including the full
    // set), in a deterministic order; exposed for reporting.
    std::vector<std::vector<uint32_t>> dangerous_forests(const AssignedGraph& g) const;

    bool check_coassociativity(const AlgebraElement& x) const;
    bool check_counit_laws(const AlgebraElement& x) const;
    bool check_antipode_laws(const AssignedGraph& g) const;
    // Every coproduct term of a generator splits the grade.
    bool check_grading(const AssignedGraph& g) const;

    // Apply D (or D') to tensor slot `slot`, producing a rank+1 tensor.
    TensorK expand_slot(const TensorK& t, int slot, bool reduced) const;
    TensorK as_rank1(const AlgebraElement& x) const;

private:
    AlgebraElement antipode_uncached(const AssignedGraph& g) const;

    bool all_divergent_ = false;
    // Shared across threads: lookups and inserts are locked, recursion runs
    // unlocked (duplicated work is benign, results are deterministic).
    mutable std::map<AssignedGraph, AlgebraElement> antipode_memo_;
    mutable std::mutex memo_mutex_;
};

} // namespace mshopf
