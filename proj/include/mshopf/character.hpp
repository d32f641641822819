#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "mshopf/algebra.hpp"
#include "mshopf/poly.hpp"

namespace mshopf {

// Multiplicative evaluation of the graph algebra into the exact polynomial
// target: alpha(xy) = alpha(x) alpha(y), alpha(1) = 1. Values are memoized
// per canonical generator; copies share the memo.
class Character {
public:
    using GeneratorFn = std::function<Poly(const AssignedGraph&)>;

    Character() : Character(counit_character_fn()) {}
    explicit Character(GeneratorFn fn) : state_(std::make_shared<State>(std::move(fn))) {}

    // counit: 1 on the unit, 0 on every generator.
    static Character counit() { return Character(); }

    Poly operator()(const AssignedGraph& g) const;
    Poly on_monomial(const Monomial& m) const;
    Poly on_element(const AlgebraElement& x) const;

private:
    static GeneratorFn counit_character_fn() {
        return [](const AssignedGraph&) { return Poly(0); };
    }
    struct State {
        explicit State(GeneratorFn f) : fn(std::move(f)) {}
        GeneratorFn fn;
        std::map<AssignedGraph, Poly> memo;
        std::mutex mutex;
    };
    std::shared_ptr<State> state_;
};

// Linear functional extended by the infinitesimal-character rule:
// delta(1) = 0 and delta vanishes on products of two or more generators.
class InfinitesimalCharacter {
public:
    using GeneratorFn = std::function<Poly(const AssignedGraph&)>;

    InfinitesimalCharacter() : fn_([](const AssignedGraph&) { return Poly(0); }) {}
    explicit InfinitesimalCharacter(GeneratorFn fn) : fn_(std::move(fn)) {}

    Poly operator()(const AssignedGraph& g) const { return fn_(g); }
    Poly on_monomial(const Monomial& m) const {
        return m.size() == 1 ? fn_(m.front()) : Poly(0);
    }

private:
    GeneratorFn fn_;
};

// Convolution alpha*beta = (alpha (x) beta) Delta. The Hopf structure is
// captured by reference and must outlive the returned character.
Character convolve(const HopfAlgebra& hopf, const Character& a, const Character& b);

// alpha^{-1*} = alpha . S.
Character convolution_inverse(const HopfAlgebra& hopf, const Character& a);

// exp_*(delta) = sum_n delta^{*n} / n!, truncated at max_grade (the series
// terminates at the loop grade of each generator anyway).
Character conv_exp(const HopfAlgebra& hopf, const InfinitesimalCharacter& delta, int max_grade);

// log_*(alpha) = sum_{n>=1} (-1)^{n-1} (alpha - counit)^{*n} / n.
InfinitesimalCharacter conv_log(const HopfAlgebra& hopf, const Character& alpha, int max_grade);

// Exact equality of two characters on a finite generator set.
bool characters_equal_on(const Character& a, const Character& b,
                         const std::vector<AssignedGraph>& generators);

} // namespace mshopf
