#include "mshopf/character.hpp"

namespace mshopf {

Poly Character::operator()(const AssignedGraph& g) const {
    {
        std::lock_guard<std::mutex> lock(state_->mutex);
        auto it = state_->memo.find(g);
        if (it != state_->memo.end()) return it->second;
    }
    Poly v = state_->fn(g);
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->memo.emplace(g, v);
    return v;
}

Poly Character::on_monomial(const Monomial& m) const {
    Poly v(1);
    for (const auto& g : m) v *= (*this)(g);
    return v;
}

Poly Character::on_element(const AlgebraElement& x) const {
    Poly v;
    for (const auto& [m, c] : x.terms()) v += on_monomial(m) * c;
    return v;
}

Character convolve(const HopfAlgebra& hopf, const Character& a, const Character& b) {
    return Character([&hopf, a, b](const AssignedGraph& g) {
        Poly v;
        const TensorElement d = hopf.coproduct(g);
        for (const auto& [k, c] : d.terms())
            v += a.on_monomial(k.first) * b.on_monomial(k.second) * c;
        return v;
    });
}

Character convolution_inverse(const HopfAlgebra& hopf, const Character& a) {
    return Character([&hopf, a](const AssignedGraph& g) { return a.on_element(hopf.antipode(g)); });
}

namespace {

// Linear maps on monomials, convolved via the coproduct.
using MonomialFn = std::function<Poly(const Monomial&)>;

MonomialFn convolve_maps(const HopfAlgebra& hopf, MonomialFn f, MonomialFn g) {
    return [&hopf, f = std::move(f), g = std::move(g)](const Monomial& m) {
        Poly v;
        const TensorElement d = hopf.coproduct(m);
        for (const auto& [k, c] : d.terms()) v += f(k.first) * g(k.second) * c;
        return v;
    };
}

} // namespace

Character conv_exp(const HopfAlgebra& hopf, const InfinitesimalCharacter& delta, int max_grade) {
    return Character([&hopf, delta, max_grade](const AssignedGraph& g) {
        const int bound = std::min(max_grade, std::max(g.loop_number(), 0));
        MonomialFn dmap = [delta](const Monomial& m) { return delta.on_monomial(m); };
        // power = delta^{*n}, built up iteratively.
        MonomialFn power = [](const Monomial& m) { return Poly(m.empty() ? 1 : 0); }; // counit
        Poly v = power(Monomial{g});
        Rational nfact = 1;
        for (int n = 1; n <= bound; ++n) {
            power = convolve_maps(hopf, power, dmap);
            nfact *= n;
            v += power(Monomial{g}) * (Rational(1) / nfact);
        }
        return v;
    });
}

InfinitesimalCharacter conv_log(const HopfAlgebra& hopf, const Character& alpha, int max_grade) {
    return InfinitesimalCharacter([&hopf, alpha, max_grade](const AssignedGraph& g) {
        const int bound = std::min(max_grade, std::max(g.loop_number(), 1));
        MonomialFn reduced = [alpha](const Monomial& m) {
            Poly v = alpha.on_monomial(m);
            if (m.empty()) v -= Poly(1);
            return v;
        };
        MonomialFn power = reduced;
        Poly v = power(Monomial{g});
        for (int n = 2; n <= bound; ++n) {
            power = convolve_maps(hopf, power, reduced);
            const Rational coeff = Rational((n % 2 == 0) ? -1 : 1) / Rational(n);
            v += power(Monomial{g}) * coeff;
        }
        return v;
    });
}

bool characters_equal_on(const Character& a, const Character& b,
                         const std::vector<AssignedGraph>& generators) {
    for (const auto& g : generators)
        if (a(g) != b(g)) return false;
    return true;
}

} // namespace mshopf
