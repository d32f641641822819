#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mshopf/rational.hpp"

namespace mshopf {

// Sparse multivariate polynomial over Rational with named variables.
// Variables are ordered lexicographically by name, which makes every
// serialization of a Poly byte-stable. Used as the common exact target
// algebra: amplitude values (variable "q"), per-generator formal symbols
// ("s_<hash>") and coupling-constant series ("lambda_<i>") all live here.
class Poly {
public:
    using Mono = std::map<std::string, int>; // variable -> exponent > 0
    using Terms = std::map<Mono, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (!mshopf::is_zero(c)) terms_[Mono{}] = c;
    }
    Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(const std::string& name, int exp = 1) {
        Poly p;
        if (exp == 0) return Poly(1);
        p.terms_[Mono{{name, exp}}] = 1;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_term() const {
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly(0) - a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c) {
        if (mshopf::is_zero(c)) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        return compare(a.terms_, b.terms_) < 0;
    }

    void add_term(const Mono& m, const Rational& c) {
        if (mshopf::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (mshopf::is_zero(it->second)) terms_.erase(it);
        }
    }

    // Total degree counting only variables whose name starts with `prefix`.
    static int prefixed_degree(const Mono& m, const std::string& prefix) {
        int d = 0;
        for (const auto& [v, e] : m)
            if (v.compare(0, prefix.size(), prefix) == 0) d += e;
        return d;
    }

    // Drop every term whose prefixed degree exceeds `max_degree`.
    Poly truncated(const std::string& prefix, int max_degree) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (prefixed_degree(m, prefix) <= max_degree) r.terms_.emplace(m, c);
        return r;
    }

    // Formal partial derivative with respect to one variable.
    Poly derivative(const std::string& var) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(var);
            if (it == m.end()) continue;
            Mono d = m;
            if (it->second == 1) {
                d.erase(var);
            } else {
                d[var] = it->second - 1;
            }
            r.add_term(d, c * it->second);
        }
        return r;
    }

    // Substitute variables by polynomials; variables absent from `subs` stay.
    Poly substituted(const std::map<std::string, Poly>& subs) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            for (const auto& [v, e] : m) {
                auto it = subs.find(v);
                if (it == subs.end()) {
                    t *= Poly::variable(v, e);
                } else {
                    for (int k = 0; k < e; ++k) t *= it->second;
                }
            }
            r += t;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += mshopf::to_string(c);
            for (const auto& [v, e] : m) {
                s += "*" + v;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r = a;
        for (const auto& [v, e] : b) r[v] += e;
        return r;
    }
    static int compare(const Terms& a, const Terms& b) {
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            int s = cmp(ia->second, ib->second);
            if (s != 0) return s;
        }
        if (ia != a.end()) return 1;
        if (ib != b.end()) return -1;
        return 0;
    }

    Terms terms_;
};

} // namespace mshopf
