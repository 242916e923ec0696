#pragma once

// Cyclic codes over GF(q^2): generators from defining sets and back.

#include <string>
#include <vector>

#include "qcq/cosets.hpp"
#include "qcq/error.hpp"
#include "qcq/extension.hpp"
#include "qcq/poly.hpp"

namespace qcq {

/// Monic prod_{i in T} (x - zeta^i), computed in the splitting field and
/// projected back to the base field.
inline Poly gen_from_defining_set(unsigned n, const FieldPtr& field, const DefiningSet& t) {
    if (t.n() != n || t.q2() != field->order()) throw DomainError("defining set does not match (n, field)");
    // Coset closure is what makes the product land in the base field.
    (void)DefiningSet::from_elements(n, t.q2(), t.elements());
    const auto sf = splitting_field(n, field);
    const auto& ext = sf->ext();
    std::vector<ExtElem> g{ext.one()};
    for (unsigned i : t.elements()) {
        const ExtElem& root = sf->zeta_pow(i);
        std::vector<ExtElem> next(g.size() + 1, ext.zero());
        for (std::size_t k = 0; k < g.size(); ++k) {
            next[k + 1] = ext.add(next[k + 1], g[k]);
            next[k] = ext.sub(next[k], ext.mul(g[k], root));
        }
        g = std::move(next);
    }
    std::vector<std::uint8_t> coeffs(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto v = sf->project(g[k]);
        if (!v) throw InternalError("generator coefficient " + std::to_string(k) + " is outside the base field");
        coeffs[k] = *v;
    }
    return Poly(field, std::move(coeffs));
}

/// {i : g(zeta^i) = 0}.
inline DefiningSet defining_set_of(const Poly& g, unsigned n) {
    if (g.is_zero() || !p_divides(g, Poly::xn_minus_1(g.field(), n))) {
        throw DomainError("generator does not divide x^n - 1");
    }
    const auto sf = splitting_field(n, g.field());
    const auto& ext = sf->ext();
    std::vector<unsigned> reps;
    // g has base-field coefficients, so its roots come in whole cosets.
    for (const auto& c : all_cosets(n, g.F().order())) {
        const ExtElem& x = sf->zeta_pow(c.rep);
        ExtElem acc = ext.zero();
        for (std::size_t k = g.coeffs().size(); k-- > 0;) {
            acc = ext.add(ext.mul(acc, x), sf->embed(g.coeffs()[k]));
        }
        if (ExtensionField::is_zero(acc)) reps.push_back(c.rep);
    }
    auto t = DefiningSet::from_reps(n, g.F().order(), reps);
    if (static_cast<long>(t.size()) != g.degree()) {
        throw InternalError("root count does not match the generator degree");
    }
    return t;
}

/// Cyclic code <g> of length n with g monic and dividing x^n - 1.
class CyclicCode {
public:
    CyclicCode(unsigned n, Poly g) : n_(n), g_(std::move(g).monic()) {
        if (g_.is_zero() || !p_divides(g_, Poly::xn_minus_1(g_.field(), n))) {
            throw DomainError("generator does not divide x^n - 1");
        }
    }
    static CyclicCode from_defining_set(unsigned n, const FieldPtr& f, const DefiningSet& t) {
        return CyclicCode(n, gen_from_defining_set(n, f, t));
    }

    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] const Poly& generator() const noexcept { return g_; }
    [[nodiscard]] const FieldPtr& field() const noexcept { return g_.field(); }
    [[nodiscard]] unsigned dim() const noexcept { return n_ - static_cast<unsigned>(g_.degree()); }
    [[nodiscard]] DefiningSet defining_set() const { return defining_set_of(g_, n_); }

private:
    unsigned n_;
    Poly g_;
};

inline unsigned cyclic_dim(const CyclicCode& c) { return c.dim(); }

}  // namespace qcq
