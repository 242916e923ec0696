#pragma once

// Slow, independent reference implementations used as test oracles. They
// rely only on the field's elementwise operations (checked separately against
// ReferenceField) and never on the library's elimination, packing or search.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qcq/field.hpp"
#include "qcq/poly.hpp"

namespace oracle {

using Vec = std::vector<std::uint8_t>;
using Rows = std::vector<Vec>;

/// GF(p^m) as polynomials over Z_p modulo a hard-coded Conway polynomial.
/// Element index 0 is zero and index k >= 1 is gamma^(k-1).
struct ReferenceField {
    unsigned p, m, order;
    std::vector<Vec> power;  ///< power[k] = coefficient vector of gamma^k

    explicit ReferenceField(unsigned q) {
        // Conway polynomials, lowest coefficient first, monic term omitted.
        static const std::map<unsigned, std::tuple<unsigned, unsigned, Vec>> table{
            {4, {2, 2, {1, 1}}},          // x^2 + x + 1
            {9, {3, 2, {2, 2}}},          // x^2 + 2x + 2
            {16, {2, 4, {1, 1, 0, 0}}},   // x^4 + x + 1
            {25, {5, 2, {2, 4}}},         // x^2 + 4x + 2
            {2, {2, 1, {1}}},             // x + 1
            {3, {3, 1, {1}}},             // x + 1
            {5, {5, 1, {3}}},             // x + 3
        };
        const auto& [pp, mm, low] = table.at(q);
        p = pp;
        m = mm;
        order = q;
        Vec cur(m, 0);
        cur[0] = 1;
        for (unsigned k = 0; k + 1 < order; ++k) {
            power.push_back(cur);
            // multiply by x, reduce x^m = -low(x)
            Vec next(m, 0);
            for (unsigned i = 0; i + 1 < m; ++i) next[i + 1] = cur[i];
            const unsigned top = cur[m - 1];
            for (unsigned i = 0; i < m; ++i) next[i] = static_cast<std::uint8_t>((next[i] + p * p - top * low[i] % p) % p);
            cur = next;
        }
    }

    [[nodiscard]] Vec vec(std::uint8_t a) const { return a == 0 ? Vec(m, 0) : power[a - 1]; }
    [[nodiscard]] std::uint8_t index(const Vec& v) const {
        if (v == Vec(m, 0)) return 0;
        for (unsigned k = 0; k < power.size(); ++k) {
            if (power[k] == v) return static_cast<std::uint8_t>(k + 1);
        }
        throw std::logic_error("vector is not a field element");
    }
    [[nodiscard]] std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        Vec x = vec(a), y = vec(b);
        for (unsigned i = 0; i < m; ++i) x[i] = static_cast<std::uint8_t>((x[i] + y[i]) % p);
        return index(x);
    }
    [[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        if (a == 0 || b == 0) return 0;
        return static_cast<std::uint8_t>((a - 1 + b - 1) % (order - 1) + 1);
    }
    /// a^sqrt(order) for quadratic fields
    [[nodiscard]] std::uint8_t conj(std::uint8_t a) const {
        unsigned q = 1;
        while (q * q < order) ++q;
        std::uint8_t r = 1;
        for (unsigned i = 0; i < q; ++i) r = mul(r, a);
        return a == 0 ? 0 : r;
    }
};

inline std::uint8_t neg(const qcq::Field& f, std::uint8_t a) {
    for (unsigned b = 0; b < f.order(); ++b) {
        if (f.add(a, static_cast<std::uint8_t>(b)) == 0) return static_cast<std::uint8_t>(b);
    }
    throw std::logic_error("no additive inverse");
}

inline std::uint8_t inv(const qcq::Field& f, std::uint8_t a) {
    for (unsigned b = 1; b < f.order(); ++b) {
        if (f.mul(a, static_cast<std::uint8_t>(b)) == 1) return static_cast<std::uint8_t>(b);
    }
    throw std::logic_error("no multiplicative inverse");
}

/// Row echelon form by textbook elimination; returns the nonzero rows.
inline Rows echelon(const qcq::Field& f, Rows rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint8_t s = inv(f, rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint8_t factor = neg(f, rows[i][c]);
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline std::size_t rank(const qcq::Field& f, const Rows& rows) { return echelon(f, rows).size(); }

/// Same row space.
inline bool same_span(const qcq::Field& f, const Rows& a, const Rows& b) {
    return echelon(f, a) == echelon(f, b);
}

/// Basis of {v : sum_j rows[i][j] v[j] = 0 for all i}.
inline Rows kernel(const qcq::Field& f, const Rows& rows, std::size_t cols) {
    const Rows e = echelon(f, rows);
    std::vector<long> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (e[i][c] != 0) {
                pivot_of_col[c] = static_cast<long>(i);
                break;
            }
        }
    }
    Rows out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] >= 0) v[c] = neg(f, e[pivot_of_col[c]][free]);
        }
        out.push_back(v);
    }
    return out;
}

inline std::uint8_t hdot(const qcq::Field& f, const Vec& u, const Vec& v) {
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], f.conj(v[i])));
    return acc;
}

/// Gram matrix G conj(G)^T vanishes.
inline bool self_orthogonal(const qcq::Field& f, const Rows& g) {
    for (const auto& a : g) {
        for (const auto& b : g) {
            if (hdot(f, a, b) != 0) return false;
        }
    }
    return true;
}

/// C^{⊥h} ⊆ C, tested as "C^{⊥h} is Hermitian self-orthogonal".
inline bool dual_containing(const qcq::Field& f, const Rows& g, std::size_t cols) {
    Rows d = kernel(f, g, cols);
    for (auto& v : d) {
        for (auto& x : v) x = f.conj(x);
    }
    return self_orthogonal(f, d);
}

/// Minimum nonzero weight over every message of the (not necessarily
/// independent) rows; 0 for the zero code.
inline unsigned min_distance(const qcq::Field& f, const Rows& g) {
    const Rows b = echelon(f, g);
    if (b.empty()) return 0;
    const std::size_t k = b.size(), n = b[0].size();
    std::vector<unsigned> msg(k, 0);
    unsigned best = ~0u;
    for (;;) {
        std::size_t i = 0;
        while (i < k && msg[i] == f.order() - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        unsigned w = 0;
        for (std::size_t c = 0; c < n; ++c) {
            std::uint8_t x = 0;
            for (std::size_t r = 0; r < k; ++r) x = f.add(x, f.mul(static_cast<std::uint8_t>(msg[r]), b[r][c]));
            w += x != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

/// Coefficient vector of x^s p(x) mod x^n - 1.
inline Vec cyclic_shift(const qcq::Poly& p, std::size_t n, std::size_t s) {
    Vec v(n, 0);
    const auto& f = p.F();
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const std::size_t j = (i + s) % n;
        v[j] = f.add(v[j], p.coeffs()[i]);
    }
    return v;
}

/// All n shifts of the pair ([a], [b]); spans the same code as the minimal
/// generator matrix.
inline Rows pair_shifts(const qcq::Poly& a, const qcq::Poly& b, std::size_t n) {
    Rows out;
    for (std::size_t s = 0; s < n; ++s) {
        Vec v = cyclic_shift(a, n, s);
        const Vec w = cyclic_shift(b, n, s);
        v.insert(v.end(), w.begin(), w.end());
        out.push_back(v);
    }
    return out;
}

/// The 2-generator quasi-cyclic code from its definition.
inline Rows qc_rows(const qcq::Poly& g1, const qcq::Poly& g2, const qcq::Poly& t, std::size_t n) {
    Rows r = pair_shifts(t * g1, g1, n);
    const Rows s = pair_shifts(g2, t * g2, n);
    r.insert(r.end(), s.begin(), s.end());
    return r;
}

inline Rows cyclic_rows(const qcq::Poly& g, std::size_t n) {
    Rows out;
    for (std::size_t s = 0; s < n; ++s) out.push_back(cyclic_shift(g, n, s));
    return out;
}

/// Monic divisors of x^n - 1 by trial: every monic polynomial of degree <= n
/// is too many, so build them as products of the irreducible factors found
/// by repeated division.
inline std::vector<qcq::Poly> monic_divisors(const qcq::FieldPtr& F, unsigned n) {
    using qcq::Poly;
    // Irreducible factors with multiplicity, by trial division over monic
    // polynomials in increasing degree.
    std::vector<Poly> factors;
    Poly rest = Poly::xn_minus_1(F, n);
    for (unsigned deg = 1; rest.degree() > 0 && deg <= n; ++deg) {
        std::vector<std::uint8_t> c(deg + 1, 0);
        c[deg] = 1;
        for (;;) {
            const Poly cand(F, c);
            while (rest.degree() >= cand.degree() && (rest % cand).is_zero()) {
                factors.push_back(cand);
                rest = rest / cand;
            }
            std::size_t i = 0;
            while (i < deg && c[i] == F->order() - 1) c[i++] = 0;
            if (i == deg) break;
            ++c[i];
        }
    }
    std::vector<Poly> out;
    const std::size_t m = factors.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        Poly p = Poly::one(F);
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) p = p * factors[i];
        }
        bool dup = false;
        for (const auto& q : out) dup = dup || q == p;
        if (!dup) out.push_back(p);
    }
    return out;
}

inline qcq::Poly random_poly(const qcq::FieldPtr& F, std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> d(0, F->order() - 1);
    std::vector<std::uint8_t> c(len);
    for (auto& x : c) x = static_cast<std::uint8_t>(d(rng));
    return qcq::Poly(F, c);
}

}  // namespace oracle
