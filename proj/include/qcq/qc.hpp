#pragma once

// Index-2 quasi-cyclic codes C(g1, g2, t) of length 2n, generated by
// ([t g1], [g1]) and ([g2], [t g2]), together with the candidate Hermitian
// dual C0 generated by ([-tbq g1'], [g1']) and ([g2'], [-tbq g2']) where
// g' is the Hermitian dual generator and tbq = conj(bar(t)).

#include <cstdint>
#include <string>
#include <vector>

#include "qcq/error.hpp"
#include "qcq/matrix.hpp"
#include "qcq/poly.hpp"

namespace qcq {

enum class DistanceStatus { exact, lower_bound, upper_bound, interval };

inline const char* to_string(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::exact: return "exact";
        case DistanceStatus::lower_bound: return "lower_bound";
        case DistanceStatus::upper_bound: return "upper_bound";
        case DistanceStatus::interval: return "interval";
    }
    return "?";
}

/// [n, k, d]_{q^2}
struct CodeParams {
    unsigned n = 0;
    unsigned k = 0;
    unsigned d = 0;
    DistanceStatus d_status = DistanceStatus::exact;
};

namespace detail {
/// Coefficient vector of x^shift * p mod (x^n - 1).
inline std::vector<std::uint8_t> shifted(const Poly& p, std::size_t n, std::size_t shift) {
    std::vector<std::uint8_t> v(n, 0);
    const Poly r = p.reduce_cyclic(n);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[(i + shift) % n] = r.coeffs()[i];
    return v;
}

inline void append_pair_rows(Matrix& m, const Poly& left, const Poly& right, std::size_t n, std::size_t count) {
    std::vector<std::uint8_t> row(2 * n);
    for (std::size_t i = 0; i < count; ++i) {
        const auto l = shifted(left, n, i);
        const auto r = shifted(right, n, i);
        std::copy(l.begin(), l.end(), row.begin());
        std::copy(r.begin(), r.end(), row.begin() + static_cast<long>(n));
        m.append_row(row);
    }
}
}  // namespace detail

class QuasiCyclicCode {
public:
    QuasiCyclicCode(unsigned n, Poly g1, Poly g2, Poly t)
        : n_(n),
          g1_(std::move(g1)),
          g2_(std::move(g2)),
          t_(std::move(t)),
          g1_perp_(Poly::zero(g1_.field())),
          g2_perp_(Poly::zero(g1_.field())),
          tbq_(Poly::zero(g1_.field())),
          G_(g1_.field(), 2 * static_cast<std::size_t>(n)),
          G0_(g1_.field(), 2 * static_cast<std::size_t>(n)) {
        if (n == 0) throw DomainError("block length must be positive");
        if (!(*g1_.field() == *g2_.field()) || !(*g1_.field() == *t_.field())) throw FieldMismatch();
        const Poly xn1 = Poly::xn_minus_1(g1_.field(), n);
        if (g1_.is_zero() || !p_divides(g1_, xn1)) throw DomainError("g1 does not divide x^n - 1");
        if (g2_.is_zero() || !p_divides(g2_, xn1)) throw DomainError("g2 does not divide x^n - 1");
        if (t_.degree() >= static_cast<long>(n)) throw DomainError("deg t must be < n");
        g1_perp_ = p_dual_gen(g1_, n);
        g2_perp_ = p_dual_gen(g2_, n);
        tbq_ = p_bar_conj(t_, n);

        const std::size_t d1 = static_cast<std::size_t>(g1_.degree());
        const std::size_t d2 = static_cast<std::size_t>(g2_.degree());
        detail::append_pair_rows(G_, t_ * g1_, g1_, n, n - d1);
        detail::append_pair_rows(G_, g2_, t_ * g2_, n, n - d2);
        detail::append_pair_rows(G0_, (tbq_ * g1_perp_).negated(), g1_perp_, n, d1);
        detail::append_pair_rows(G0_, g2_perp_, (tbq_ * g2_perp_).negated(), n, d2);
    }

    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] unsigned length() const noexcept { return 2 * n_; }
    [[nodiscard]] const FieldPtr& field() const noexcept { return g1_.field(); }
    [[nodiscard]] const Poly& g1() const noexcept { return g1_; }
    [[nodiscard]] const Poly& g2() const noexcept { return g2_; }
    [[nodiscard]] const Poly& t() const noexcept { return t_; }
    [[nodiscard]] const Poly& g1_perp() const noexcept { return g1_perp_; }
    [[nodiscard]] const Poly& g2_perp() const noexcept { return g2_perp_; }
    /// conj(bar(t)).
    [[nodiscard]] const Poly& t_bar_conj() const noexcept { return tbq_; }
    /// Generator matrix, (n - deg g1) + (n - deg g2) rows by 2n columns.
    [[nodiscard]] const Matrix& G() const noexcept { return G_; }
    /// Dual-candidate generator matrix, deg g1 + deg g2 rows by 2n columns.
    [[nodiscard]] const Matrix& G0() const noexcept { return G0_; }

    [[nodiscard]] unsigned expected_dim() const noexcept {
        return 2 * n_ - static_cast<unsigned>(g1_.degree() + g2_.degree());
    }

private:
    unsigned n_;
    Poly g1_, g2_, t_;
    Poly g1_perp_, g2_perp_, tbq_;
    Matrix G_, G0_;
};

inline QuasiCyclicCode qc_build(unsigned n, const FieldPtr& field, const Poly& g1, const Poly& g2, const Poly& t) {
    if (!(*g1.field() == *field)) throw FieldMismatch();
    return QuasiCyclicCode(n, g1, g2, t);
}

inline unsigned qc_dim(const QuasiCyclicCode& c) { return static_cast<unsigned>(c.G().rank()); }

/// rank(G) = 2n - deg g1 - deg g2 and rank(G0) = deg g1 + deg g2.
inline bool check_prop_dims(const QuasiCyclicCode& c) {
    const auto dsum = static_cast<std::size_t>(c.g1().degree() + c.g2().degree());
    return c.G().rank() == 2 * static_cast<std::size_t>(c.n()) - dsum && c.G0().rank() == dsum;
}

/// Basis of the Hermitian dual {v : G conj(v)^T = 0}.
inline Matrix hermitian_dual(const Matrix& g) {
    const Field& f = *g.field();
    // G w^T = 0 with w = conj(v); conj is an involution on GF(q^2).
    Matrix w = g.null_space();
    for (std::size_t r = 0; r < w.rows(); ++r) {
        for (auto& v : w.row(r)) v = f.conj(v);
    }
    return w;
}

/// C^{⊥h} ⊆ C for the row space C of g.
inline bool is_hermitian_dual_containing(const Matrix& g) {
    const Matrix dual = hermitian_dual(g);
    const RowSpace rs(g);
    for (std::size_t i = 0; i < dual.rows(); ++i) {
        if (!rs.contains(dual.row(i))) return false;
    }
    return true;
}

/// Ground truth by linear algebra: the Hermitian dual of the row space of G
/// lies in the row space of G.
inline bool check_dual_containing_direct(const QuasiCyclicCode& c) {
    return is_hermitian_dual_containing(c.G());
}

/// G conj(G0)^T = 0, the dimensions add up, and every row of G0 lies in the
/// row space of G. Together these certify C^{⊥h} = C0 ⊆ C. Sufficient but not
/// necessary: G0 can be rank deficient while C is still dual-containing.
inline bool check_c0_certificate(const QuasiCyclicCode& c) {
    if (!hermitian_orthogonal(c.G(), c.G0())) return false;
    if (!check_prop_dims(c)) return false;
    const RowSpace rs(c.G());
    for (std::size_t i = 0; i < c.G0().rows(); ++i) {
        if (!rs.contains(c.G0().row(i))) return false;
    }
    return true;
}

/// g1 | g1', g2 | g2', g2 | (t + tbq) g1' in the ring, and the dimension condition.
inline bool check_thm_main(const QuasiCyclicCode& c) {
    const unsigned n = c.n();
    return p_divides(c.g1(), c.g1_perp()) && p_divides(c.g2(), c.g2_perp()) &&
           ring_divides(c.g2(), (c.t() + c.t_bar_conj()) * c.g1_perp(), n) && check_prop_dims(c);
}

/// The 1-generator code spanned by ([f g], [g]) is Hermitian self-orthogonal
/// iff g' | (f conj(bar(f)) + 1) g in the ring.
inline bool check_thm_1gen(const Poly& f, const Poly& g, unsigned n) {
    const Poly xn1 = Poly::xn_minus_1(g.field(), n);
    if (g.is_zero() || !p_divides(g, xn1)) throw DomainError("g does not divide x^n - 1");
    const Poly fr = f.reduce_cyclic(n);
    const Poly factor = fr * p_bar_conj(fr, n) + Poly::one(g.field());
    return ring_divides(p_dual_gen(g, n), factor * g, n);
}

/// The divisibility part of the extended criterion: g2 | (t + tbq) g1' and
/// g_i | (t tbq + 1) g_i' for i = 1, 2 in the ring.
inline bool check_thm_extended_divisibility(const QuasiCyclicCode& c) {
    const unsigned n = c.n();
    const Poly ttb1 = c.t() * c.t_bar_conj() + Poly::one(c.field());
    return ring_divides(c.g2(), (c.t() + c.t_bar_conj()) * c.g1_perp(), n) &&
           ring_divides(c.g1(), ttb1 * c.g1_perp(), n) && ring_divides(c.g2(), ttb1 * c.g2_perp(), n);
}

/// Divisibility conditions together with the dimension condition.
inline bool check_thm_extended(const QuasiCyclicCode& c) {
    return check_thm_extended_divisibility(c) && check_prop_dims(c);
}

}  // namespace qcq
