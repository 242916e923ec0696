#pragma once

// Polynomials over a small field and the quotient ring F[x]/(x^n - 1).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcq/error.hpp"
#include "qcq/field.hpp"

namespace qcq {

/// Coefficient vector in ascending degree order. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<std::uint8_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (auto v : c_) {
            if (v >= field_->order()) throw DomainError("coefficient out of range for " + field_->name());
        }
        trim();
    }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly constant(FieldPtr f, std::uint8_t c) { return Poly(std::move(f), {c}); }
    static Poly one(FieldPtr f) { return constant(std::move(f), 1); }
    static Poly monomial(FieldPtr f, std::size_t degree, std::uint8_t c = 1) {
        std::vector<std::uint8_t> v(degree + 1, 0);
        v[degree] = c;
        return Poly(std::move(f), std::move(v));
    }
    /// x^n - 1.
    static Poly xn_minus_1(FieldPtr f, std::size_t n) {
        std::vector<std::uint8_t> v(n + 1, 0);
        v[0] = f->neg(1);
        v[n] = 1;
        return Poly(std::move(f), std::move(v));
    }

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] const Field& F() const noexcept { return *field_; }
    [[nodiscard]] const std::vector<std::uint8_t>& coeffs() const noexcept { return c_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] std::uint8_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] std::uint8_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    [[nodiscard]] bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// Coefficients padded or truncated to exactly n entries (no reduction).
    [[nodiscard]] std::vector<std::uint8_t> to_vector(std::size_t n) const {
        std::vector<std::uint8_t> v(n, 0);
        std::copy_n(c_.begin(), std::min(n, c_.size()), v.begin());
        return v;
    }

    [[nodiscard]] Poly scaled(std::uint8_t s) const {
        std::vector<std::uint8_t> v(c_.size());
        const auto* row = field_->mul_row(s);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = row[c_[i]];
        return Poly(field_, std::move(v));
    }
    [[nodiscard]] Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field_->inv(lead()));
    }
    [[nodiscard]] Poly negated() const { return scaled(field_->neg(1)); }

    /// Folds exponent i onto i mod n, i.e. reduces modulo x^n - 1.
    [[nodiscard]] Poly reduce_cyclic(std::size_t n) const {
        if (c_.size() <= n) return *this;
        std::vector<std::uint8_t> v(n, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i % n] = field_->add(v[i % n], c_[i]);
        return Poly(field_, std::move(v));
    }

    /// Evaluates at a field element.
    [[nodiscard]] std::uint8_t eval(std::uint8_t x) const {
        std::uint8_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return *a.field_ == *b.field_ && a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const Field& f = *a.field_;
        std::vector<std::uint8_t> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            const auto* row = f.mul_row(a.c_[i]);
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], row[b.c_[j]]);
        }
        return Poly(a.field_, std::move(v));
    }

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (b.is_zero()) throw DivisionByZero();
        const Field& f = *a.field_;
        if (a.degree() < b.degree()) return {Poly(a.field_), a};
        std::vector<std::uint8_t> r = a.c_;
        std::vector<std::uint8_t> q(a.c_.size() - b.c_.size() + 1, 0);
        const std::uint8_t inv_lead = f.inv(b.lead());
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = r.size(); i-- > db;) {
            if (r[i] == 0) continue;
            const std::uint8_t c = f.mul(r[i], inv_lead);
            q[i - db] = c;
            const auto* row = f.mul_row(c);
            for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], row[b.c_[j]]);
        }
        return {Poly(a.field_, std::move(q)), Poly(a.field_, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

private:
    static void check_same(const Poly& a, const Poly& b) {
        if (!(*a.field_ == *b.field_)) throw FieldMismatch();
    }
    static Poly combine(const Poly& a, const Poly& b, bool subtract) {
        check_same(a, b);
        const Field& f = *a.field_;
        std::vector<std::uint8_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = subtract ? f.sub(a.coeff(i), b.coeff(i)) : f.add(a.coeff(i), b.coeff(i));
        }
        return Poly(a.field_, std::move(v));
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<std::uint8_t> c_;
};

// ---------------------------------------------------------------------------
// Compressed notation: coefficients in ascending order, one symbol each, with
// runs written as SYMBOL^COUNT (single digit) or SYMBOL^{COUNT}.
// Whitespace is ignored.

enum class RunStyle {
    compact,  ///< "0^2", braces only for counts >= 10
    braced,   ///< "0^{2}" everywhere
};

inline Poly p_parse(std::string_view s, const FieldPtr& field) {
    std::vector<std::uint8_t> v;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw ParseError("empty polynomial string", i);
    while (i < s.size()) {
        const auto sym = field->parse_symbol(s[i]);
        if (!sym) throw ParseError(std::string("unknown symbol '") + s[i] + "' for " + field->name(), i);
        ++i;
        skip_ws();
        std::size_t count = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_ws();
            if (i < s.size() && s[i] == '{') {
                ++i;
                skip_ws();
                const std::size_t start = i;
                count = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    count = count * 10 + static_cast<std::size_t>(s[i] - '0');
                    if (count > 1'000'000) throw ParseError("run length too large", start);
                    ++i;
                }
                if (i == start) throw ParseError("expected run length after '^{'", i);
                skip_ws();
                if (i >= s.size() || s[i] != '}') throw ParseError("expected '}'", i);
                ++i;
                if (count < 2) throw ParseError("run length must be at least 2", start);
            } else {
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
                    throw ParseError("expected run length after '^'", i);
                }
                count = static_cast<std::size_t>(s[i] - '0');
                if (count < 2) throw ParseError("run length must be at least 2", i);
                ++i;
            }
        }
        v.insert(v.end(), count, *sym);
        skip_ws();
    }
    return Poly(field, std::move(v));
}

inline std::string p_format(const Poly& p, RunStyle style = RunStyle::compact) {
    if (p.is_zero()) return "0";
    const auto& c = p.coeffs();
    std::string out;
    for (std::size_t i = 0; i < c.size();) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        const std::size_t run = j - i;
        out += p.F().symbol(c[i]);
        if (run >= 2) {
            if (style == RunStyle::compact && run < 10) {
                out += '^';
                out += std::to_string(run);
            } else {
                out += "^{" + std::to_string(run) + "}";
            }
        }
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ring operations.

/// a*b mod (x^n - 1); both inputs must already have degree < n.
inline Poly p_mul_mod(const Poly& a, const Poly& b, std::size_t n) {
    if (n == 0) throw DomainError("ring length must be positive");
    if (a.degree() >= static_cast<long>(n) || b.degree() >= static_cast<long>(n)) {
        throw DomainError("operand degree must be < n=" + std::to_string(n));
    }
    return (a * b).reduce_cyclic(n);
}

/// Monic gcd.
inline Poly p_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic lcm.
inline Poly p_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("lcm with the zero polynomial is undefined");
    return ((a * b) / p_gcd(a, b)).monic();
}

/// True iff a divides b.
inline bool p_divides(const Poly& a, const Poly& b) {
    if (a.is_zero()) throw DomainError("divisibility by the zero polynomial is undefined");
    return (b % a).is_zero();
}

/// g_0 + g_{n-1} x + ... + g_1 x^{n-1}.
inline Poly p_bar(const Poly& g, std::size_t n) {
    if (g.degree() >= static_cast<long>(n)) throw DomainError("degree must be < n=" + std::to_string(n));
    std::vector<std::uint8_t> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i] = g.coeff((n - i) % n);
    return Poly(g.field(), std::move(v));
}

/// Coefficientwise conjugation a -> a^q.
inline Poly p_conj(const Poly& g) {
    std::vector<std::uint8_t> v(g.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.F().conj(g.coeffs()[i]);
    return Poly(g.field(), std::move(v));
}

/// t -> conj(bar(t)).
inline Poly p_bar_conj(const Poly& t, std::size_t n) { return p_conj(p_bar(t, n)); }

/// Monic generator of the Hermitian dual of the cyclic code <g>.
inline Poly p_dual_gen(const Poly& g, std::size_t n) {
    const Poly xn1 = Poly::xn_minus_1(g.field(), n);
    if (g.is_zero()) throw DomainError("zero polynomial does not divide x^n - 1");
    auto [h, r] = divmod(xn1, g);
    if (!r.is_zero()) throw DomainError("generator does not divide x^n - 1");
    std::vector<std::uint8_t> rev(h.coeffs().rbegin(), h.coeffs().rend());
    return p_conj(Poly(g.field(), std::move(rev))).monic();
}

/// Monic generator gcd(f mod (x^n - 1), x^n - 1) of the ideal <f> in the ring.
/// The zero element generates the zero ideal, represented by x^n - 1.
inline Poly ideal_generator(const Poly& f, std::size_t n) {
    const Poly xn1 = Poly::xn_minus_1(f.field(), n);
    const Poly r = f.reduce_cyclic(n);
    if (r.is_zero()) return xn1;
    return p_gcd(r, xn1);
}

/// Ideal-membership reading of "a | b" for ring elements: b is reduced modulo
/// x^n - 1, then a must divide gcd(b, x^n - 1). A zero dividend always passes.
inline bool ring_divides(const Poly& a, const Poly& b, std::size_t n) {
    const Poly r = b.reduce_cyclic(n);
    if (r.is_zero()) return true;
    return p_divides(a, p_gcd(r, Poly::xn_minus_1(a.field(), n)));
}

}  // namespace qcq
