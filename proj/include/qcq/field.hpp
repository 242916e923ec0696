#pragma once

// Small finite fields GF(p^m) with table arithmetic.
//
// Elements are addressed by index: 0 is the additive zero and index k >= 1
// denotes gamma^(k-1), where gamma is the root of the Conway polynomial of
// GF(p^m). With that convention index 1 is the multiplicative one and the
// symbol alphabet "0123456789ABC..." reads straight off the index.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcq/conway_table.hpp"
#include "qcq/error.hpp"

namespace qcq {

namespace detail {

inline constexpr std::string_view kAlphabet =
    "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Returns (p, m) if `order` is a prime power p^m, otherwise nullopt.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned long long order) {
    if (order < 2) return std::nullopt;
    unsigned long long p = 0;
    for (unsigned long long d = 2; d * d <= order; ++d) {
        if (order % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair<unsigned, unsigned>{static_cast<unsigned>(order), 1u};
    unsigned m = 0;
    while (order % p == 0) {
        order /= p;
        ++m;
    }
    if (order != 1) return std::nullopt;
    return std::pair<unsigned, unsigned>{static_cast<unsigned>(p), m};
}

/// Conway polynomial of GF(p^m), ascending coefficients, or nullopt if not tabulated.
inline std::optional<std::vector<std::uint8_t>> conway_polynomial(unsigned p, unsigned m) {
    for (const auto& e : kConwayTable) {
        if (static_cast<unsigned>(e.p) == p && static_cast<unsigned>(e.m) == m) {
            std::vector<std::uint8_t> c;
            c.reserve(e.coeffs.size());
            for (char ch : e.coeffs) c.push_back(static_cast<std::uint8_t>(ch - '0'));
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with order <= 256, immutable after construction.
class Field {
public:
    static constexpr unsigned kMaxOrder = 256;

    /// Builds (or fetches the cached) field of the given order.
    static FieldPtr make(unsigned order);

    [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
    [[nodiscard]] unsigned degree() const noexcept { return m_; }
    [[nodiscard]] unsigned order() const noexcept { return order_; }
    /// Defining (Conway) polynomial over GF(p), ascending coefficients, monic.
    [[nodiscard]] std::span<const std::uint8_t> defining_polynomial() const noexcept { return conway_; }

    /// True when the field is GF(q^2) for some q, i.e. conjugation is defined.
    [[nodiscard]] bool is_quadratic() const noexcept { return m_ % 2 == 0; }
    /// sqrt(order) for GF(q^2); throws otherwise.
    [[nodiscard]] unsigned q() const {
        if (!is_quadratic()) throw DomainError("field GF(" + std::to_string(order_) + ") is not of the form GF(q^2)");
        return q_;
    }

    [[nodiscard]] std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * order_ + b]; }
    [[nodiscard]] std::uint8_t sub(std::uint8_t a, std::uint8_t b) const noexcept { return sub_[a * order_ + b]; }
    [[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * order_ + b]; }
    [[nodiscard]] std::uint8_t neg(std::uint8_t a) const noexcept { return neg_[a]; }
    [[nodiscard]] std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw DivisionByZero();
        return inv_[a];
    }
    [[nodiscard]] std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }
    /// a -> a^q on GF(q^2).
    [[nodiscard]] std::uint8_t conj(std::uint8_t a) const {
        if (!is_quadratic()) (void)q();
        return conj_[a];
    }
    /// Row of the multiplication table: mul_row(a)[b] == mul(a, b).
    [[nodiscard]] const std::uint8_t* mul_row(std::uint8_t a) const noexcept { return &mul_[a * order_]; }
    [[nodiscard]] const std::uint8_t* add_row(std::uint8_t a) const noexcept { return &add_[a * order_]; }

    /// gamma^e for any integer e.
    [[nodiscard]] std::uint8_t from_exponent(long long e) const noexcept {
        const long long r = static_cast<long long>(order_) - 1;
        return static_cast<std::uint8_t>(((e % r) + r) % r + 1);
    }
    /// Discrete log of a nonzero element.
    [[nodiscard]] unsigned exponent(std::uint8_t a) const {
        if (a == 0) throw DivisionByZero();
        return a - 1u;
    }
    [[nodiscard]] std::uint8_t pow(std::uint8_t a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw DivisionByZero();
            return 0;
        }
        return from_exponent(static_cast<long long>(exponent(a)) * (e % (static_cast<long long>(order_) - 1)));
    }

    /// Coordinates over GF(p) in the polynomial basis 1, gamma, ..., gamma^(m-1).
    [[nodiscard]] std::span<const std::uint8_t> digits(std::uint8_t a) const noexcept {
        return {&digits_[static_cast<std::size_t>(a) * m_], m_};
    }
    /// Inverse of digits().
    [[nodiscard]] std::uint8_t from_digits(std::span<const std::uint8_t> d) const;

    /// Image of the prime-field integer v (0 <= v < p).
    [[nodiscard]] std::uint8_t from_int(unsigned v) const { return prime_[v % p_]; }

    [[nodiscard]] char symbol(std::uint8_t a) const { return detail::kAlphabet.at(a); }
    [[nodiscard]] std::optional<std::uint8_t> parse_symbol(char c) const noexcept {
        const auto pos = detail::kAlphabet.substr(0, order_).find(c);
        if (pos == std::string_view::npos) return std::nullopt;
        return static_cast<std::uint8_t>(pos);
    }
    [[nodiscard]] std::string alphabet() const { return std::string(detail::kAlphabet.substr(0, order_)); }

    [[nodiscard]] std::string name() const { return "GF(" + std::to_string(order_) + ")"; }

    bool operator==(const Field& o) const noexcept { return order_ == o.order_; }

    Field(unsigned p, unsigned m, std::vector<std::uint8_t> conway);

private:
    unsigned p_, m_, order_, q_ = 0;
    std::vector<std::uint8_t> conway_;
    std::vector<std::uint8_t> add_, sub_, mul_, neg_, inv_, conj_, digits_, prime_;
    std::vector<std::uint8_t> code_to_index_;
};

inline Field::Field(unsigned p, unsigned m, std::vector<std::uint8_t> conway)
    : p_(p), m_(m), order_(1), conway_(std::move(conway)) {
    for (unsigned i = 0; i < m; ++i) order_ *= p;
    const unsigned n = order_;
    if (m % 2 == 0) {
        q_ = 1;
        for (unsigned i = 0; i < m / 2; ++i) q_ *= p;
    }

    // Walk gamma^e by repeated multiplication by x modulo the defining polynomial.
    digits_.assign(static_cast<std::size_t>(n) * m, 0);
    code_to_index_.assign(n, 0xFF);
    auto code_of = [&](const std::vector<unsigned>& v) {
        unsigned c = 0;
        for (unsigned i = m; i-- > 0;) c = c * p + v[i];
        return c;
    };
    std::vector<unsigned> cur(m, 0);
    cur[0] = 1;
    code_to_index_[0] = 0;
    for (unsigned e = 0; e + 1 < n; ++e) {
        const unsigned code = code_of(cur);
        if (code_to_index_[code] != 0xFF) throw InternalError("defining polynomial of " + name() + " is not primitive");
        code_to_index_[code] = static_cast<std::uint8_t>(e + 1);
        for (unsigned i = 0; i < m; ++i) digits_[static_cast<std::size_t>(e + 1) * m + i] = static_cast<std::uint8_t>(cur[i]);
        const unsigned top = cur[m - 1];
        for (unsigned i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (unsigned i = 0; i < m; ++i) cur[i] = (cur[i] + (p - conway_[i]) * top) % p;
    }

    add_.resize(static_cast<std::size_t>(n) * n);
    sub_.resize(static_cast<std::size_t>(n) * n);
    mul_.resize(static_cast<std::size_t>(n) * n);
    neg_.resize(n);
    inv_.resize(n);
    conj_.resize(n);
    std::vector<unsigned> t(m);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned i = 0; i < m; ++i) t[i] = (digits_[a * m + i] + digits_[b * m + i]) % p;
            add_[a * n + b] = code_to_index_[code_of(t)];
            for (unsigned i = 0; i < m; ++i) t[i] = (digits_[a * m + i] + p - digits_[b * m + i]) % p;
            sub_[a * n + b] = code_to_index_[code_of(t)];
            mul_[a * n + b] = (a == 0 || b == 0) ? 0 : from_exponent(static_cast<long long>(a - 1) + (b - 1));
        }
        neg_[a] = sub_[0 * n + a];
        inv_[a] = a == 0 ? 0 : from_exponent(-static_cast<long long>(a - 1));
        conj_[a] = (a == 0 || q_ == 0) ? static_cast<std::uint8_t>(a)
                                       : from_exponent(static_cast<long long>(a - 1) * q_);
    }
    prime_.resize(p);
    for (unsigned v = 0; v < p; ++v) {
        std::fill(t.begin(), t.end(), 0u);
        t[0] = v;
        prime_[v] = code_to_index_[code_of(t)];
    }
}

inline std::uint8_t Field::from_digits(std::span<const std::uint8_t> d) const {
    unsigned c = 0;
    for (unsigned i = m_; i-- > 0;) c = c * p_ + (i < d.size() ? d[i] % p_ : 0u);
    return code_to_index_[c];
}

inline FieldPtr Field::make(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, FieldPtr> cache;
    const auto pm = detail::prime_power(order);
    if (!pm) throw DomainError(std::to_string(order) + " is not a prime power");
    if (order > kMaxOrder) throw DomainError("GF(" + std::to_string(order) + ") exceeds the table-field limit of 256 elements");
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    auto conway = detail::conway_polynomial(pm->first, pm->second);
    if (!conway) throw DomainError("no Conway polynomial tabulated for GF(" + std::to_string(order) + ")");
    auto f = std::make_shared<const Field>(pm->first, pm->second, std::move(*conway));
    cache.emplace(order, f);
    return f;
}

/// Convenience alias matching the library's operation naming.
inline FieldPtr field_make(unsigned order) { return Field::make(order); }

/// A field element bound to its field; arithmetic across different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, std::uint8_t value) : field_(std::move(field)), value_(value) {
        if (value_ >= field_->order()) throw DomainError("element index out of range for " + field_->name());
    }

    [[nodiscard]] std::uint8_t value() const noexcept { return value_; }
    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }
    [[nodiscard]] char symbol() const { return field_->symbol(value_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return *a.field_ == *b.field_ && a.value_ == b.value_;
    }

private:
    FieldPtr field_;
    std::uint8_t value_;
};

namespace detail {
inline const Field& common_field(const FieldElement& a, const FieldElement& b) {
    if (!(*a.field() == *b.field())) throw FieldMismatch();
    return *a.field();
}
}  // namespace detail

inline FieldElement f_add(const FieldElement& a, const FieldElement& b) {
    return {a.field(), detail::common_field(a, b).add(a.value(), b.value())};
}
inline FieldElement f_sub(const FieldElement& a, const FieldElement& b) {
    return {a.field(), detail::common_field(a, b).sub(a.value(), b.value())};
}
inline FieldElement f_mul(const FieldElement& a, const FieldElement& b) {
    return {a.field(), detail::common_field(a, b).mul(a.value(), b.value())};
}
inline FieldElement f_inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.value())}; }
inline FieldElement f_conj(const FieldElement& a) { return {a.field(), a.field()->conj(a.value())}; }

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return f_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return f_sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return f_mul(a, b); }

}  // namespace qcq
