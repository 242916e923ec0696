#pragma once

// Extension fields GF(p^M) large enough to contain an n-th root of unity
// over a base field GF(q^2). Elements are coefficient vectors over GF(p) in
// the polynomial basis of the Conway polynomial; only the powers of the root
// of unity and the image of the base field are tabulated.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qcq/error.hpp"
#include "qcq/field.hpp"

namespace qcq {

using ExtElem = std::vector<std::uint8_t>;

class ExtensionField {
public:
    ExtensionField(unsigned p, unsigned degree) : p_(p), m_(degree) {
        auto c = detail::conway_polynomial(p, degree);
        if (!c) {
            throw DomainError("no Conway polynomial tabulated for GF(" + std::to_string(p) + "^" +
                              std::to_string(degree) + ")");
        }
        modulus_ = std::move(*c);
    }

    [[nodiscard]] unsigned characteristic() const noexcept { return p_; }
    [[nodiscard]] unsigned degree() const noexcept { return m_; }
    [[nodiscard]] boost::multiprecision::cpp_int order() const {
        return boost::multiprecision::pow(boost::multiprecision::cpp_int(p_), m_);
    }

    [[nodiscard]] ExtElem zero() const { return ExtElem(m_, 0); }
    [[nodiscard]] ExtElem one() const {
        ExtElem e(m_, 0);
        e[0] = 1;
        return e;
    }
    /// The Conway root, a primitive element.
    [[nodiscard]] ExtElem generator() const {
        ExtElem e(m_, 0);
        if (m_ == 1) {
            e[0] = static_cast<std::uint8_t>((p_ - modulus_[0]) % p_);
        } else {
            e[1] = 1;
        }
        return e;
    }

    [[nodiscard]] ExtElem add(const ExtElem& a, const ExtElem& b) const {
        ExtElem r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p_);
        return r;
    }
    [[nodiscard]] ExtElem sub(const ExtElem& a, const ExtElem& b) const {
        ExtElem r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<std::uint8_t>((a[i] + p_ - b[i]) % p_);
        return r;
    }
    [[nodiscard]] ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        std::vector<unsigned> t(2 * m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p_;
        }
        for (unsigned i = 2 * m_ - 1; i >= m_; --i) {
            const unsigned c = t[i];
            if (c == 0) continue;
            t[i] = 0;
            for (unsigned j = 0; j < m_; ++j) t[i - m_ + j] = (t[i - m_ + j] + (p_ - modulus_[j]) * c) % p_;
        }
        ExtElem r(m_);
        for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<std::uint8_t>(t[i]);
        return r;
    }
    [[nodiscard]] ExtElem pow(ExtElem base, boost::multiprecision::cpp_int e) const {
        ExtElem r = one();
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    [[nodiscard]] static bool is_zero(const ExtElem& a) {
        return std::all_of(a.begin(), a.end(), [](std::uint8_t v) { return v == 0; });
    }

private:
    unsigned p_, m_;
    std::vector<std::uint8_t> modulus_;
};

/// GF(q^{2s}) with s minimal such that q^{2s} = 1 (mod n), the embedding of
/// the base field and a primitive n-th root of unity zeta.
class SplittingField {
public:
    SplittingField(FieldPtr base, unsigned n);

    [[nodiscard]] const FieldPtr& base() const noexcept { return base_; }
    [[nodiscard]] const ExtensionField& ext() const noexcept { return ext_; }
    [[nodiscard]] unsigned n() const noexcept { return n_; }
    /// Extension degree over the base field.
    [[nodiscard]] unsigned s() const noexcept { return s_; }

    /// zeta^i for any integer i.
    [[nodiscard]] const ExtElem& zeta_pow(long long i) const {
        const long long r = ((i % n_) + n_) % n_;
        return zeta_pows_[static_cast<std::size_t>(r)];
    }
    [[nodiscard]] const ExtElem& embed(std::uint8_t a) const { return embed_.at(a); }
    /// Base-field preimage of an extension element, if it lies in the image.
    [[nodiscard]] std::optional<std::uint8_t> project(const ExtElem& e) const {
        auto it = project_.find(e);
        if (it == project_.end()) return std::nullopt;
        return it->second;
    }

private:
    FieldPtr base_;
    unsigned n_, s_;
    ExtensionField ext_;
    std::vector<ExtElem> zeta_pows_;
    std::vector<ExtElem> embed_;
    std::map<ExtElem, std::uint8_t> project_;
};

namespace detail {
inline unsigned multiplicative_order_mod(unsigned long long a, unsigned n) {
    if (n == 1) return 1;
    unsigned s = 1;
    unsigned long long x = a % n;
    while (x != 1) {
        x = (x * (a % n)) % n;
        ++s;
        if (s > n) throw DomainError("element is not invertible modulo " + std::to_string(n));
    }
    return s;
}
}  // namespace detail

inline SplittingField::SplittingField(FieldPtr base, unsigned n)
    : base_(std::move(base)),
      n_(n),
      s_(0),
      ext_([&] {
          if (n == 0) throw DomainError("length must be positive");
          if (std::gcd(n, base_->characteristic()) != 1) {
              throw DomainError("gcd(n, p) != 1 for n=" + std::to_string(n) + " over " + base_->name());
          }
          s_ = detail::multiplicative_order_mod(base_->order(), n);
          return ExtensionField(base_->characteristic(), base_->degree() * s_);
      }()) {
    using boost::multiprecision::cpp_int;
    const cpp_int big_order = ext_.order();
    const ExtElem gen = ext_.generator();

    const ExtElem zeta = ext_.pow(gen, (big_order - 1) / n_);
    zeta_pows_.reserve(n_);
    ExtElem cur = ext_.one();
    for (unsigned i = 0; i < n_; ++i) {
        zeta_pows_.push_back(cur);
        cur = ext_.mul(cur, zeta);
    }
    if (cur != ext_.one()) throw InternalError("zeta^n != 1");

    // Conway compatibility puts the base generator at gen^((N-1)/(Q-1)).
    const unsigned Q = base_->order();
    const ExtElem beta = ext_.pow(gen, (big_order - 1) / (Q - 1));
    embed_.assign(Q, ext_.zero());
    ExtElem b = ext_.one();
    for (unsigned k = 1; k < Q; ++k) {
        embed_[k] = b;
        b = ext_.mul(b, beta);
    }
    // Verify that beta is a root of the base field's defining polynomial.
    ExtElem acc = ext_.zero();
    const auto conway = base_->defining_polynomial();
    for (std::size_t i = conway.size(); i-- > 0;) {
        acc = ext_.mul(acc, beta);
        ExtElem c = ext_.zero();
        c[0] = conway[i];
        acc = ext_.add(acc, c);
    }
    if (!ExtensionField::is_zero(acc)) throw InternalError("Conway polynomials are not compatible");
    for (unsigned k = 0; k < Q; ++k) project_.emplace(embed_[k], static_cast<std::uint8_t>(k));
}

/// Cached splitting field for (base, n).
inline std::shared_ptr<const SplittingField> splitting_field(unsigned n, const FieldPtr& base) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const SplittingField>> cache;
    const auto key = std::make_pair(base->order(), n);
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto sf = std::make_shared<const SplittingField>(base, n);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(sf)).first->second;
}

}  // namespace qcq
