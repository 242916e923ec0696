#pragma once

// q^2-cyclotomic cosets modulo n and defining sets built from them.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qcq/error.hpp"

namespace qcq {

struct Coset {
    unsigned rep = 0;                ///< minimal element
    std::vector<unsigned> members;   ///< orbit order rep, rep*q2, rep*q2^2, ...

    [[nodiscard]] bool contains(unsigned x) const {
        return std::find(members.begin(), members.end(), x) != members.end();
    }
};

/// Partition of {0, ..., n-1} into q2-cyclotomic cosets, sorted by representative.
inline std::vector<Coset> all_cosets(unsigned n, unsigned q2) {
    if (n == 0) throw DomainError("length must be positive");
    if (std::gcd(n, q2) != 1) {
        throw DomainError("gcd(n, q) != 1 for n=" + std::to_string(n) + ", q^2=" + std::to_string(q2));
    }
    std::vector<bool> seen(n, false);
    std::vector<Coset> out;
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        Coset c{i, {}};
        unsigned long long x = i;
        do {
            c.members.push_back(static_cast<unsigned>(x));
            seen[x] = true;
            x = (x * q2) % n;
        } while (x != i);
        out.push_back(std::move(c));
    }
    return out;
}

/// Index into `cosets` of the coset containing x.
inline std::size_t coset_index_of(const std::vector<Coset>& cosets, unsigned x) {
    for (std::size_t k = 0; k < cosets.size(); ++k) {
        if (cosets[k].contains(x)) return k;
    }
    throw DomainError("element " + std::to_string(x) + " is not covered by the cosets");
}

struct SkewClass {
    bool symmetric = false;
    unsigned partner_rep = 0;  ///< representative of C_{-q i}; equals the coset's own rep when symmetric
};

/// C_i is skew symmetric iff (n - q i) mod n lies in C_i.
inline SkewClass skew_classify(const Coset& c, unsigned n, unsigned q) {
    const unsigned image = static_cast<unsigned>((static_cast<unsigned long long>(n) - (static_cast<unsigned long long>(q) * c.rep) % n) % n);
    if (c.contains(image)) return {true, c.rep};
    const auto cosets = all_cosets(n, q * q);
    return {false, cosets[coset_index_of(cosets, image)].rep};
}

/// A union of q2-cyclotomic cosets modulo n.
class DefiningSet {
public:
    DefiningSet(unsigned n, unsigned q2) : n_(n), q2_(q2) {
        if (std::gcd(n, q2) != 1) {
            throw DomainError("gcd(n, q) != 1 for n=" + std::to_string(n) + ", q^2=" + std::to_string(q2));
        }
    }

    /// Union of the cosets C_r for r in `reps` (any member may be given).
    static DefiningSet from_reps(unsigned n, unsigned q2, const std::vector<unsigned>& reps) {
        DefiningSet t(n, q2);
        std::set<unsigned> elems;
        for (unsigned r : reps) {
            if (r >= n) throw DomainError("coset representative " + std::to_string(r) + " out of range");
            unsigned long long x = r;
            do {
                elems.insert(static_cast<unsigned>(x));
                x = (x * q2) % n;
            } while (x != r);
        }
        t.elements_.assign(elems.begin(), elems.end());
        return t;
    }

    /// Validates that `elems` is closed under multiplication by q2.
    static DefiningSet from_elements(unsigned n, unsigned q2, std::vector<unsigned> elems) {
        DefiningSet t(n, q2);
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        for (unsigned e : elems) {
            if (e >= n) throw DomainError("element " + std::to_string(e) + " out of range");
            const unsigned img = static_cast<unsigned>((static_cast<unsigned long long>(e) * q2) % n);
            if (!std::binary_search(elems.begin(), elems.end(), img)) {
                throw DomainError("set is not closed under multiplication by q^2 (missing " + std::to_string(img) + ")");
            }
        }
        t.elements_ = std::move(elems);
        return t;
    }

    [[nodiscard]] unsigned n() const noexcept { return n_; }
    [[nodiscard]] unsigned q2() const noexcept { return q2_; }
    [[nodiscard]] const std::vector<unsigned>& elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] bool contains(unsigned x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

    /// Minimal representatives of the cosets making up the set.
    [[nodiscard]] std::vector<unsigned> reps() const {
        std::vector<unsigned> out;
        for (const auto& c : all_cosets(n_, q2_)) {
            if (contains(c.rep)) out.push_back(c.rep);
        }
        return out;
    }

    /// {(-q t) mod n : t in T}.
    [[nodiscard]] std::vector<unsigned> negated_q_image(unsigned q) const {
        std::vector<unsigned> out;
        out.reserve(elements_.size());
        for (unsigned t : elements_) {
            const auto qt = (static_cast<unsigned long long>(q) * t) % n_;
            out.push_back(static_cast<unsigned>((n_ - qt) % n_));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) {
        return a.n_ == b.n_ && a.q2_ == b.q2_ && a.elements_ == b.elements_;
    }

private:
    unsigned n_, q2_;
    std::vector<unsigned> elements_;
};

/// T ∩ T^{-q} = ∅. For a coset-closed T this also rules out skew-asymmetric
/// pairs inside T.
inline bool ds_dual_containing(const DefiningSet& t, unsigned q) {
    if (q * q != t.q2()) throw DomainError("q does not match the defining set's q^2");
    const auto img = t.negated_q_image(q);
    // The image of a coset union is again a coset union.
    for (unsigned e : img) {
        const unsigned next = static_cast<unsigned>((static_cast<unsigned long long>(e) * t.q2()) % t.n());
        if (!std::binary_search(img.begin(), img.end(), next)) throw InternalError("T^{-q} is not coset-closed");
    }
    return std::none_of(img.begin(), img.end(), [&](unsigned e) { return t.contains(e); });
}

}  // namespace qcq
