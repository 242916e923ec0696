#pragma once

// Quantum parameters from Hermitian dual-containing codes, propagation rules
// for pure codes, and the quantum Gilbert-Varshamov bound in exact integers.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcq/error.hpp"
#include "qcq/qc.hpp"

namespace qcq {

using BigInt = boost::multiprecision::cpp_int;

enum class QuantumDistance { exact, lower_bound };

inline const char* to_string(QuantumDistance s) { return s == QuantumDistance::exact ? "exact" : "lower_bound"; }

/// [[n, k, d]]_q
struct QuantumParams {
    unsigned n = 0;
    unsigned k = 0;
    unsigned d = 0;
    unsigned q = 0;
    QuantumDistance d_status = QuantumDistance::exact;
    bool pure = true;

    friend bool operator==(const QuantumParams& a, const QuantumParams& b) {
        return std::tie(a.n, a.k, a.d, a.q) == std::tie(b.n, b.k, b.d, b.q);
    }
    friend bool operator<(const QuantumParams& a, const QuantumParams& b) {
        return std::tie(a.q, a.d, a.n, a.k) < std::tie(b.q, b.d, b.n, b.k);
    }
};

inline std::string to_string(const QuantumParams& p) {
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]]_" + std::to_string(p.q);
}

inline std::string to_string(const CodeParams& c, unsigned field_order) {
    return "[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.d) + "]_" + std::to_string(field_order);
}

/// Dual-containing [n, k, d]_{q^2} gives a pure [[n, 2k - n, d]]_q.
inline QuantumParams hermitian_construct(const CodeParams& c, bool certified_dual_containing, unsigned q) {
    if (!certified_dual_containing) throw DomainError("code is not certified Hermitian dual-containing");
    if (2 * c.k < c.n) throw DomainError("k < n/2 gives a negative logical dimension");
    QuantumParams p;
    p.n = c.n;
    p.k = 2 * c.k - c.n;
    p.d = c.d;
    p.q = q;
    p.d_status = c.d_status == DistanceStatus::exact ? QuantumDistance::exact : QuantumDistance::lower_bound;
    return p;
}

/// One-step derivatives: [[n, k-1, d]] for k >= 1 and [[n+1, k, d]] for k > 0.
inline std::vector<QuantumParams> propagate(const QuantumParams& p) {
    if (!p.pure) throw DomainError("propagation rules are stated for pure codes");
    std::vector<QuantumParams> out;
    if (p.k >= 1) {
        QuantumParams a = p;
        a.k = p.k - 1;
        out.push_back(a);
    }
    if (p.k > 0) {
        QuantumParams b = p;
        b.n = p.n + 1;
        out.push_back(b);
    }
    return out;
}

/// Shortest chain of propagation steps from one of `base` to `target`, both
/// ends included; empty if unreachable. The search never leaves n <= target.n
/// and k >= target.k, since neither rule can come back.
inline std::vector<QuantumParams> propagation_path(const std::vector<QuantumParams>& base, const QuantumParams& target) {
    std::map<QuantumParams, QuantumParams> parent;
    std::deque<QuantumParams> queue;
    for (const auto& b : base) {
        if (b.q != target.q || b.d != target.d || b.n > target.n || b.k < target.k) continue;
        if (parent.emplace(b, b).second) queue.push_back(b);
    }
    while (!queue.empty()) {
        const QuantumParams cur = queue.front();
        queue.pop_front();
        if (cur == target) {
            std::vector<QuantumParams> path{cur};
            QuantumParams x = cur;
            while (!(parent.at(x) == x)) {
                x = parent.at(x);
                path.push_back(x);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const auto& nx : propagate(cur)) {
            if (nx.n > target.n || nx.k < target.k) continue;
            if (parent.emplace(nx, cur).second) queue.push_back(nx);
        }
    }
    return {};
}

/// Every code reachable from `base` in at most `steps` propagation steps.
inline std::vector<QuantumParams> propagation_closure(const std::vector<QuantumParams>& base, unsigned steps) {
    std::map<QuantumParams, unsigned> seen;
    std::deque<QuantumParams> queue;
    for (const auto& b : base) {
        if (seen.emplace(b, 0).second) queue.push_back(b);
    }
    while (!queue.empty()) {
        const QuantumParams cur = queue.front();
        queue.pop_front();
        const unsigned depth = seen.at(cur);
        if (depth == steps) continue;
        for (const auto& nx : propagate(cur)) {
            if (seen.emplace(nx, depth + 1).second) queue.push_back(nx);
        }
    }
    std::vector<QuantumParams> out;
    for (const auto& [p, depth] : seen) out.push_back(p);
    return out;
}

inline BigInt big_pow(unsigned base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// sum_{i=1}^{d-1} (q^2 - 1)^{i-1} C(n, i)
inline BigInt gv_rhs(unsigned n, unsigned d, unsigned q) {
    BigInt s = 0;
    BigInt pw = 1;
    for (unsigned i = 1; i + 1 <= d; ++i) {
        s += pw * binomial(n, i);
        pw *= q * q - 1;
    }
    return s;
}

/// Both sides of the bound at k', scaled by q^2 - 1 so they are integers:
/// q^{n-k'+2} - 1 versus (q^2 - 1) * rhs.
struct GvSides {
    unsigned k = 0;
    BigInt lhs_scaled;
    BigInt rhs_scaled;
    BigInt rhs;
    [[nodiscard]] bool holds() const { return lhs_scaled > rhs_scaled; }
};

inline GvSides gv_sides(unsigned n, unsigned k, unsigned d, unsigned q) {
    if (k > n + 2) throw DomainError("k out of range");
    GvSides s;
    s.k = k;
    s.rhs = gv_rhs(n, d, q);
    s.lhs_scaled = big_pow(q, n - k + 2) - 1;
    s.rhs_scaled = s.rhs * (q * q - 1);
    return s;
}

/// Largest k' in [2, n) with k' = n (mod 2) for which the bound promises an
/// [[n, k', d]]_q code; 0 when none does. The left side shrinks as k' grows,
/// so the qualifying k' form a downward-closed set.
inline unsigned gv_kmax(unsigned n, unsigned d, unsigned q) {
    if (n <= 2) throw DomainError("gv_kmax needs n > 2");
    if (d < 2) throw DomainError("gv_kmax needs d >= 2");
    if (q < 2) throw DomainError("q must be at least 2");
    const BigInt rhs_scaled = gv_rhs(n, d, q) * (q * q - 1);
    unsigned lo = (n % 2 == 0) ? 2 : 3;
    if (lo >= n) return 0;
    if (!(big_pow(q, n - lo + 2) - 1 > rhs_scaled)) return 0;
    unsigned hi = n - 2;  // largest candidate of the right parity
    // Binary search over candidates lo, lo + 2, ..., hi.
    unsigned a = 0, b = (hi - lo) / 2;
    while (a < b) {
        const unsigned mid = (a + b + 1) / 2;
        const unsigned k = lo + 2 * mid;
        if (big_pow(q, n - k + 2) - 1 > rhs_scaled) {
            a = mid;
        } else {
            b = mid - 1;
        }
    }
    return lo + 2 * a;
}

struct GvVerdict {
    unsigned k_gv = 0;
    bool beats = false;
    bool vacuous = false;  ///< the bound promises nothing for these (n, d)
};

inline GvVerdict gv_verdict(const QuantumParams& p) {
    GvVerdict v;
    v.k_gv = gv_kmax(p.n, p.d, p.q);
    v.vacuous = v.k_gv == 0;
    v.beats = p.k >= v.k_gv;
    return v;
}

/// k >= k_GV.
inline bool beats_gv(const QuantumParams& p) { return gv_verdict(p).beats; }

}  // namespace qcq
