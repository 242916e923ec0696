#pragma once

// Minimum distance of linear codes over GF(q^2).
//
//   dmin_exhaustive   full enumeration of the projective message space
//   dmin_bz           Brouwer-Zimmermann with disjoint information sets
//   dmin_dependency   smallest linearly dependent set of parity-check columns
//   low_weight_search random information sets, upper bounds only
//   dmin_auto         picks among the above
//
// Results are intervals [lower, upper]; they are exact when the two meet.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qcq/cyclic.hpp"
#include "qcq/error.hpp"
#include "qcq/matrix.hpp"
#include "qcq/poly.hpp"
#include "qcq/qc.hpp"
#include "qcq/rng.hpp"

namespace qcq {

inline constexpr unsigned kInfiniteDistance = std::numeric_limits<unsigned>::max();

struct DistanceResult {
    unsigned lower = 1;
    unsigned upper = kInfiniteDistance;
    std::uint64_t work = 0;
    std::string method;
    bool timed_out = false;
    std::vector<std::uint8_t> witness;  ///< a codeword of weight `upper`, when one is known

    [[nodiscard]] bool exact() const noexcept { return lower == upper; }
};

struct DistanceProgress {
    std::string_view method;
    unsigned level = 0;
    unsigned lower = 0;
    unsigned upper = 0;
    std::uint64_t work = 0;
    double seconds = 0;
};
using ProgressHook = std::function<void(const DistanceProgress&)>;

/// Column symmetries a search may exploit. quasi_cyclic2 means the code is
/// invariant under shifting both halves of a length-2n word simultaneously.
enum class Symmetry { none, cyclic, quasi_cyclic2 };

struct DistanceOptions {
    unsigned threads = 0;        ///< 0: hardware concurrency
    double time_budget = 0;      ///< seconds, 0: unlimited
    unsigned cap = kInfiniteDistance;  ///< stop once d > cap is certain
    ProgressHook progress;
};

namespace detail {

class Deadline {
public:
    explicit Deadline(double seconds) : start_(std::chrono::steady_clock::now()), budget_(seconds) {}
    [[nodiscard]] double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    [[nodiscard]] bool expired() const { return budget_ > 0 && elapsed() >= budget_; }
    [[nodiscard]] double remaining() const { return budget_ > 0 ? std::max(0.0, budget_ - elapsed()) : 0.0; }

private:
    std::chrono::steady_clock::time_point start_;
    double budget_;
};

inline unsigned resolve_threads(unsigned t) {
    if (t == 0) t = std::thread::hardware_concurrency();
    return std::max(1u, t);
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
            next.store(count);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (error) std::rethrow_exception(error);
}

/// Characteristic 2: one bitplane per coordinate of the field element over GF(2).
struct BinaryKernel {
    using Word = std::uint64_t;
    unsigned m;
    std::size_t n, words, len;

    BinaryKernel(const Field& f, std::size_t length)
        : m(f.degree()), n(length), words((length + 63) / 64), len(f.degree() * ((length + 63) / 64)) {}

    void pack(const Field& f, std::span<const std::uint8_t> v, Word* out) const {
        std::fill(out, out + len, Word{0});
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            const auto d = f.digits(v[i]);
            for (unsigned j = 0; j < m; ++j) {
                if (d[j]) out[j * words + i / 64] |= Word{1} << (i % 64);
            }
        }
    }
    void unpack(const Field& f, const Word* in, std::uint8_t* out) const {
        std::vector<std::uint8_t> d(m);
        for (std::size_t i = 0; i < n; ++i) {
            for (unsigned j = 0; j < m; ++j) d[j] = static_cast<std::uint8_t>((in[j * words + i / 64] >> (i % 64)) & 1);
            out[i] = f.from_digits(d);
        }
    }
    void add(Word* d, const Word* s) const noexcept {
        for (std::size_t i = 0; i < len; ++i) d[i] ^= s[i];
    }
    void sum(Word* d, const Word* a, const Word* b) const noexcept {
        for (std::size_t i = 0; i < len; ++i) d[i] = a[i] ^ b[i];
    }
    [[nodiscard]] unsigned weight(const Word* v) const noexcept {
        unsigned w = 0;
        for (std::size_t k = 0; k < words; ++k) {
            Word acc = 0;
            for (unsigned j = 0; j < m; ++j) acc |= v[j * words + k];
            w += static_cast<unsigned>(std::popcount(acc));
        }
        return w;
    }
};

/// Odd characteristic: one byte plane per coordinate over GF(p).
struct OddKernel {
    using Word = std::uint8_t;
    unsigned p, m;
    std::size_t n, len;

    OddKernel(const Field& f, std::size_t length)
        : p(f.characteristic()), m(f.degree()), n(length), len(f.degree() * length) {}

    void pack(const Field& f, std::span<const std::uint8_t> v, Word* out) const {
        for (std::size_t i = 0; i < n; ++i) {
            const auto d = f.digits(v[i]);
            for (unsigned j = 0; j < m; ++j) out[j * n + i] = d[j];
        }
    }
    void unpack(const Field& f, const Word* in, std::uint8_t* out) const {
        std::vector<std::uint8_t> d(m);
        for (std::size_t i = 0; i < n; ++i) {
            for (unsigned j = 0; j < m; ++j) d[j] = in[j * n + i];
            out[i] = f.from_digits(d);
        }
    }
    void add(Word* d, const Word* s) const noexcept {
        const auto pp = static_cast<Word>(p);
        for (std::size_t i = 0; i < len; ++i) {
            const auto x = static_cast<Word>(d[i] + s[i]);
            d[i] = x >= pp ? static_cast<Word>(x - pp) : x;
        }
    }
    void sum(Word* d, const Word* a, const Word* b) const noexcept {
        const auto pp = static_cast<Word>(p);
        for (std::size_t i = 0; i < len; ++i) {
            const auto x = static_cast<Word>(a[i] + b[i]);
            d[i] = x >= pp ? static_cast<Word>(x - pp) : x;
        }
    }
    [[nodiscard]] unsigned weight(const Word* v) const noexcept {
        unsigned w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Word acc = 0;
            for (unsigned j = 0; j < m; ++j) acc |= v[j * n + i];
            w += acc != 0;
        }
        return w;
    }
};

template <class Fn>
decltype(auto) with_kernel(const Field& f, std::size_t n, Fn&& fn) {
    if (f.characteristic() == 2) return fn(BinaryKernel(f, n));
    return fn(OddKernel(f, n));
}

/// Packed copies of rows r and of their nonzero scalar multiples.
template <class K>
class PackedRows {
public:
    PackedRows(const K& ker, const Matrix& m) : ker_(ker), q_(m.field()->order()), rows_(m.rows()) {
        const Field& f = *m.field();
        data_.resize(rows_ * (q_ - 1) * ker.len);
        std::vector<std::uint8_t> tmp(m.cols());
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto src = m.row(r);
            for (unsigned c = 1; c < q_; ++c) {
                const auto* mul = f.mul_row(static_cast<std::uint8_t>(c));
                for (std::size_t j = 0; j < tmp.size(); ++j) tmp[j] = mul[src[j]];
                ker.pack(f, tmp, at(r, c));
            }
        }
    }
    [[nodiscard]] const typename K::Word* at(std::size_t r, unsigned c) const noexcept {
        return &data_[(r * (q_ - 1) + (c - 1)) * ker_.len];
    }
    [[nodiscard]] typename K::Word* at(std::size_t r, unsigned c) noexcept {
        return &data_[(r * (q_ - 1) + (c - 1)) * ker_.len];
    }

private:
    const K& ker_;
    unsigned q_;
    std::size_t rows_;
    std::vector<typename K::Word> data_;
};

/// Row basis of the code generated by the rows of g.
inline Matrix code_basis(const Matrix& g) {
    Matrix b = g;
    b.rref();
    return b;
}

inline void report(const ProgressHook& hook, std::string_view method, unsigned level, unsigned lower, unsigned upper,
                   std::uint64_t work, const Deadline& dl) {
    if (hook) hook(DistanceProgress{method, level, lower, upper, work, dl.elapsed()});
}

/// Local minimum collected by one work item.
struct ItemBest {
    unsigned weight = kInfiniteDistance;
    std::vector<std::uint8_t> word;
    std::uint64_t work = 0;
};

/// Deterministic reduction: smallest weight, ties broken by item index.
inline void merge_best(const std::vector<ItemBest>& items, DistanceResult& out) {
    for (const auto& it : items) {
        out.work += it.work;
        if (it.weight < out.upper) {
            out.upper = it.weight;
            out.witness = it.word;
        }
    }
}

inline unsigned ipow_capped(unsigned base, std::size_t exp, unsigned long long cap, unsigned long long& out) {
    unsigned long long v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > cap / base) return 0;
        v *= base;
    }
    out = v;
    return 1;
}

}  // namespace detail

/// Number of codewords q^{2k} when it fits below `cap`, else 0.
inline unsigned long long message_space_size(unsigned field_order, std::size_t k,
                                             unsigned long long cap = std::numeric_limits<unsigned long long>::max()) {
    unsigned long long v = 0;
    return detail::ipow_capped(field_order, k, cap, v) ? v : 0;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace detail {

template <class K>
DistanceResult exhaustive_impl(const Matrix& basis, const K& ker, const DistanceOptions& opts) {
    const Field& f = *basis.field();
    const unsigned p = f.characteristic();
    const unsigned m = f.degree();
    const std::size_t k = basis.rows();
    const std::size_t len = ker.len;
    using Word = typename K::Word;

    // Digit v of the tail after leading row i is (row i + 1 + v / m, F_p-basis element v % m).
    std::vector<std::uint8_t> unit(m);
    for (unsigned j = 0; j < m; ++j) {
        std::vector<std::uint8_t> d(m, 0);
        d[j] = 1;
        unit[j] = f.from_digits(d);
    }
    const PackedRows<K> rows(ker, basis);
    auto digit_vec = [&](std::size_t row, unsigned j) { return rows.at(row, unit[j]); };

    struct Item {
        std::size_t lead;
        std::size_t split;   // number of prefix digits
        std::uint64_t prefix;
    };
    std::vector<Item> items;
    constexpr std::uint64_t kSplitTarget = 256;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t digits = m * (k - 1 - i);
        std::size_t split = 0;
        std::uint64_t count = 1;
        while (split < digits && count < kSplitTarget) {
            count *= p;
            ++split;
        }
        for (std::uint64_t pre = 0; pre < count; ++pre) items.push_back({i, split, pre});
    }

    std::vector<ItemBest> best(items.size());
    detail::parallel_for(items.size(), opts.threads, [&](std::size_t idx) {
        const Item& it = items[idx];
        const std::size_t digits = m * (k - 1 - it.lead);
        const std::size_t free = digits - it.split;
        std::vector<Word> cur(rows.at(it.lead, 1), rows.at(it.lead, 1) + len);
        std::uint64_t pre = it.prefix;
        for (std::size_t s = 0; s < it.split; ++s) {
            const std::size_t v = free + s;
            const unsigned digit = static_cast<unsigned>(pre % p);
            pre /= p;
            for (unsigned t = 0; t < digit; ++t) ker.add(cur.data(), digit_vec(it.lead + 1 + v / m, static_cast<unsigned>(v % m)));
        }
        std::vector<const Word*> step(free);
        for (std::size_t v = 0; v < free; ++v) step[v] = digit_vec(it.lead + 1 + v / m, static_cast<unsigned>(v % m));

        ItemBest& b = best[idx];
        auto visit = [&] {
            const unsigned w = ker.weight(cur.data());
            if (w < b.weight) {
                b.weight = w;
                b.word.resize(ker.n);
                ker.unpack(f, cur.data(), b.word.data());
            }
        };
        visit();
        std::uint64_t work = 1;
        // Modular p-ary Gray code: the digit that changes is the one where the
        // counter's carry stops, and it always changes by +1.
        std::vector<unsigned> counter(free, 0);
        for (;;) {
            std::size_t v = 0;
            while (v < free && counter[v] == p - 1) counter[v++] = 0;
            if (v == free) break;
            ++counter[v];
            ker.add(cur.data(), step[v]);
            const unsigned w = ker.weight(cur.data());
            if (w < b.weight) {
                b.weight = w;
                b.word.resize(ker.n);
                ker.unpack(f, cur.data(), b.word.data());
            }
            ++work;
        }
        b.work = work;
    });

    DistanceResult out;
    out.method = "exhaustive";
    merge_best(best, out);
    out.lower = out.upper;
    return out;
}

}  // namespace detail

/// Exact minimum distance by enumerating every codeword up to scalars.
/// Refuses when q^{2k} exceeds `budget`.
inline DistanceResult dmin_exhaustive(const Matrix& g, unsigned long long budget, const DistanceOptions& opts = {}) {
    const Matrix basis = detail::code_basis(g);
    if (basis.rows() == 0) throw DomainError("the zero code has no minimum distance");
    const unsigned q = basis.field()->order();
    if (message_space_size(q, basis.rows(), budget) == 0) {
        throw DomainError("exhaustive enumeration of " + std::to_string(q) + "^" + std::to_string(basis.rows()) +
                          " codewords exceeds the budget of " + std::to_string(budget));
    }
    detail::Deadline dl(0);
    auto r = detail::with_kernel(*basis.field(), basis.cols(),
                                 [&](const auto& ker) { return detail::exhaustive_impl(basis, ker, opts); });
    detail::report(opts.progress, r.method, static_cast<unsigned>(basis.rows()), r.lower, r.upper, r.work, dl);
    return r;
}

// ---------------------------------------------------------------------------
// Brouwer-Zimmermann

struct InformationSets {
    std::vector<Matrix> systematic;  ///< each in RREF on its pivots
    std::vector<std::size_t> ranks;  ///< pivots on columns unused by earlier sets
};

/// Greedy disjoint information sets: each next RREF prefers unused columns.
inline InformationSets greedy_information_sets(const Matrix& basis) {
    InformationSets out;
    const std::size_t n = basis.cols();
    std::vector<bool> used(n, false);
    for (;;) {
        std::vector<std::size_t> order;
        for (std::size_t c = 0; c < n; ++c) {
            if (!used[c]) order.push_back(c);
        }
        if (order.empty()) break;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) order.push_back(c);
        }
        Matrix m = basis;
        const auto piv = m.rref_with_order(order);
        std::size_t fresh = 0;
        for (auto c : piv) {
            if (!used[c]) {
                used[c] = true;
                ++fresh;
            }
        }
        if (fresh == 0) break;
        out.systematic.push_back(std::move(m));
        out.ranks.push_back(fresh);
    }
    return out;
}

/// sum_j max(0, w + 1 - (k - r_j)): weight every codeword not yet seen must have
/// once all messages of weight <= w were enumerated in every systematic form.
inline unsigned bz_lower_bound(const InformationSets& sets, std::size_t k, unsigned w) {
    unsigned s = 0;
    for (auto r : sets.ranks) {
        const long gap = static_cast<long>(k) - static_cast<long>(r);
        s += static_cast<unsigned>(std::max(0L, static_cast<long>(w) + 1 - gap));
    }
    return s;
}

namespace detail {

template <class K>
DistanceResult bz_impl(const Matrix& basis, const K& ker, const DistanceOptions& opts, const Deadline& dl) {
    const Field& f = *basis.field();
    const unsigned q = f.order();
    const std::size_t k = basis.rows();
    const std::size_t len = ker.len;
    using Word = typename K::Word;

    const InformationSets sets = greedy_information_sets(basis);
    std::vector<PackedRows<K>> packed;
    packed.reserve(sets.systematic.size());
    for (const auto& s : sets.systematic) packed.emplace_back(ker, s);

    DistanceResult out;
    out.method = "brouwer-zimmermann";
    out.lower = 1;
    std::atomic<unsigned> shared_upper{kInfiniteDistance};
    std::atomic<bool> stop{false};

    for (unsigned w = 1; w <= k; ++w) {
        const unsigned lower_before = out.lower;
        struct Item {
            std::size_t mat, first;
        };
        std::vector<Item> items;
        for (std::size_t j = 0; j < packed.size(); ++j) {
            for (std::size_t a = 0; a + w <= k; ++a) items.push_back({j, a});
        }
        std::vector<ItemBest> best(items.size());
        detail::parallel_for(items.size(), opts.threads, [&](std::size_t idx) {
            if (stop.load(std::memory_order_relaxed)) return;
            const Item& it = items[idx];
            const auto& rows = packed[it.mat];
            ItemBest& b = best[idx];
            std::vector<std::vector<Word>> partial(w + 1, std::vector<Word>(len));
            std::copy(rows.at(it.first, 1), rows.at(it.first, 1) + len, partial[1].begin());
            std::vector<std::size_t> idxs(w + 1, 0);
            std::vector<unsigned> coef(w + 1, 0);
            std::uint64_t leaves = 0;
            // Depth-first over row tuples first < r2 < ... < rw with nonzero coefficients.
            auto leaf = [&](const Word* v) {
                ++leaves;
                const unsigned wt = ker.weight(v);
                if (wt < b.weight) {
                    b.weight = wt;
                    b.word.resize(ker.n);
                    ker.unpack(f, v, b.word.data());
                    unsigned cur = shared_upper.load();
                    while (wt < cur && !shared_upper.compare_exchange_weak(cur, wt)) {
                    }
                    if (wt <= lower_before) stop.store(true);
                }
                if ((leaves & 0x3FFF) == 0 && dl.expired()) stop.store(true);
            };
            if (w == 1) {
                leaf(partial[1].data());
            } else {
                std::size_t depth = 2;
                idxs[2] = it.first + 1;
                coef[2] = 1;
                while (depth >= 2) {
                    if (stop.load(std::memory_order_relaxed)) break;
                    const std::size_t remaining = w - depth;
                    if (idxs[depth] + remaining >= k) {
                        --depth;
                        if (depth >= 2) {
                            if (++coef[depth] == q) {
                                coef[depth] = 1;
                                ++idxs[depth];
                            }
                        }
                        continue;
                    }
                    ker.sum(partial[depth].data(), partial[depth - 1].data(), rows.at(idxs[depth], coef[depth]));
                    if (depth == w) {
                        leaf(partial[depth].data());
                        if (++coef[depth] == q) {
                            coef[depth] = 1;
                            ++idxs[depth];
                        }
                    } else {
                        ++depth;
                        idxs[depth] = idxs[depth - 1] + 1;
                        coef[depth] = 1;
                    }
                }
            }
            b.work = leaves;
        });
        merge_best(best, out);
        if (stop.load() && dl.expired() && out.upper > lower_before) {
            out.timed_out = true;
            report(opts.progress, out.method, w, out.lower, out.upper, out.work, dl);
            return out;
        }
        if (out.upper <= lower_before) {
            out.lower = out.upper;
            return out;
        }
        out.lower = std::max(out.lower, std::min(bz_lower_bound(sets, k, w), out.upper));
        if (w == k) out.lower = out.upper;  // every message of the first form was visited
        report(opts.progress, out.method, w, out.lower, out.upper, out.work, dl);
        if (out.lower >= out.upper) return out;
        if (out.lower > opts.cap) return out;
    }
    return out;
}

}  // namespace detail

inline DistanceResult dmin_bz(const Matrix& g, const DistanceOptions& opts = {}) {
    const Matrix basis = detail::code_basis(g);
    if (basis.rows() == 0) throw DomainError("the zero code has no minimum distance");
    detail::Deadline dl(opts.time_budget);
    return detail::with_kernel(*basis.field(), basis.cols(),
                               [&](const auto& ker) { return detail::bz_impl(basis, ker, opts, dl); });
}

// ---------------------------------------------------------------------------
// Random information sets

struct SampleOptions {
    std::uint64_t seed = 1;
    std::uint64_t iterations = 64;
    unsigned target = 0;   ///< stop as soon as a word of weight <= target is found
    unsigned pairs = 2;    ///< message weight enumerated per information set (1 or 2)
    unsigned threads = 0;
    double time_budget = 0;
    ProgressHook progress;
};

namespace detail {

template <class K>
DistanceResult sample_impl(const Matrix& basis, const K& ker, const SampleOptions& opts) {
    const Field& f = *basis.field();
    const unsigned q = f.order();
    const std::size_t k = basis.rows();
    const std::size_t len = ker.len;
    using Word = typename K::Word;
    Deadline dl(opts.time_budget);

    DistanceResult out;
    out.method = "information-set sampling";
    const unsigned threads = resolve_threads(opts.threads);
    const std::uint64_t batch = std::max<std::uint64_t>(8, 2ULL * threads);
    for (std::uint64_t start = 0; start < opts.iterations; start += batch) {
        const std::uint64_t count = std::min(batch, opts.iterations - start);
        std::vector<ItemBest> best(count);
        detail::parallel_for(count, threads, [&](std::size_t idx) {
            CounterRng rng(opts.seed, start + idx);
            const auto perm = random_permutation(basis.cols(), rng);
            Matrix m = basis;
            m.rref_with_order(perm);
            const PackedRows<K> rows(ker, m);
            ItemBest& b = best[idx];
            std::vector<Word> tmp(len);
            auto consider = [&](const Word* v) {
                ++b.work;
                const unsigned wt = ker.weight(v);
                if (wt < b.weight) {
                    b.weight = wt;
                    b.word.resize(ker.n);
                    ker.unpack(f, v, b.word.data());
                }
            };
            for (std::size_t i = 0; i < k; ++i) consider(rows.at(i, 1));
            if (opts.pairs >= 2) {
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = i + 1; j < k; ++j) {
                        for (unsigned c = 1; c < q; ++c) {
                            ker.sum(tmp.data(), rows.at(i, 1), rows.at(j, c));
                            consider(tmp.data());
                        }
                    }
                }
            }
        });
        merge_best(best, out);
        report(opts.progress, out.method, static_cast<unsigned>(start + count), out.lower, out.upper, out.work, dl);
        if (out.upper <= opts.target) break;
        if (dl.expired()) {
            out.timed_out = true;
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Upper bound from low-weight words found on random information sets.
/// Deterministic for a fixed seed unless the time budget cuts it short.
inline DistanceResult low_weight_search(const Matrix& g, const SampleOptions& opts = {}) {
    const Matrix basis = detail::code_basis(g);
    if (basis.rows() == 0) throw DomainError("the zero code has no minimum distance");
    return detail::with_kernel(*basis.field(), basis.cols(),
                               [&](const auto& ker) { return detail::sample_impl(basis, ker, opts); });
}

// ---------------------------------------------------------------------------
// Parity-check column dependencies
//
// d is the smallest number of linearly dependent columns of a parity-check
// matrix H. Sets are grown one column at a time while all remaining columns
// are kept reduced modulo the span of the chosen ones; a set of size s plus
// two columns is dependent exactly when two reduced columns are proportional.

namespace detail {

class DependencySearch {
public:
    DependencySearch(const Matrix& h, Symmetry sym) : f_(*h.field()), r_(h.rows()), n_(h.cols()) {
        cols_.resize(n_ * r_);
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < r_; ++i) cols_[j * r_ + i] = h(i, j);
        }
        switch (sym) {
            case Symmetry::none:
                for (std::size_t j = 0; j < n_; ++j) anchors_.push_back(j);
                break;
            case Symmetry::cyclic:
                anchors_.push_back(0);
                break;
            case Symmetry::quasi_cyclic2:
                if (n_ % 2 != 0) throw DomainError("quasi-cyclic symmetry needs even length");
                anchors_.push_back(0);
                anchors_.push_back(n_ / 2);
                break;
        }
    }

    /// A dependent set of exactly `size` columns, searching sets whose smallest
    /// column is an anchor. Assumes no smaller dependent set exists.
    std::vector<std::size_t> find(unsigned size, unsigned threads, const Deadline& dl, std::atomic<bool>& timed_out,
                                  std::uint64_t& work) {
        if (size == 1) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_zero(&cols_[j * r_])) return {j};
            }
            return {};
        }
        if (size == 2) {
            std::vector<std::size_t> all(n_);
            for (std::size_t j = 0; j < n_; ++j) all[j] = j;
            std::vector<std::uint8_t> buf(cols_);
            auto pr = proportional_pair(buf.data(), all);
            work += n_;
            if (pr) return {pr->first, pr->second};
            return {};
        }
        // Work items: (anchor, second column); deeper levels run inside the item.
        struct Item {
            std::size_t a, b;
        };
        std::vector<Item> items;
        for (auto a : anchors_) {
            for (std::size_t b = a + 1; b + (size - 2) <= n_; ++b) items.push_back({a, b});
        }
        std::vector<std::vector<std::size_t>> found(items.size());
        std::vector<std::uint64_t> item_work(items.size(), 0);
        std::atomic<std::size_t> first_found{items.size()};
        detail::parallel_for(items.size(), threads, [&](std::size_t idx) {
            if (idx > first_found.load(std::memory_order_relaxed) || timed_out.load(std::memory_order_relaxed)) return;
            Worker wk(*this, size);
            const bool ok = wk.run(items[idx].a, items[idx].b, first_found, idx, dl, timed_out);
            item_work[idx] = wk.work;
            if (ok) {
                found[idx] = wk.result;
                std::size_t cur = first_found.load();
                while (idx < cur && !first_found.compare_exchange_weak(cur, idx)) {
                }
            }
        });
        for (auto w : item_work) work += w;
        for (auto& s : found) {
            if (!s.empty()) return s;
        }
        return {};
    }

    [[nodiscard]] std::size_t rank_rows() const noexcept { return r_; }
    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] std::size_t anchor_count() const noexcept { return anchors_.size(); }

private:
    [[nodiscard]] bool is_zero(const std::uint8_t* v) const {
        for (std::size_t i = 0; i < r_; ++i) {
            if (v[i]) return false;
        }
        return true;
    }

    /// Scales v so its first nonzero entry is 1; returns false for zero.
    bool normalize(std::uint8_t* v) const {
        std::size_t i = 0;
        while (i < r_ && v[i] == 0) ++i;
        if (i == r_) return false;
        if (v[i] != 1) {
            const auto* m = f_.mul_row(f_.inv(v[i]));
            for (std::size_t t = i; t < r_; ++t) v[t] = m[v[t]];
        }
        return true;
    }

    /// Two listed columns of buf (n_ x r_, modified in place) that are proportional.
    std::optional<std::pair<std::size_t, std::size_t>> proportional_pair(std::uint8_t* buf,
                                                                          const std::vector<std::size_t>& idx) const {
        std::vector<std::pair<std::uint64_t, std::size_t>> keys;
        keys.reserve(idx.size());
        for (auto j : idx) {
            std::uint8_t* v = &buf[j * r_];
            if (!normalize(v)) continue;
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (std::size_t t = 0; t < r_; ++t) h = (h ^ v[t]) * 0x100000001b3ULL;
            keys.emplace_back(h, j);
        }
        std::sort(keys.begin(), keys.end());
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t s = 0; s < keys.size(); ++s) {
            for (std::size_t t = s + 1; t < keys.size() && keys[t].first == keys[s].first; ++t) {
                const auto a = std::min(keys[s].second, keys[t].second);
                const auto b = std::max(keys[s].second, keys[t].second);
                if (std::equal(&buf[a * r_], &buf[a * r_] + r_, &buf[b * r_]) && (!best || std::pair(a, b) < *best)) {
                    best = std::pair(a, b);
                }
            }
        }
        return best;
    }

    struct Worker {
        const DependencySearch& s;
        unsigned size;
        std::vector<std::vector<std::uint8_t>> bufs;  // bufs[d]: columns reduced modulo the first d chosen
        std::vector<std::size_t> result;
        std::uint64_t work = 0;
        std::uint64_t nodes = 0;

        Worker(const DependencySearch& search, unsigned sz)
            : s(search), size(sz), bufs(sz, std::vector<std::uint8_t>(search.n_ * search.r_)) {}

        /// Reduces the columns after `pivot_col` of src modulo that column, into dst.
        /// Returns false if the pivot column is zero.
        bool reduce(const std::uint8_t* src, std::uint8_t* dst, std::size_t pivot_col) {
            const std::size_t r = s.r_;
            std::vector<std::uint8_t> b(src + pivot_col * r, src + (pivot_col + 1) * r);
            std::size_t pv = 0;
            while (pv < r && b[pv] == 0) ++pv;
            if (pv == r) return false;
            const Field& f = s.f_;
            if (b[pv] != 1) {
                const auto* m = f.mul_row(f.inv(b[pv]));
                for (auto& x : b) x = m[x];
            }
            for (std::size_t j = pivot_col + 1; j < s.n_; ++j) {
                const std::uint8_t* in = src + j * r;
                std::uint8_t* out = dst + j * r;
                const std::uint8_t c = in[pv];
                if (c == 0) {
                    std::copy(in, in + r, out);
                } else {
                    const auto* m = f.mul_row(c);
                    for (std::size_t t = 0; t < r; ++t) out[t] = f.sub(in[t], m[b[t]]);
                }
            }
            work += s.n_ - pivot_col;
            return true;
        }

        /// Sets {a, b, ...} of `size` columns with a, b fixed.
        bool run(std::size_t a, std::size_t b, const std::atomic<std::size_t>& first_found, std::size_t idx,
                 const Deadline& dl, std::atomic<bool>& timed_out) {
            std::copy(s.cols_.begin(), s.cols_.end(), bufs[0].begin());
            if (!reduce(bufs[0].data(), bufs[1].data(), a)) return false;
            if (size == 3) {
                std::vector<std::size_t> rest;
                for (std::size_t j = b; j < s.n_; ++j) rest.push_back(j);
                auto pr = s.proportional_pair(bufs[1].data(), rest);
                // Only pairs led by b belong to this item.
                if (!pr || pr->first != b) {
                    pr.reset();
                    if (s.normalize(&bufs[1][b * s.r_])) {
                        for (std::size_t j = b + 1; j < s.n_; ++j) {
                            if (std::equal(&bufs[1][b * s.r_], &bufs[1][(b + 1) * s.r_], &bufs[1][j * s.r_])) {
                                pr = std::pair(b, j);
                                break;
                            }
                        }
                    }
                }
                if (!pr) return false;
                result = {a, pr->first, pr->second};
                return true;
            }
            if (!reduce(bufs[1].data(), bufs[2].data(), b)) return false;
            std::vector<std::size_t> chosen{a, b};
            return dfs(2, chosen, first_found, idx, dl, timed_out);
        }

        bool dfs(std::size_t depth, std::vector<std::size_t>& chosen, const std::atomic<std::size_t>& first_found,
                 std::size_t idx, const Deadline& dl, std::atomic<bool>& timed_out) {
            const std::size_t last = chosen.back();
            if (depth + 2 == size) {
                std::vector<std::size_t> rest;
                for (std::size_t j = last + 1; j < s.n_; ++j) rest.push_back(j);
                auto pr = s.proportional_pair(bufs[depth].data(), rest);
                if (!pr) return false;
                result = chosen;
                result.push_back(pr->first);
                result.push_back(pr->second);
                return true;
            }
            for (std::size_t c = last + 1; c + (size - depth - 1) <= s.n_; ++c) {
                if (first_found.load(std::memory_order_relaxed) < idx || timed_out.load(std::memory_order_relaxed)) return false;
                if ((++nodes & 0xFF) == 0 && dl.expired()) {
                    timed_out.store(true);
                    return false;
                }
                if (!reduce(bufs[depth].data(), bufs[depth + 1].data(), c)) continue;
                chosen.push_back(c);
                if (dfs(depth + 1, chosen, first_found, idx, dl, timed_out)) return true;
                chosen.pop_back();
            }
            return false;
        }
    };

    const Field& f_;
    std::size_t r_, n_;
    std::vector<std::uint8_t> cols_;
    std::vector<std::size_t> anchors_;
};

/// Codeword supported on a dependent column set of h.
inline std::vector<std::uint8_t> codeword_on_support(const Matrix& h, const std::vector<std::size_t>& support) {
    Matrix sub(h.field(), h.rows(), support.size());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t t = 0; t < support.size(); ++t) sub(i, t) = h(i, support[t]);
    }
    const Matrix ker = sub.null_space();
    if (ker.rows() == 0) throw InternalError("column set is not dependent");
    std::vector<std::uint8_t> word(h.cols(), 0);
    for (std::size_t t = 0; t < support.size(); ++t) word[support[t]] = ker(0, t);
    return word;
}

}  // namespace detail

/// Parity-check matrix: basis of the Euclidean dual of the row space of g.
inline Matrix parity_check_matrix(const Matrix& g) { return detail::code_basis(g).null_space(); }

/// Exact distance via dependent column sets of H, raising the lower bound one
/// size at a time. `known_upper` (with its witness) ends the search early.
inline DistanceResult dmin_dependency(const Matrix& g, Symmetry sym, const DistanceOptions& opts = {},
                                      unsigned known_upper = kInfiniteDistance,
                                      std::vector<std::uint8_t> known_witness = {}) {
    const Matrix basis = detail::code_basis(g);
    if (basis.rows() == 0) throw DomainError("the zero code has no minimum distance");
    detail::Deadline dl(opts.time_budget);
    DistanceResult out;
    out.method = "column dependency";
    out.upper = known_upper;
    out.witness = std::move(known_witness);
    const Matrix h = basis.null_space();
    if (h.rows() == 0) {
        // Full space: every unit vector is a codeword.
        out.lower = out.upper = 1;
        out.witness.assign(basis.cols(), 0);
        out.witness[0] = 1;
        return out;
    }
    detail::DependencySearch search(h, sym);
    std::atomic<bool> timed_out{false};
    for (unsigned size = 1; size < out.upper; ++size) {
        if (size > opts.cap) break;
        std::uint64_t work = 0;
        auto set = search.find(size, opts.threads, dl, timed_out, work);
        out.work += work;
        if (timed_out.load()) {
            out.timed_out = true;
            break;
        }
        if (!set.empty()) {
            out.upper = size;
            out.witness = detail::codeword_on_support(h, set);
        }
        out.lower = size + (set.empty() ? 1 : 0);
        detail::report(opts.progress, out.method, size, out.lower, out.upper, out.work, dl);
        if (!set.empty()) break;
    }
    if (out.upper != kInfiniteDistance && out.lower > out.upper) out.lower = out.upper;
    return out;
}

// ---------------------------------------------------------------------------
// Automatic choice

struct AutoOptions {
    unsigned long long exhaustive_budget = 200'000'000ULL;
    double time_budget = 60;
    unsigned threads = 0;
    unsigned cap = kInfiniteDistance;
    Symmetry symmetry = Symmetry::none;
    std::uint64_t seed = 1;
    std::uint64_t sample_iterations = 64;
    ProgressHook progress;
};

namespace detail {

inline long double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long double r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return r;
}

/// Rough operation count for the Brouwer-Zimmermann search to certify d >= target.
inline long double bz_cost(const InformationSets& sets, std::size_t k, unsigned q, std::size_t n, unsigned target) {
    long double cost = 0;
    for (unsigned w = 1; w <= k; ++w) {
        cost += static_cast<long double>(sets.ranks.size()) * binom(k, w) * std::pow(static_cast<long double>(q - 1), w - 1) *
                static_cast<long double>(n) / 16;
        if (bz_lower_bound(sets, k, w) >= target) return cost;
    }
    return cost;
}

/// Rough operation count for the dependency search to certify d >= target.
inline long double dependency_cost(std::size_t anchors, std::size_t n, std::size_t r, unsigned target) {
    if (target <= 2) return static_cast<long double>(n * r);
    long double cost = 0;
    for (unsigned size = 3; size < target; ++size) {
        cost += static_cast<long double>(anchors) * binom(n - 1, size - 2) * static_cast<long double>(n * r);
    }
    return cost;
}

}  // namespace detail

/// Exhaustive when q^{2k} fits the budget; otherwise an upper bound from
/// information-set sampling, then whichever certifier is cheaper for the
/// matching lower bound.
inline DistanceResult dmin_auto(const Matrix& g, const AutoOptions& opts = {}) {
    const Matrix basis = detail::code_basis(g);
    if (basis.rows() == 0) throw DomainError("the zero code has no minimum distance");
    const Field& f = *basis.field();
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    DistanceOptions dopts{opts.threads, opts.time_budget, opts.cap, opts.progress};
    if (message_space_size(f.order(), k, opts.exhaustive_budget) != 0) return dmin_exhaustive(basis, opts.exhaustive_budget, dopts);

    const std::size_t anchors = opts.symmetry == Symmetry::cyclic ? 1 : opts.symmetry == Symmetry::quasi_cyclic2 ? 2 : n;
    constexpr long double kCheapDependency = 4e9L;
    if (opts.cap != kInfiniteDistance && detail::dependency_cost(anchors, n, n - k, opts.cap + 1) <= kCheapDependency) {
        // Resolving d up to the cap directly is cheaper than sampling first.
        return dmin_dependency(basis, opts.symmetry, dopts);
    }

    detail::Deadline dl(opts.time_budget);
    SampleOptions sopts;
    sopts.seed = opts.seed;
    // About 1e9 byte operations in total, at least one information set.
    const long double bytes = f.characteristic() == 2 ? f.degree() * ((n + 63) / 64) * 8.0L : f.degree() * static_cast<long double>(n);
    const long double per_iteration = static_cast<long double>(k) * static_cast<long double>(k) * (f.order() - 1) / 2 * bytes;
    sopts.iterations = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(1e9L / per_iteration), 1, opts.sample_iterations);
    sopts.threads = opts.threads;
    sopts.time_budget = opts.time_budget;
    sopts.progress = opts.progress;
    DistanceResult upper = low_weight_search(basis, sopts);
    const unsigned target = std::min(upper.upper, opts.cap == kInfiniteDistance ? kInfiniteDistance : opts.cap + 1);

    const InformationSets sets = greedy_information_sets(basis);
    const long double bz = detail::bz_cost(sets, k, f.order(), n, target);
    const long double dep = detail::dependency_cost(anchors, n, n - k, target);

    dopts.time_budget = opts.time_budget > 0 ? std::max(dl.remaining(), 1e-3) : 0;
    DistanceResult r;
    if (dep <= bz) {
        r = dmin_dependency(basis, opts.symmetry, dopts, upper.upper, upper.witness);
    } else {
        r = dmin_bz(basis, dopts);
        if (upper.upper < r.upper) {
            r.upper = upper.upper;
            r.witness = upper.witness;
        }
        r.lower = std::min(r.lower, r.upper);
    }
    r.work += upper.work;
    r.timed_out = r.timed_out || (upper.timed_out && !r.exact());
    r.method = "sampling+" + r.method;
    return r;
}

/// Generator matrix with rows x^i g, 0 <= i < n - deg g.
inline Matrix cyclic_generator_matrix(const Poly& g, unsigned n) {
    Matrix m(g.field(), n);
    const long deg = g.degree();
    if (deg < 0 || deg > static_cast<long>(n)) throw DomainError("generator degree out of range");
    for (unsigned i = 0; i + static_cast<unsigned>(deg) < n; ++i) m.append_row(detail::shifted(g, n, i));
    return m;
}

inline DistanceResult dmin_auto(const QuasiCyclicCode& c, AutoOptions opts = {}) {
    opts.symmetry = Symmetry::quasi_cyclic2;
    return dmin_auto(c.G(), opts);
}

// ---------------------------------------------------------------------------
// 7-case lower bound for C(g1, g2, t)

/// d of the cyclic code <gcd(f mod x^n - 1, x^n - 1)>, infinite for the zero code.
struct BoundTerm {
    std::string label;
    Poly generator;
    DistanceResult d;
    [[nodiscard]] bool zero_code() const noexcept { return d.lower == kInfiniteDistance; }
};

struct BoundCase {
    int index = 0;
    std::string formula;
    std::vector<std::size_t> terms;  ///< indices into ThmBound::terms, summed
    unsigned lower = kInfiniteDistance;
    unsigned upper = kInfiniteDistance;
    [[nodiscard]] bool exact() const noexcept { return lower == upper; }
};

struct ThmBound {
    std::vector<BoundTerm> terms;
    std::vector<BoundCase> cases;  ///< the seven cases, case 5 in its sum form
    BoundCase case5_double_left;   ///< 2 d(gcd(g1 t, g2))
    BoundCase case5_double_right;  ///< 2 d(gcd(g1, t g2))
    unsigned lower = kInfiniteDistance;
    unsigned upper = kInfiniteDistance;
    bool timed_out = false;

    [[nodiscard]] bool exact() const noexcept { return lower == upper; }
    [[nodiscard]] unsigned value() const {
        if (!exact()) throw Error("bound only known to lie in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
        return lower;
    }
};

struct BoundOptions {
    AutoOptions distance;  ///< per constituent code; symmetry is forced to cyclic
};

namespace detail {

inline unsigned add_distance(unsigned a, unsigned b) {
    if (a == kInfiniteDistance || b == kInfiniteDistance) return kInfiniteDistance;
    return a + b;
}

}  // namespace detail

/// min over the seven cases of sums of constituent cyclic-code distances.
/// Cases are evaluated cheapest first, and each constituent only to the
/// precision needed to decide whether it lowers the running minimum.
inline ThmBound thm_lower_bound(unsigned n, const Poly& g1, const Poly& g2, const Poly& t, const BoundOptions& opts = {}) {
    const FieldPtr& F = g1.field();
    if (!(*F == *g2.field()) || !(*F == *t.field())) throw FieldMismatch();
    const Poly X = Poly::xn_minus_1(F, n);
    if (g1.is_zero() || !p_divides(g1, X)) throw DomainError("g1 does not divide x^n - 1");
    if (g2.is_zero() || !p_divides(g2, X)) throw DomainError("g2 does not divide x^n - 1");

    auto ig = [&](const Poly& f) { return ideal_generator(f, n); };
    const Poly tt = ig(t);
    const Poly t_ann = X / tt;  // (x^n - 1) / gcd(x^n - 1, t)

    ThmBound out;
    std::map<std::vector<std::uint8_t>, std::size_t> by_gen;
    auto term = [&](const std::string& label, const Poly& f) {
        const Poly g = ig(f).monic();
        auto [it, fresh] = by_gen.emplace(g.coeffs(), out.terms.size());
        if (fresh) {
            BoundTerm bt{label, g, {}};
            bt.d.lower = 0;
            bt.d.upper = kInfiniteDistance;
            out.terms.push_back(std::move(bt));
        }
        return it->second;
    };
    auto make_case = [&](int idx, std::string formula, std::vector<std::size_t> terms) {
        BoundCase c;
        c.index = idx;
        c.formula = std::move(formula);
        c.terms = std::move(terms);
        return c;
    };
    out.cases.push_back(make_case(1, "d(lcm(g2, (x^n-1)/gcd(x^n-1, t)))", {term("lcm(g2, ann t)", p_lcm(g2, t_ann))}));
    out.cases.push_back(make_case(2, "d(lcm(g1, (x^n-1)/gcd(x^n-1, t)))", {term("lcm(g1, ann t)", p_lcm(g1, t_ann))}));
    out.cases.push_back(make_case(3, "d(g1) + d(g1 t)", {term("g1", g1), term("g1 t", g1 * t)}));
    out.cases.push_back(make_case(4, "d(g2) + d(g2 t)", {term("g2", g2), term("g2 t", g2 * t)}));
    out.cases.push_back(make_case(5, "d(gcd(t g1, g2)) + d(gcd(g1, t g2))",
                                  {term("gcd(t g1, g2)", p_gcd(ig(t * g1), g2)), term("gcd(g1, t g2)", p_gcd(g1, ig(t * g2)))}));
    out.cases.push_back(make_case(6, "d(gcd(lcm(g1, g2/gcd(g2, t)), lcm(t g2, g1 t^2)))",
                                  {term("case 6", p_gcd(p_lcm(g1, g2 / p_gcd(g2, tt)), p_lcm(ig(t * g2), ig(g1 * t * t))))}));
    out.cases.push_back(make_case(7, "d(gcd(lcm(g2, g1/gcd(g1, t)), lcm(g2 t^2, t g1)))",
                                  {term("case 7", p_gcd(p_lcm(g2, g1 / p_gcd(g1, tt)), p_lcm(ig(g2 * t * t), ig(t * g1))))}));

    // Constituent distance known at least to the given cap.
    auto resolve = [&](std::size_t ti, unsigned cap) -> const DistanceResult& {
        BoundTerm& bt = out.terms[ti];
        if (bt.generator.degree() == static_cast<long>(n)) {
            bt.d.lower = bt.d.upper = kInfiniteDistance;
            bt.d.method = "zero code";
            return bt.d;
        }
        const bool settled = bt.d.exact() || (bt.d.lower > cap && bt.d.lower > 0);
        if (settled) return bt.d;
        if (cap == 0) {
            // Nothing below 1 is possible; no search needed.
            bt.d.lower = 1;
            return bt.d;
        }
        AutoOptions a = opts.distance;
        a.symmetry = Symmetry::cyclic;
        a.cap = cap;
        DistanceResult r = dmin_auto(cyclic_generator_matrix(bt.generator, n), a);
        out.timed_out = out.timed_out || r.timed_out;
        bt.d = std::move(r);
        return bt.d;
    };

    // Cheapest first: order by the largest constituent redundancy.
    std::vector<std::size_t> order(out.cases.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto redundancy = [&](const BoundCase& c) {
        long r = 0;
        for (auto ti : c.terms) r = std::max(r, out.terms[ti].generator.degree());
        return r;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return redundancy(out.cases[a]) < redundancy(out.cases[b]); });

    unsigned best = kInfiniteDistance;  // smallest case upper bound so far
    auto below = [](unsigned v) { return v == kInfiniteDistance ? kInfiniteDistance : (v == 0 ? 0 : v - 1); };
    for (auto ci : order) {
        BoundCase& c = out.cases[ci];
        // Only values below `best` matter; a sum of m terms needs each term <= best - m.
        unsigned lower = 0;
        unsigned upper = 0;
        bool infinite = false;
        for (std::size_t s = 0; s < c.terms.size(); ++s) {
            const unsigned remaining_terms = static_cast<unsigned>(c.terms.size() - s - 1);
            unsigned cap = below(best);
            if (cap != kInfiniteDistance) cap = cap > lower + remaining_terms ? cap - lower - remaining_terms : 0;
            const DistanceResult& d = resolve(c.terms[s], cap);
            if (d.lower == kInfiniteDistance) {
                infinite = true;
                break;
            }
            lower = detail::add_distance(lower, d.lower);
            upper = detail::add_distance(upper, d.upper);
            if (!d.exact()) {
                // Remaining terms add at least 1 each.
                lower += remaining_terms;
                upper = kInfiniteDistance;
                break;
            }
        }
        if (infinite) {
            c.lower = c.upper = kInfiniteDistance;
            continue;
        }
        c.lower = lower;
        c.upper = upper;
        best = std::min(best, c.upper);
    }
    for (const auto& c : out.cases) {
        out.lower = std::min(out.lower, c.lower);
        out.upper = std::min(out.upper, c.upper);
    }
    // A case whose lower bound reached the minimum need not be resolved further.
    if (out.upper != kInfiniteDistance && out.lower >= out.upper) out.lower = out.upper;

    auto doubled = [&](int idx, std::string formula, std::size_t ti) {
        BoundCase c = make_case(idx, std::move(formula), {ti});
        const DistanceResult& d = out.terms[ti].d;
        c.lower = d.lower == kInfiniteDistance ? kInfiniteDistance : 2 * d.lower;
        c.upper = d.upper == kInfiniteDistance ? kInfiniteDistance : 2 * d.upper;
        return c;
    };
    const auto& c5 = out.cases[4];
    out.case5_double_left = doubled(5, "2 d(gcd(g1 t, g2))", c5.terms[0]);
    out.case5_double_right = doubled(5, "2 d(gcd(g1, t g2))", c5.terms.size() > 1 ? c5.terms[1] : c5.terms[0]);
    return out;
}

}  // namespace qcq
