#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input error.

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcq/cosets.hpp"
#include "qcq/cyclic.hpp"
#include "qcq/report.hpp"
#include "qcq/rng.hpp"

#ifndef QCQ_FIXTURE_PATH
#define QCQ_FIXTURE_PATH "data/fixtures.jsonl"
#endif

namespace qcq::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

inline std::string default_fixture_path() { return QCQ_FIXTURE_PATH; }

/// A usage problem detected after argument parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Code selection shared by verify, bound and search

struct CodeInput {
    unsigned q2 = 0;
    unsigned n = 0;
    std::string g1, g2, t;
    std::vector<unsigned> t1, t2;
    std::string fixture;
    std::string fixtures = default_fixture_path();
};

struct ResolvedCode {
    FieldPtr field;
    unsigned n = 0;
    Poly g1{nullptr}, g2{nullptr};  // assigned once the field is known
    std::optional<Poly> t;
    const Fixture* fixture = nullptr;
    std::vector<Fixture> rows;  ///< keeps `fixture` alive
};

inline void add_code_options(CLI::App* sub, CodeInput& in, bool with_t) {
    sub->add_option("--q2", in.q2, "field order q^2 (4, 9, 16 or 25)");
    sub->add_option("--n", in.n, "block length; the code has length 2n");
    sub->add_option("--g1", in.g1, "generator g1 in coefficient notation");
    sub->add_option("--g2", in.g2, "generator g2 in coefficient notation");
    sub->add_option("--t1", in.t1, "defining set of g1 as coset representatives")->delimiter(',');
    sub->add_option("--t2", in.t2, "defining set of g2 as coset representatives")->delimiter(',');
    if (with_t) sub->add_option("--t", in.t, "polynomial t in coefficient notation");
    sub->add_option("--fixture", in.fixture, "take the code from a fixture row, e.g. E1 or T2-10-7");
    sub->add_option("--fixtures", in.fixtures, "fixture file")->capture_default_str();
}

inline Poly parse_flag(const std::string& flag, const std::string& text, const FieldPtr& F) {
    try {
        return p_parse(text, F);
    } catch (const ParseError& e) {
        throw ParseError(flag + ": " + e.message(), e.position());
    }
}

inline ResolvedCode resolve_code(const CodeInput& in, bool need_t) {
    ResolvedCode r;
    if (!in.fixture.empty()) {
        if (in.q2 || in.n || !in.g1.empty() || !in.g2.empty() || !in.t.empty() || !in.t1.empty() || !in.t2.empty()) {
            throw UsageError("--fixture cannot be combined with explicit code options");
        }
        r.rows = load_fixtures(in.fixtures);
        r.fixture = &find_fixture(r.rows, in.fixture);
        if (!r.fixture->has_code()) throw UsageError("fixture " + in.fixture + " has no polynomials");
        r.field = field_make(r.fixture->q2);
        r.n = *r.fixture->n;
        r.g1 = parse_flag("g1", *r.fixture->g1, r.field);
        r.g2 = parse_flag("g2", *r.fixture->g2, r.field);
        r.t = parse_flag("t", *r.fixture->t, r.field);
        return r;
    }
    if (!in.q2) throw UsageError("--q2 is required");
    if (!in.n) throw UsageError("--n is required");
    r.field = field_make(in.q2);
    if (!r.field->is_quadratic()) throw UsageError("--q2 must be an even power of a prime");
    r.n = in.n;
    auto generator = [&](const std::string& flag, const std::string& text, const std::vector<unsigned>& reps) {
        if (!text.empty() && !reps.empty()) throw UsageError("give either --" + flag + " or --t" + flag.substr(1) + ", not both");
        if (!text.empty()) return parse_flag("--" + flag, text, r.field);
        if (reps.empty()) throw UsageError("--" + flag + " or --t" + flag.substr(1) + " is required");
        return gen_from_defining_set(r.n, r.field, DefiningSet::from_reps(r.n, in.q2, reps));
    };
    r.g1 = generator("g1", in.g1, in.t1);
    r.g2 = generator("g2", in.g2, in.t2);
    if (!in.t.empty()) {
        r.t = parse_flag("--t", in.t, r.field);
    } else if (need_t) {
        throw UsageError("--t is required");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text rendering

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string distance_text(const DistanceResult& d) {
    std::string s = format_distance(d.lower, d.upper) + " (" + d.method;
    if (!d.exact()) s += d.timed_out ? ", budget exhausted" : ", interval";
    return s + ")";
}

/// [[n,k,d]]_q; for an unresolved distance the best known codeword weight is
/// shown with the certified lower bound beside it.
inline std::string quantum_text(const VerifyReport& r) {
    if (!r.quantum) return "none (" + r.quantum_note + ")";
    QuantumParams p = *r.quantum;
    if (r.d_exact()) return to_string(p);
    if (r.d_upper == kInfiniteDistance) return to_string(p) + " (d >= " + std::to_string(r.d_lower) + ")";
    p.d = r.d_upper;
    return to_string(p) + " (d <= " + std::to_string(r.d_upper) + " by a codeword, d >= " + std::to_string(r.d_lower) +
           " certified)";
}

inline std::string classical_text(const VerifyReport& r) {
    return "[" + std::to_string(2 * r.n) + "," + std::to_string(r.k) + "," + format_distance(r.d_lower, r.d_upper) + "]_" +
           std::to_string(r.q2);
}

inline std::string case_value(const BoundCase& c) {
    if (c.lower == kInfiniteDistance) return "inf (zero code)";
    if (c.exact()) return std::to_string(c.lower);
    if (c.upper == kInfiniteDistance) return ">= " + std::to_string(c.lower);
    return format_distance(c.lower, c.upper);
}

inline void print_bound(std::ostream& out, const ThmBound& b) {
    for (const auto& c : b.cases) {
        out << "  case " << c.index << "  " << std::left << std::setw(52) << c.formula << " " << case_value(c) << "\n";
    }
    out << "  case 5 variants  " << b.case5_double_left.formula << " = " << case_value(b.case5_double_left) << ", "
        << b.case5_double_right.formula << " = " << case_value(b.case5_double_right) << "\n";
    out << "  overall " << format_distance(b.lower, b.upper) << (b.timed_out ? " (budget exhausted)" : "") << "\n";
}

inline void print_report(std::ostream& out, const VerifyReport& r) {
    out << "field        GF(" << r.q2 << "), n = " << r.n << ", length " << 2 * r.n << "\n";
    out << "g1           " << r.g1 << "\n";
    out << "g2           " << r.g2 << "\n";
    out << "t            " << r.t << "\n";
    out << "dimension    " << r.k << " (expected " << r.expected_k << ", rank G0 " << r.rank_g0
        << ", dimension check " << yes_no(r.prop_dims) << ")\n";
    out << "dual-containing\n";
    out << "  direct                  " << yes_no(r.direct) << "\n";
    out << "  G0 certificate          " << yes_no(r.c0_certificate) << "\n";
    out << "  main theorem            " << yes_no(r.thm_main) << "\n";
    out << "  extended theorem        " << yes_no(r.thm_extended) << " (divisibility conditions "
        << yes_no(r.thm_extended_divisibility) << ")\n";
    if (r.distance) out << "distance     " << distance_text(*r.distance) << "\n";
    if (r.bound) {
        out << "lower bound  " << format_distance(r.bound->lower, r.bound->upper) << "\n";
        print_bound(out, *r.bound);
    }
    out << "classical    " << classical_text(r) << "\n";
    out << "quantum      " << quantum_text(r) << "\n";
    if (r.gv) {
        out << "GV           k_GV = " << r.gv->k_gv << ", " << (r.gv->beats ? "meets or beats" : "below")
            << (r.gv->vacuous ? " (vacuous: the bound promises no code)" : "") << "\n";
    }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    CodeInput code;
    double budget_secs = 60;
    unsigned long long exhaustive_budget = 200'000'000ULL;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    bool no_distance = false;
    bool no_bound = false;
    bool json = false;
    bool progress = false;
};

inline ProgressHook stderr_progress(std::ostream& err) {
    auto mu = std::make_shared<std::mutex>();
    return [&err, mu](const DistanceProgress& p) {
        std::lock_guard lock(*mu);
        err << "[" << std::fixed << std::setprecision(1) << p.seconds << "s] " << p.method << " level " << p.level << " d in "
            << format_distance(p.lower, p.upper) << "\n";
        err.unsetf(std::ios::floatfield);
    };
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const ResolvedCode c = resolve_code(a.code, true);
    VerifyOptions o;
    o.distance = !a.no_distance;
    o.bound = !a.no_bound;
    o.budget_secs = a.budget_secs;
    o.bound_budget_secs = a.budget_secs;
    o.exhaustive_budget = a.exhaustive_budget;
    o.threads = a.threads;
    o.seed = a.seed;
    if (a.progress) o.progress = stderr_progress(err);
    const VerifyReport r = verify_code(c.field->order(), c.n, c.g1, c.g2, *c.t, o);
    if (a.json) {
        out << to_json(r).dump() << "\n";
    } else {
        if (c.fixture) out << "fixture      " << c.fixture->id << "\n";
        print_report(out, r);
    }
    return r.direct ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// bound

struct BoundArgs {
    CodeInput code;
    double budget_secs = 60;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    bool json = false;
};

inline int cmd_bound(const BoundArgs& a, std::ostream& out) {
    const ResolvedCode c = resolve_code(a.code, true);
    BoundOptions b;
    b.distance.time_budget = a.budget_secs;
    b.distance.threads = a.threads;
    b.distance.seed = a.seed;
    const ThmBound r = thm_lower_bound(c.n, c.g1, c.g2, *c.t, b);
    if (a.json) {
        out << to_json(r).dump() << "\n";
    } else {
        out << "constituent cyclic codes\n";
        for (const auto& term : r.terms) {
            out << "  " << std::left << std::setw(16) << term.label << " deg " << std::setw(4) << term.generator.degree()
                << " d = " << (term.zero_code() ? std::string("inf (zero code)") : format_distance(term.d.lower, term.d.upper))
                << "\n";
        }
        out << "cases\n";
        print_bound(out, r);
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// cosets

struct CosetArgs {
    unsigned q2 = 0;
    unsigned n = 0;
    std::vector<unsigned> t1;
};

inline std::string set_text(const std::vector<unsigned>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

inline int cmd_cosets(const CosetArgs& a, std::ostream& out) {
    const FieldPtr F = field_make(a.q2);
    if (!F->is_quadratic()) throw UsageError("--q2 must be an even power of a prime");
    const unsigned q = F->q();
    const auto cosets = all_cosets(a.n, a.q2);
    for (const auto& c : cosets) {
        const SkewClass s = skew_classify(c, a.n, q);
        out << "C" << c.rep << ": " << set_text(c.members) << " "
            << (s.symmetric ? std::string("symmetric") : "asymmetric partner=C" + std::to_string(s.partner_rep)) << "\n";
    }
    if (a.t1.empty()) return kOk;
    const DefiningSet t = DefiningSet::from_reps(a.n, a.q2, a.t1);
    const bool dc = ds_dual_containing(t, q);
    out << "T = " << set_text(t.elements()) << "\n";
    out << "generator " << p_format(gen_from_defining_set(a.n, F, t)) << "\n";
    out << "dual-containing " << yes_no(dc) << "\n";
    return dc ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// gv

struct GvArgs {
    unsigned q = 0, n = 0, k = 0, d = 0;
};

inline int cmd_gv(const GvArgs& a, std::ostream& out) {
    const QuantumParams p{a.n, a.k, a.d, a.q};
    const GvVerdict v = gv_verdict(p);
    const GvSides s = gv_sides(a.n, a.k, a.d, a.q);
    out << "code         " << to_string(p) << "\n";
    out << "k_GV         " << v.k_gv << (v.vacuous ? " (vacuous: no k' >= 2 satisfies the bound)" : "") << "\n";
    out << "verdict      " << (v.beats ? "meets or beats the GV bound" : "below the GV bound") << "\n";
    out << "at k = " << a.k << ": (q^(n-k+2) - 1) = " << s.lhs_scaled << " vs (q^2 - 1) * sum = " << s.rhs_scaled
        << " (bound " << (s.holds() ? "holds" : "fails") << ")\n";
    return v.beats ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
    CodeInput code;
    std::string criterion = "direct";
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    double budget_secs = 60;
    unsigned long long exhaustive_budget = 200'000'000ULL;
    std::string out_path;
    std::optional<unsigned> t_weight;
    std::string t0;
    unsigned threads = 0;
    bool no_bound = false;
    bool timestamps = false;
};

inline std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// t for one trial, drawn from the stream keyed by (seed, trial).
inline Poly draw_t(const FieldPtr& F, unsigned n, std::uint64_t seed, std::uint64_t trial, std::optional<unsigned> weight) {
    CounterRng rng(seed, trial);
    const unsigned q2 = F->order();
    std::vector<std::uint8_t> c(n, 0);
    if (!weight) {
        for (auto& x : c) x = static_cast<std::uint8_t>(rng.below(q2));
    } else {
        const auto perm = random_permutation(n, rng);
        for (unsigned i = 0; i < *weight; ++i) c[perm[i]] = static_cast<std::uint8_t>(1 + rng.below(q2 - 1));
    }
    return Poly(F, std::move(c));
}

inline bool passes(const std::string& criterion, const QuasiCyclicCode& code) {
    if (criterion == "main") return check_thm_main(code);
    if (criterion == "extended") return check_thm_extended(code);
    return check_dual_containing_direct(code);
}

inline int cmd_search(const SearchArgs& a, std::ostream& out) {
    if (a.trials < 1) throw UsageError("--trials must be at least 1");
    const ResolvedCode c = resolve_code(a.code, false);
    if (c.t) throw UsageError("search draws t; use --t0 to inject a fixed t as trial 0");
    if (a.t_weight && *a.t_weight > c.n) throw UsageError("--t-weight exceeds n");
    const FieldPtr& F = c.field;
    std::optional<Poly> t0;
    if (!a.t0.empty()) t0 = parse_flag("--t0", a.t0, F);

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path, std::ios::out | std::ios::trunc);
        if (!file) throw Error("cannot write " + a.out_path);
    }
    std::ostream& sink = a.out_path.empty() ? out : file;

    const unsigned threads = detail::resolve_threads(a.threads);
    // Whole trials run in parallel; a trial's own distance search is serial
    // unless there are fewer trials than workers.
    const unsigned inner_threads = a.trials >= threads ? 1 : threads;
    std::uint64_t survivors = 0, quantum = 0, beats = 0;
    constexpr std::uint64_t kChunk = 256;
    for (std::uint64_t base = 0; base < a.trials; base += kChunk) {
        const std::uint64_t count = std::min(kChunk, a.trials - base);
        std::vector<std::optional<VerifyReport>> results(count);
        detail::parallel_for(count, threads, [&](std::size_t i) {
            const std::uint64_t trial = base + i;
            const Poly t = (trial == 0 && t0) ? *t0 : draw_t(F, c.n, a.seed, trial, a.t_weight);
            const QuasiCyclicCode code = qc_build(c.n, F, c.g1, c.g2, t);
            if (!passes(a.criterion, code)) return;
            VerifyOptions o;
            o.bound = !a.no_bound;
            o.budget_secs = a.budget_secs;
            o.bound_budget_secs = a.budget_secs;
            o.exhaustive_budget = a.exhaustive_budget;
            o.threads = inner_threads;
            o.seed = a.seed;
            results[i] = verify_code(F->order(), c.n, c.g1, c.g2, t, o);
        });
        for (std::size_t i = 0; i < count; ++i) {
            if (!results[i]) continue;
            const VerifyReport& r = *results[i];
            ++survivors;
            if (r.quantum) ++quantum;
            if (r.gv && r.gv->beats && !r.gv->vacuous) ++beats;
            json rec{{"trial", base + i}, {"seed", a.seed}, {"criterion", a.criterion}};
            if (a.timestamps) rec["timestamp"] = utc_timestamp();
            const json body = to_json(r);
            for (const auto& [key, value] : body.items()) rec[key] = value;
            sink << rec.dump() << "\n";
        }
        sink.flush();
    }
    const json summary{{"summary",
                        {{"trials", a.trials},
                         {"seed", a.seed},
                         {"criterion", a.criterion},
                         {"survivors", survivors},
                         {"quantum_codes", quantum},
                         {"beats_gv_nonvacuous", beats}}}};
    sink << summary.dump() << "\n";
    if (!a.out_path.empty()) {
        file.close();
        if (!file) throw Error("error writing " + a.out_path);
        out << summary.dump() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// tables

enum class Verdict { pass, erratum, partial, fail };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::erratum: return "ERRATUM";
        case Verdict::partial: return "PARTIAL";
        case Verdict::fail: return "FAIL";
    }
    return "?";
}

inline Verdict worst(Verdict a, Verdict b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

struct TableOptions {
    double budget_secs = 60;
    unsigned long long exhaustive_budget = 200'000'000ULL;
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

struct RowOutcome {
    std::string id;
    int table = 0;
    std::optional<Verdict> classical, quantum, bound, propagation, gv;
    Verdict overall = Verdict::pass;
    std::optional<VerifyReport> report;
    std::vector<QuantumParams> path;
    std::vector<std::string> notes;
};

/// claimed distance against a certified interval
inline Verdict compare_distance(unsigned claimed, unsigned lower, unsigned upper) {
    if (lower == upper) return claimed == lower ? Verdict::pass : Verdict::fail;
    return (lower <= claimed && claimed <= upper) ? Verdict::partial : Verdict::fail;
}

inline Verdict compare_nkd(unsigned n, unsigned k, unsigned dl, unsigned du, unsigned cn, unsigned ck, std::optional<unsigned> cd) {
    if (n != cn || k != ck) return Verdict::fail;
    return cd ? compare_distance(*cd, dl, du) : Verdict::pass;
}

inline RowOutcome evaluate_row(const Fixture& f, const std::vector<QuantumParams>& base, const TableOptions& opt) {
    RowOutcome o;
    o.id = f.id;
    o.table = f.table;
    if (!f.has_code()) {
        if (!f.claimed_quantum) throw Error("fixture " + f.id + " has neither a code nor quantum parameters");
        const auto& c = *f.claimed_quantum;
        const unsigned q = field_make(f.q2)->q();
        o.path = propagation_path(base, QuantumParams{c[0], c[1], c[2], q});
        o.propagation = o.path.empty() ? Verdict::fail : Verdict::pass;
        o.overall = *o.propagation;
        return o;
    }

    VerifyOptions vo;
    const bool want_d = f.claimed_nkd && (*f.claimed_nkd)[2].has_value();
    vo.distance = want_d;
    vo.bound = f.claimed_bound.has_value();
    vo.budget_secs = opt.budget_secs;
    vo.bound_budget_secs = opt.budget_secs;
    vo.exhaustive_budget = opt.exhaustive_budget;
    vo.threads = opt.threads;
    vo.seed = opt.seed;
    const FieldPtr F = field_make(f.q2);
    o.report = verify_code(f.q2, *f.n, p_parse(*f.g1, F), p_parse(*f.g2, F), p_parse(*f.t, F), vo);
    const VerifyReport& r = *o.report;

    Verdict overall = r.direct ? Verdict::pass : Verdict::fail;
    if (!r.direct) o.notes.push_back("not Hermitian dual-containing");

    if (f.claimed_nkd) {
        const auto& c = *f.claimed_nkd;
        Verdict v = compare_nkd(2 * r.n, r.k, r.d_lower, r.d_upper, *c[0], *c[1], c[2]);
        if (v == Verdict::fail && f.erratum_nkd) {
            const auto& e = *f.erratum_nkd;
            if (compare_nkd(2 * r.n, r.k, r.d_lower, r.d_upper, e[0], e[1], e[2]) != Verdict::fail) v = Verdict::erratum;
        }
        if (v == Verdict::partial) o.notes.push_back("d in " + format_distance(r.d_lower, r.d_upper));
        o.classical = v;
        overall = worst(overall, v);
    }
    if (f.claimed_bound) {
        const ThmBound& b = *r.bound;
        o.bound = compare_distance(*f.claimed_bound, b.lower, b.upper);
        if (*o.bound != Verdict::pass) o.notes.push_back("bound in " + format_distance(b.lower, b.upper));
        overall = worst(overall, *o.bound);
    }
    if (f.claimed_quantum) {
        const auto& c = *f.claimed_quantum;
        auto judge = [&](const std::vector<unsigned>& claim) {
            if (!r.quantum) return Verdict::fail;
            return compare_nkd(r.quantum->n, r.quantum->k, r.d_lower, r.d_upper, claim[0], claim[1], claim[2]);
        };
        Verdict v = judge(c);
        if (v == Verdict::fail && f.erratum_quantum && judge(*f.erratum_quantum) != Verdict::fail) v = Verdict::erratum;
        // A distance certified only from below still supports the claimed code.
        if (v == Verdict::partial && f.claimed_bound && r.d_lower >= c[2]) v = Verdict::pass;
        o.quantum = v;
        overall = worst(overall, v);
        if (f.quantum_table) {
            const auto& claim = (v == Verdict::erratum) ? *f.erratum_quantum : c;
            const GvVerdict g = gv_verdict(QuantumParams{claim[0], claim[1], claim[2], r.q()});
            o.gv = g.beats ? Verdict::pass : Verdict::fail;
            if (g.vacuous) o.notes.push_back("GV vacuous");
            overall = worst(overall, *o.gv);
        }
    }
    o.overall = overall;
    return o;
}

inline std::string row_text(const RowOutcome& o) {
    std::ostringstream s;
    s << std::left << std::setw(10) << o.id << std::setw(8) << to_string(o.overall);
    auto field = [&](const char* name, const std::optional<Verdict>& v) {
        if (v) s << " " << name << "=" << to_string(*v);
    };
    field("classical", o.classical);
    field("bound", o.bound);
    field("quantum", o.quantum);
    field("gv", o.gv);
    field("propagation", o.propagation);
    if (o.report) {
        s << "  " << classical_text(*o.report);
        if (o.report->quantum) s << " -> " << quantum_text(*o.report);
        if (o.report->gv && !o.report->gv->vacuous) s << " k_GV=" << o.report->gv->k_gv;
    }
    if (!o.path.empty()) {
        s << "  ";
        for (std::size_t i = 0; i < o.path.size(); ++i) s << (i ? " -> " : "") << to_string(o.path[i]);
    }
    for (const auto& n : o.notes) s << "  [" << n << "]";
    return s.str();
}

inline json row_json(const RowOutcome& o) {
    auto v = [](const std::optional<Verdict>& x) { return x ? json(to_string(*x)) : json(nullptr); };
    json j{{"id", o.id},
           {"table", o.table},
           {"overall", to_string(o.overall)},
           {"classical", v(o.classical)},
           {"bound", v(o.bound)},
           {"quantum", v(o.quantum)},
           {"gv", v(o.gv)},
           {"propagation", v(o.propagation)}};
    if (!o.path.empty()) {
        json p = json::array();
        for (const auto& x : o.path) p.push_back(to_string(x));
        j["path"] = p;
    }
    if (!o.notes.empty()) j["notes"] = o.notes;
    if (o.report) j["report"] = to_json(*o.report);
    return j;
}

struct TablesArgs {
    std::string fixtures = default_fixture_path();
    std::vector<int> tables;
    std::vector<std::string> ids;
    TableOptions opt;
    bool json = false;
};

inline int cmd_tables(const TablesArgs& a, std::ostream& out) {
    const auto rows = load_fixtures(a.fixtures);
    const auto base = propagation_base(rows);
    std::map<Verdict, unsigned> counts;
    unsigned selected = 0;
    for (const auto& f : rows) {
        if (!a.tables.empty() && std::find(a.tables.begin(), a.tables.end(), f.table) == a.tables.end()) continue;
        if (!a.ids.empty() && std::find(a.ids.begin(), a.ids.end(), f.id) == a.ids.end()) continue;
        ++selected;
        const RowOutcome o = evaluate_row(f, base, a.opt);
        ++counts[o.overall];
        out << (a.json ? row_json(o).dump() : row_text(o)) << "\n";
        out.flush();
    }
    if (selected == 0) throw UsageError("no fixture rows selected");
    out << "rows " << selected;
    for (auto v : {Verdict::pass, Verdict::partial, Verdict::erratum, Verdict::fail}) out << "  " << to_string(v) << " " << counts[v];
    out << "\n";
    return counts[Verdict::fail] ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quasi-cyclic codes over GF(q^2): Hermitian dual containment, distances and quantum codes", "qcq"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check one code C(g1, g2, t)");
    add_code_options(verify, va.code, true);
    verify->add_option("--budget-secs", va.budget_secs, "time budget for each distance computation")->capture_default_str();
    verify->add_option("--exhaustive-budget", va.exhaustive_budget, "largest message space enumerated exhaustively")
        ->capture_default_str();
    verify->add_option("--threads", va.threads, "worker threads, 0 for all cores")->capture_default_str();
    verify->add_option("--seed", va.seed, "seed for information-set sampling")->capture_default_str();
    verify->add_flag("--no-distance", va.no_distance, "skip the distance search");
    verify->add_flag("--no-bound", va.no_bound, "skip the seven-case lower bound");
    verify->add_flag("--json", va.json, "print one JSON record");
    verify->add_flag("--progress", va.progress, "report distance search progress on stderr");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "random search over t for fixed g1, g2");
    add_code_options(search, sa.code, false);
    search->add_option("--criterion", sa.criterion, "filter applied to each trial")
        ->check(CLI::IsMember({"main", "extended", "direct"}))
        ->capture_default_str();
    search->add_option("--trials", sa.trials, "number of trials")->required();
    search->add_option("--seed", sa.seed, "base seed; trial i uses the stream (seed, i)")->capture_default_str();
    search->add_option("--budget-secs", sa.budget_secs, "time budget for each distance computation")->capture_default_str();
    search->add_option("--exhaustive-budget", sa.exhaustive_budget, "largest message space enumerated exhaustively")
        ->capture_default_str();
    search->add_option("--out", sa.out_path, "write JSON lines here instead of stdout");
    search->add_option("--t-weight", sa.t_weight, "draw t with exactly this many nonzero coefficients");
    search->add_option("--t0", sa.t0, "use this t for trial 0");
    search->add_option("--threads", sa.threads, "worker threads, 0 for all cores")->capture_default_str();
    search->add_flag("--no-bound", sa.no_bound, "skip the seven-case lower bound");
    search->add_flag("--timestamps", sa.timestamps, "add a UTC timestamp to each record (breaks byte-identical reruns)");

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "seven-case lower bound on the minimum distance");
    add_code_options(bound, ba.code, true);
    bound->add_option("--budget-secs", ba.budget_secs, "time budget for each constituent cyclic code")->capture_default_str();
    bound->add_option("--threads", ba.threads, "worker threads, 0 for all cores")->capture_default_str();
    bound->add_option("--seed", ba.seed, "seed for information-set sampling")->capture_default_str();
    bound->add_flag("--json", ba.json, "print one JSON record");

    CosetArgs ca;
    auto* cosets = app.add_subcommand("cosets", "q^2-cyclotomic cosets modulo n");
    cosets->add_option("--q2", ca.q2, "field order q^2")->required();
    cosets->add_option("--n", ca.n, "modulus")->required();
    cosets->add_option("--t1", ca.t1, "defining set to test for dual containment")->delimiter(',');

    GvArgs ga;
    auto* gv = app.add_subcommand("gv", "quantum Gilbert-Varshamov check for [[n,k,d]]_q");
    gv->add_option("--q", ga.q, "q")->required();
    gv->add_option("--n", ga.n, "length")->required();
    gv->add_option("--k", ga.k, "logical dimension")->required();
    gv->add_option("--d", ga.d, "minimum distance")->required();

    TablesArgs ta;
    auto* tables = app.add_subcommand("tables", "re-check every fixture row against its claimed parameters");
    tables->add_option("--fixtures", ta.fixtures, "fixture file")->capture_default_str();
    tables->add_option("--table", ta.tables, "only these tables (0 = worked examples)")->delimiter(',');
    tables->add_option("--id", ta.ids, "only these row ids")->delimiter(',');
    tables->add_option("--budget-secs", ta.opt.budget_secs, "time budget for each distance computation")->capture_default_str();
    tables->add_option("--exhaustive-budget", ta.opt.exhaustive_budget, "largest message space enumerated exhaustively")
        ->capture_default_str();
    tables->add_option("--threads", ta.opt.threads, "worker threads, 0 for all cores")->capture_default_str();
    tables->add_option("--seed", ta.opt.seed, "seed for information-set sampling")->capture_default_str();
    tables->add_flag("--json", ta.json, "one JSON object per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify) return cmd_verify(va, out, err);
        if (*search) return cmd_search(sa, out);
        if (*bound) return cmd_bound(ba, out);
        if (*cosets) return cmd_cosets(ca, out);
        if (*gv) return cmd_gv(ga, out);
        if (*tables) return cmd_tables(ta, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qcq::cli
