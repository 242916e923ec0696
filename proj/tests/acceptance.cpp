// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria. Set QCQ_ACCEPT_SKIP_EXACT_E1=1 to skip the exact distance
// certificate of the first example (about a minute on one core).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "instances.hpp"
#include "qcq/cyclic.hpp"
#include "qcq/distance.hpp"
#include "qcq/quantum.hpp"

#ifndef QCQ_CLI_PATH
#error "QCQ_CLI_PATH must name the qcq executable"
#endif

using namespace qcq;

namespace {

// Tolerances and budgets, all in seconds unless noted.
constexpr double kSampleBudget = 60;             // 1: weight-9 word by sampling
constexpr double kSmallExactBudget = 120;        // 3: per code
constexpr double kDirectCheckBudget = 10;        // 4: per fixture row
constexpr double kBoundConstituentBudget = 14400;  // 5: per constituent cyclic code
constexpr int kBoundInstances = 200;             // 6
constexpr unsigned long long kBoundWords = 5'000'000;  // 6: largest message space drawn
constexpr double kBoundTotal = 600;              // 6
constexpr int kSoundnessInstances = 500;         // 7: per property
constexpr double kSoundnessTotal = 900;          // 7
constexpr double kGvRowBudget = 1;               // 8: per row
constexpr double kClosureBudget = 1;             // 9
constexpr int kParallelCodes = 50;               // 10

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << detail << std::endl;
    failures += !pass;
}

void guarded(const std::string& id, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

oracle::Rows rows_of(const Matrix& m) {
    oracle::Rows out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
    return out;
}

std::string fmt(double secs) {
    std::ostringstream s;
    s.precision(secs < 10 ? 2 : 1);
    s << std::fixed << secs << "s";
    return s.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void criterion1() {
    const auto c = fixture_code(fixture("E1"));
    const unsigned k = qc_dim(c);
    const bool direct = check_dual_containing_direct(c);
    SampleOptions so;
    so.target = 9;
    so.time_budget = kSampleBudget;
    so.seed = 1;
    const auto t1 = Clock::now();
    const auto s = low_weight_search(c.G(), so);
    const double sample_secs = since(t1);
    CodeParams cp;
    cp.n = 82;
    cp.k = k;
    cp.d = 9;
    const std::string q = direct ? to_string(hermitian_construct(cp, true, 2)) : "none";
    const bool pass = k == 62 && direct && q == "[[82,42,9]]_2" && s.upper == 9 && sample_secs <= kSampleBudget;
    report("1", pass,
           "dim " + std::to_string(k) + ", direct " + (direct ? "true" : "false") + ", " + q + ", weight-" +
               std::to_string(s.upper) + " word in " + fmt(sample_secs) + " (limit " + fmt(kSampleBudget) + ")");

    const char* skip = std::getenv("QCQ_ACCEPT_SKIP_EXACT_E1");
    if (skip && std::string(skip) == "1") {
        std::cout << "SKIP  criterion 1+  exact d by column-dependency search (QCQ_ACCEPT_SKIP_EXACT_E1=1)" << std::endl;
        return;
    }
    // Optional extension. The exact certificate comes from the column-dependency
    // search, which is far cheaper than Brouwer-Zimmermann at this size.
    AutoOptions ao;
    ao.time_budget = 3600;
    ao.symmetry = Symmetry::quasi_cyclic2;
    const auto t2 = Clock::now();
    const auto d = dmin_auto(c, ao);
    report("1+", d.exact() && d.upper == 9,
           "exact d = " + format_distance(d.lower, d.upper) + " by " + d.method + " in " + fmt(since(t2)));
}

void criterion2() {
    const auto F = field_make(4);
    const auto g1 = p_format(gen_from_defining_set(41, F, DefiningSet::from_reps(41, 4, {1})), RunStyle::braced);
    const auto g3 = p_format(gen_from_defining_set(41, F, DefiningSet::from_reps(41, 4, {3})), RunStyle::braced);
    report("2", g1 == "10320102301" && g3 == "12^{3}1312^{3}1", "T={C1} -> " + g1 + ", T={C3} -> " + g3);
}

void criterion3() {
    std::string detail;
    bool pass = true;
    auto one = [&](const char* id, unsigned want, bool bz) {
        const auto c = fixture_code(fixture(id));
        const auto t0 = Clock::now();
        DistanceOptions o;
        o.time_budget = kSmallExactBudget;
        const auto r = bz ? dmin_bz(c.G(), o) : dmin_exhaustive(c.G(), 200'000'000ULL, o);
        const double secs = since(t0);
        const bool ok = r.exact() && r.upper == want && secs <= kSmallExactBudget;
        pass = pass && ok;
        detail += std::string(id) + " d=" + format_distance(r.lower, r.upper) + " (" + r.method + ", " + fmt(secs) + ") ";
    };
    one("T2-10-7", 4, false);
    one("T4-8-5", 4, false);
    one("T3-14-8", 6, true);
    report("3", pass, detail);
}

void criterion4() {
    int rows = 0, bad = 0;
    double worst = 0;
    std::string worst_id, failed;
    for (const auto& f : test_fixtures()) {
        if (!f.has_code()) continue;
        const auto t0 = Clock::now();
        const bool ok = check_dual_containing_direct(fixture_code(f));
        const double secs = since(t0);
        if (secs > worst) {
            worst = secs;
            worst_id = f.id;
        }
        ++rows;
        if (!ok || secs > kDirectCheckBudget) {
            ++bad;
            failed += " " + f.id;
        }
    }
    report("4", bad == 0 && rows > 0,
           std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows dual-containing, slowest " + worst_id + " " +
               fmt(worst) + (failed.empty() ? "" : ", failed:" + failed));
}

void criterion5() {
    bool pass = true;
    std::string detail;
    for (auto [id, want] : {std::pair<const char*, unsigned>{"E5", 6}, {"E6", 5}}) {
        const auto c = fixture_code(fixture(id));
        BoundOptions o;
        o.distance.time_budget = kBoundConstituentBudget;
        const auto t0 = Clock::now();
        const auto b = thm_lower_bound(c.n(), c.g1(), c.g2(), c.t(), o);
        // An unfinished constituent leaves an interval; fail only if it excludes the claim.
        pass = pass && b.lower <= want && want <= b.upper;
        detail += std::string(id) + " bound " + format_distance(b.lower, b.upper) + " (claimed " + std::to_string(want) +
                  ", " + fmt(since(t0)) + ") ";
    }
    report("5", pass, detail);
}

void criterion6() {
    std::mt19937_64 rng(6006);
    const auto t0 = Clock::now();
    int violations = 0, nonzero = 0;
    for (int i = 0; i < kBoundInstances; ++i) {
        const Instance in = random_small_instance(rng, {4, 9}, 2, 12, i % 2 == 0, kBoundWords);
        const auto c = in.code();
        const auto b = thm_lower_bound(in.n, in.g1, in.g2, in.t);
        if (qc_dim(c) == 0) {
            violations += b.lower != kInfiniteDistance;
            continue;
        }
        ++nonzero;
        const auto d = dmin_exhaustive(c.G(), kBoundWords);
        violations += b.lower > d.upper;
    }
    const double secs = since(t0);
    report("6", violations == 0 && secs <= kBoundTotal,
           std::to_string(kBoundInstances) + " instances (" + std::to_string(nonzero) + " nonzero), " +
               std::to_string(violations) + " violations, " + fmt(secs));
}

void criterion7() {
    std::mt19937_64 rng(7007);
    const auto t0 = Clock::now();
    int main_hits = 0, ext_hits = 0, one_gen_pos = 0, violations = 0;
    for (int i = 0; i < kSoundnessInstances; ++i) {
        const Instance in = random_instance(rng, {4, 9, 16, 25}, 2, 12, i % 4 != 0);
        const auto c = in.code();
        const bool direct = check_dual_containing_direct(c);
        const bool truth = oracle::dual_containing(*in.F, rows_of(c.G()), 2 * in.n);
        violations += direct != truth;
        if (check_thm_main(c)) {
            ++main_hits;
            violations += !truth;
        }
        if (check_thm_extended(c)) {
            ++ext_hits;
            violations += !truth;
        }
        const Poly f = i % 3 == 0 ? in.t : oracle::random_poly(in.F, in.n, rng);
        const bool gram = oracle::self_orthogonal(*in.F, oracle::pair_shifts(f * in.g1, in.g1, in.n));
        one_gen_pos += gram;
        violations += check_thm_1gen(f, in.g1, in.n) != gram;
    }
    const double secs = since(t0);
    report("7", violations == 0 && main_hits > 0 && ext_hits > 0 && one_gen_pos > 0 && secs <= kSoundnessTotal,
           std::to_string(kSoundnessInstances) + " instances: main true " + std::to_string(main_hits) + ", extended true " +
               std::to_string(ext_hits) + ", 1-generator self-orthogonal " + std::to_string(one_gen_pos) + ", " +
               std::to_string(violations) + " violations, " + fmt(secs));
}

void criterion8() {
    int rows = 0, bad = 0, vacuous = 0;
    std::string failed;
    for (const auto& f : test_fixtures()) {
        if (!f.quantum_table) continue;
        ++rows;
        const auto t0 = Clock::now();
        const unsigned q = field_make(f.q2)->q();
        bool ok = true;
        // The printed row and, where the fixture records one, its corrected form.
        for (const auto* c : {&*f.claimed_quantum, f.erratum_quantum ? &*f.erratum_quantum : nullptr}) {
            if (!c) continue;
            QuantumParams p;
            p.n = (*c)[0];
            p.k = (*c)[1];
            p.d = (*c)[2];
            p.q = q;
            const auto v = gv_verdict(p);
            ok = ok && v.beats;
            vacuous += v.vacuous && c == &*f.claimed_quantum;
        }
        ok = ok && since(t0) <= kGvRowBudget;
        if (!ok) {
            ++bad;
            failed += " " + f.id;
        }
    }
    report("8", bad == 0 && rows > 0,
           std::to_string(rows - bad) + "/" + std::to_string(rows) + " quantum rows meet or beat GV (" +
               std::to_string(vacuous) + " vacuous)" + (failed.empty() ? "" : ", failed:" + failed));
}

void criterion9() {
    const auto t0 = Clock::now();
    const auto base = propagation_base(test_fixtures());
    int rows = 0, reached = 0;
    std::size_t longest = 0;
    for (const auto& f : test_fixtures()) {
        if (f.table != 1) continue;
        ++rows;
        const auto& c = *f.claimed_quantum;
        QuantumParams p;
        p.n = c[0];
        p.k = c[1];
        p.d = c[2];
        p.q = 2;
        const auto path = propagation_path(base, p);
        if (!path.empty()) {
            ++reached;
            longest = std::max(longest, path.size() - 1);
        }
    }
    const double secs = since(t0);
    report("9", rows == 11 && reached == rows && base.size() == 5 && secs <= kClosureBudget,
           std::to_string(reached) + "/" + std::to_string(rows) + " rows reachable from " + std::to_string(base.size()) +
               " base codes, longest chain " + std::to_string(longest) + " steps, " + fmt(secs));
}

void criterion10() {
    const std::string dir = std::filesystem::temp_directory_path().string();
    const std::string base = std::string(QCQ_CLI_PATH) + " search --q2 4 --n 7 --t1 1 --t2 3 --seed 42 --trials 1000";
    const std::string a = dir + "/qcq_accept_a.jsonl", b = dir + "/qcq_accept_b.jsonl", c = dir + "/qcq_accept_c.jsonl";
    const int ra = std::system((base + " --out " + a + " > /dev/null").c_str());
    const int rb = std::system((base + " --out " + b + " > /dev/null").c_str());
    const int rc = std::system((base + " --threads 1 --out " + c + " > /dev/null").c_str());
    const std::string sa = slurp(a), sb = slurp(b), sc = slurp(c);
    const bool files = ra == 0 && rb == 0 && rc == 0 && !sa.empty() && sa == sb && sa == sc;

    std::mt19937_64 rng(1010);
    int agree = 0;
    for (int i = 0; i < kParallelCodes; ++i) {
        const Instance in = random_small_instance(rng, {4, 9, 16, 25}, 3, 12, i % 2 == 0, 2'000'000);
        const auto code = in.code();
        if (qc_dim(code) == 0) {
            --i;
            continue;
        }
        DistanceOptions one, many;
        one.threads = 1;
        many.threads = 4;
        const auto x = dmin_exhaustive(code.G(), 2'000'000, one), y = dmin_exhaustive(code.G(), 2'000'000, many);
        agree += x.upper == y.upper && x.lower == y.lower && x.witness == y.witness;
    }
    report("10", files && agree == kParallelCodes,
           std::string("search output ") + (files ? "byte-identical" : "differs") + " across 3 runs (" +
               std::to_string(sa.size()) + " bytes), dmin_exhaustive 1 vs 4 workers agree on " + std::to_string(agree) +
               "/" + std::to_string(kParallelCodes) + " codes");
}

}  // namespace

int main() {
    guarded("1", criterion1);
    guarded("2", criterion2);
    guarded("3", criterion3);
    guarded("4", criterion4);
    guarded("5", criterion5);
    guarded("6", criterion6);
    guarded("7", criterion7);
    guarded("8", criterion8);
    guarded("9", criterion9);
    guarded("10", criterion10);
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing" << std::endl;
    return failures;
}
