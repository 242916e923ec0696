#pragma once

// End-to-end verification of one C(g1, g2, t): structure, dual containment,
// distance, bound, quantum parameters and GV verdict; JSON records and the
// bundled fixture file.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcq/distance.hpp"
#include "qcq/qc.hpp"
#include "qcq/quantum.hpp"

namespace qcq {

using json = nlohmann::ordered_json;

struct VerifyOptions {
    bool distance = true;
    bool bound = true;
    unsigned long long exhaustive_budget = 200'000'000ULL;
    double budget_secs = 60;        ///< distance
    double bound_budget_secs = 60;  ///< per constituent code of the bound
    unsigned threads = 0;
    std::uint64_t seed = 1;
    ProgressHook progress;
};

struct VerifyReport {
    unsigned q2 = 0;
    unsigned n = 0;  ///< block length; the code has length 2n
    std::string g1, g2, t;

    unsigned k = 0;
    unsigned expected_k = 0;
    unsigned rank_g0 = 0;
    bool prop_dims = false;

    bool direct = false;
    bool c0_certificate = false;
    bool thm_main = false;
    bool thm_extended = false;
    bool thm_extended_divisibility = false;

    std::optional<DistanceResult> distance;
    std::optional<ThmBound> bound;
    unsigned d_lower = 1;  ///< combined from the distance search and the bound
    unsigned d_upper = kInfiniteDistance;
    std::string d_lower_source;

    CodeParams classical;
    std::optional<QuantumParams> quantum;
    std::string quantum_note;
    std::optional<GvVerdict> gv;

    [[nodiscard]] unsigned q() const { return field_make(q2)->q(); }
    [[nodiscard]] bool d_exact() const { return d_lower == d_upper; }
};

inline std::string format_distance(unsigned lower, unsigned upper) {
    auto s = [](unsigned v) { return v == kInfiniteDistance ? std::string("inf") : std::to_string(v); };
    if (lower == upper) return s(lower);
    return "[" + s(lower) + "," + s(upper) + "]";
}

inline VerifyReport verify_code(unsigned q2, unsigned n, const Poly& g1, const Poly& g2, const Poly& t,
                                const VerifyOptions& opts = {}) {
    const FieldPtr F = field_make(q2);
    const QuasiCyclicCode code = qc_build(n, F, g1, g2, t);
    VerifyReport r;
    r.q2 = q2;
    r.n = n;
    r.g1 = p_format(code.g1(), RunStyle::braced);
    r.g2 = p_format(code.g2(), RunStyle::braced);
    r.t = p_format(code.t(), RunStyle::braced);
    r.k = qc_dim(code);
    r.expected_k = code.expected_dim();
    r.rank_g0 = static_cast<unsigned>(code.G0().rank());
    r.prop_dims = check_prop_dims(code);
    r.direct = check_dual_containing_direct(code);
    r.c0_certificate = check_c0_certificate(code);
    r.thm_main = check_thm_main(code);
    r.thm_extended_divisibility = check_thm_extended_divisibility(code);
    r.thm_extended = r.thm_extended_divisibility && r.prop_dims;

    if (opts.distance && r.k > 0) {
        AutoOptions a;
        a.exhaustive_budget = opts.exhaustive_budget;
        a.time_budget = opts.budget_secs;
        a.threads = opts.threads;
        a.seed = opts.seed;
        a.progress = opts.progress;
        r.distance = dmin_auto(code, a);
        r.d_lower = r.distance->lower;
        r.d_upper = r.distance->upper;
        r.d_lower_source = "distance";
    }
    if (opts.bound) {
        BoundOptions b;
        b.distance.exhaustive_budget = opts.exhaustive_budget;
        b.distance.time_budget = opts.bound_budget_secs;
        b.distance.threads = opts.threads;
        b.distance.seed = opts.seed;
        r.bound = thm_lower_bound(n, code.g1(), code.g2(), code.t(), b);
        if (r.bound->lower != kInfiniteDistance && r.bound->lower > r.d_lower) {
            r.d_lower = std::min(r.bound->lower, r.d_upper);
            r.d_lower_source = "bound";
        }
    }

    r.classical.n = 2 * n;
    r.classical.k = r.k;
    r.classical.d = r.d_lower;
    r.classical.d_status = r.d_exact() ? DistanceStatus::exact : DistanceStatus::lower_bound;
    if (!r.direct) {
        r.quantum_note = "not Hermitian dual-containing";
    } else if (2 * r.k < 2 * n) {
        r.quantum_note = "k < n gives no quantum code";
    } else if (r.k == 0) {
        r.quantum_note = "zero code";
    } else {
        r.quantum = hermitian_construct(r.classical, true, r.q());
        if (r.quantum->n > 2 && r.quantum->d >= 2) r.gv = gv_verdict(*r.quantum);
    }
    return r;
}

inline VerifyReport verify_code(unsigned q2, unsigned n, const std::string& g1, const std::string& g2, const std::string& t,
                                const VerifyOptions& opts = {}) {
    const FieldPtr F = field_make(q2);
    return verify_code(q2, n, p_parse(g1, F), p_parse(g2, F), p_parse(t, F), opts);
}

namespace detail {
inline json distance_value(unsigned v) {
    if (v == kInfiniteDistance) return "inf";
    return v;
}
}  // namespace detail

inline json to_json(const DistanceResult& d) {
    return json{{"lower", detail::distance_value(d.lower)},
                {"upper", detail::distance_value(d.upper)},
                {"exact", d.exact()},
                {"method", d.method},
                {"timed_out", d.timed_out}};
}

inline json to_json(const ThmBound& b) {
    json cases = json::array();
    auto one = [](const BoundCase& c) {
        return json{{"case", c.index},
                    {"formula", c.formula},
                    {"lower", detail::distance_value(c.lower)},
                    {"upper", detail::distance_value(c.upper)}};
    };
    for (const auto& c : b.cases) cases.push_back(one(c));
    return json{{"lower", detail::distance_value(b.lower)},
                {"upper", detail::distance_value(b.upper)},
                {"exact", b.exact()},
                {"cases", cases},
                {"case5_variants", json::array({one(b.case5_double_left), one(b.case5_double_right)})}};
}

inline json to_json(const QuantumParams& p) {
    return json{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"q", p.q}, {"d_status", to_string(p.d_status)}, {"pure", p.pure}};
}

inline json to_json(const VerifyReport& r) {
    json certified = json::array();
    if (r.thm_main) certified.push_back("thm_main");
    if (r.thm_extended) certified.push_back("thm_extended");
    if (r.direct) certified.push_back("direct");
    json j{{"q2", r.q2},
           {"n", r.n},
           {"length", 2 * r.n},
           {"g1", r.g1},
           {"g2", r.g2},
           {"t", r.t},
           {"dims", {{"k", r.k}, {"expected_k", r.expected_k}, {"rank_G0", r.rank_g0}, {"prop_dims", r.prop_dims}}},
           {"dual_containing",
            {{"verdict", r.direct},
             {"certified_by", certified},
             {"direct", r.direct},
             {"c0_certificate", r.c0_certificate},
             {"thm_main", r.thm_main},
             {"thm_extended", r.thm_extended},
             {"thm_extended_divisibility", r.thm_extended_divisibility}}}};
    j["distance"] = r.distance ? to_json(*r.distance) : json(nullptr);
    j["thm_bound"] = r.bound ? to_json(*r.bound) : json(nullptr);
    j["d"] = {{"lower", detail::distance_value(r.d_lower)},
              {"upper", detail::distance_value(r.d_upper)},
              {"lower_source", r.d_lower_source}};
    j["quantum"] = r.quantum ? to_json(*r.quantum) : json(nullptr);
    if (!r.quantum_note.empty()) j["quantum_note"] = r.quantum_note;
    j["gv"] = r.gv ? json{{"k_gv", r.gv->k_gv}, {"beats", r.gv->beats}, {"vacuous", r.gv->vacuous}} : json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// Fixtures

struct Fixture {
    std::string id;
    int table = 0;  ///< 0 for the worked examples
    unsigned q2 = 0;
    std::optional<unsigned> n;
    std::optional<std::string> g1, g2, t;
    std::optional<std::vector<std::optional<unsigned>>> claimed_nkd;
    std::optional<std::vector<unsigned>> claimed_quantum;
    std::optional<unsigned> claimed_bound;
    std::optional<int> quantum_table;
    std::optional<std::vector<unsigned>> erratum_nkd;
    std::optional<std::vector<unsigned>> erratum_quantum;
    std::string note;

    [[nodiscard]] bool has_code() const { return g1.has_value(); }
};

inline Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.id = j.at("id").get<std::string>();
    f.table = j.at("table").get<int>();
    f.q2 = j.at("q2").get<unsigned>();
    auto opt_str = [&](const char* key) -> std::optional<std::string> {
        if (!j.contains(key) || j[key].is_null()) return std::nullopt;
        return j[key].get<std::string>();
    };
    if (j.contains("n") && !j["n"].is_null()) f.n = j["n"].get<unsigned>();
    f.g1 = opt_str("g1");
    f.g2 = opt_str("g2");
    f.t = opt_str("t");
    if (j.contains("claimed_nkd") && !j["claimed_nkd"].is_null()) {
        std::vector<std::optional<unsigned>> v;
        for (const auto& x : j["claimed_nkd"]) v.push_back(x.is_null() ? std::nullopt : std::optional<unsigned>(x.get<unsigned>()));
        if (v.size() != 3) throw ParseError("claimed_nkd must have three entries", 0);
        f.claimed_nkd = v;
    }
    if (j.contains("claimed_quantum") && !j["claimed_quantum"].is_null()) {
        f.claimed_quantum = j["claimed_quantum"].get<std::vector<unsigned>>();
        if (f.claimed_quantum->size() != 3) throw ParseError("claimed_quantum must have three entries", 0);
    }
    if (j.contains("claimed_bound")) f.claimed_bound = j["claimed_bound"].get<unsigned>();
    if (j.contains("quantum_table")) f.quantum_table = j["quantum_table"].get<int>();
    if (j.contains("erratum")) {
        const auto& e = j["erratum"];
        if (e.contains("claimed_nkd")) f.erratum_nkd = e["claimed_nkd"].get<std::vector<unsigned>>();
        if (e.contains("claimed_quantum")) f.erratum_quantum = e["claimed_quantum"].get<std::vector<unsigned>>();
        if (e.contains("note")) f.note = e["note"].get<std::string>();
    }
    if (j.contains("note")) f.note = j["note"].get<std::string>();
    if (f.has_code() && (!f.n || !f.g2 || !f.t)) throw ParseError("fixture " + f.id + " is missing n, g2 or t", 0);
    return f;
}

inline std::vector<Fixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path);
    std::vector<Fixture> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(fixture_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), 0);
        }
    }
    if (out.empty()) throw Error("fixture file " + path + " has no rows");
    return out;
}

inline const Fixture& find_fixture(const std::vector<Fixture>& rows, const std::string& id) {
    for (const auto& f : rows) {
        if (f.id == id) return f;
    }
    throw DomainError("no fixture with id " + id);
}

/// Base codes for the propagation table: the quantum codes of the worked examples.
inline std::vector<QuantumParams> propagation_base(const std::vector<Fixture>& rows) {
    std::vector<QuantumParams> base;
    for (const auto& f : rows) {
        if (f.table == 0 && f.q2 == 4 && f.claimed_quantum && !f.claimed_bound) {
            const auto& c = *f.claimed_quantum;
            base.push_back(QuantumParams{c[0], c[1], c[2], 2});
        }
    }
    return base;
}

}  // namespace qcq
