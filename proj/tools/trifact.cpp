// Command-line driver: predicates, oracles, witnesses, orbits, counts.
//
// Exit codes: 0 ok, 1 bad input, 2 disagreement or golden mismatch,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trifact/counts.hpp"
#include "trifact/oracle.hpp"
#include "trifact/orbits.hpp"
#include "trifact/predicate.hpp"
#include "trifact/weyl.hpp"
#include "trifact/witness.hpp"

using namespace trifact;
using nlohmann::json;

namespace {

constexpr int kSchema = 1;

struct Common {
    std::uint64_t budget = 50'000'000;
    unsigned threads = 1;
    bool as_json = false;
    OracleOptions oracle() const { return OracleOptions{budget, threads}; }
};

struct Out {
    json doc;
    std::ostringstream text;
    int code = 0;
};

const char* yesno(bool b) { return b ? "complete" : "incomplete"; }

int exit_for(const Error& e) {
    switch (e.code()) {
        case Errc::TooLarge: return 3;
        case Errc::CertificationFailed: return 2;
        default: return 1;
    }
}

void add_verdict(Out& o, const std::string& name, const json& v, const std::string& line) {
    o.doc["verdicts"][name] = v;
    o.text << "  " << name << ": " << line << "\n";
}

// proj-collinear --------------------------------------------------------------

void run_proj(const Common& c, std::uint64_t q, std::size_t n, std::size_t m, std::size_t k, std::size_t j,
              const std::string& mode, Out& o) {
    ProjParams p = ProjParams::make(q, n, m, k, j);
    o.doc["params"] = to_json(p);
    o.text << "proj-collinear q=" << q << " n=" << n << " m=" << m << " k=" << k << " j=" << j << "\n";
    std::vector<bool> answers;
    if (mode == "predicate" || mode == "all") {
        bool v = thm1_predicate(p);
        answers.push_back(v);
        add_verdict(o, "predicate", {{"complete", v}}, yesno(v));
    }
    if (mode == "oracle" || mode == "all") {
        auto v = collinear_oracle_proj(p, c.oracle());
        answers.push_back(v.complete);
        std::string line = yesno(v.complete);
        if (v.failing_t) line += " (no common line at t=" + std::to_string(*v.failing_t) + ")";
        add_verdict(o, "oracle", to_json(v), line);
    }
    if (mode == "witness" || mode == "all") {
        try {
            auto v = collinear_witness_proj(p);
            answers.push_back(true);
            add_verdict(o, "witness", to_json(v), "complete (" + std::to_string(v.cases) + " certified lines)");
        } catch (const Error& e) {
            if (e.code() != Errc::PredicateFails) throw;
            answers.push_back(false);
            add_verdict(o, "witness", {{"complete", false}, {"method", "witness"}, {"available", false}},
                        "no construction");
        }
    }
    bool agree = std::all_of(answers.begin(), answers.end(), [&](bool b) { return b == answers.front(); });
    o.doc["agree"] = agree;
    if (!agree) {
        o.text << "  DISAGREEMENT\n";
        o.code = 2;
    }
}

// bis-collinear / bis-concurrent ---------------------------------------------

void run_bis_col(const Common& c, const BisParams& p, const std::string& mode, Out& o) {
    o.doc["params"] = to_json(p);
    o.text << "bis-collinear q=" << p.q() << " k=" << p.k << " m=" << p.m << " k1=" << p.k1 << " k2=" << p.k2 << "\n";
    std::vector<bool> answers;
    if (mode == "predicate" || mode == "all") {
        bool v = thm2_predicate(p);
        answers.push_back(v);
        add_verdict(o, "predicate", {{"complete", v}}, yesno(v));
    }
    if (mode == "oracle" || mode == "all") {
        auto v = collinear_oracle_bis(p, BisSearch::SearchOnly, c.oracle());
        answers.push_back(v.complete);
        add_verdict(o, "oracle", to_json(v), yesno(v.complete));
    }
    if (mode == "witness" || mode == "all") {
        const std::size_t tmin = p.m > p.k ? 2 * (p.m - p.k) : 0;
        bool built = true;
        for (std::size_t t = tmin; t < p.m && built; ++t) {
            try {
                bisection_witness(p, t);
            } catch (const Error& e) {
                if (e.code() != Errc::PredicateFails) throw;
                built = false;
            }
        }
        answers.push_back(built);
        add_verdict(o, "witness", {{"complete", built}, {"method", "witness"}},
                    built ? "complete (certified bisections)" : "no construction");
    }
    bool agree = std::all_of(answers.begin(), answers.end(), [&](bool b) { return b == answers.front(); });
    o.doc["agree"] = agree;
    if (!agree) {
        o.text << "  DISAGREEMENT\n";
        o.code = 2;
    }
}

CompletenessVerdict concurrent_by_reps(const Common& c, const BisParams& p, bool use_reps) {
    if (!use_reps || p.k == 1) return concurrent_oracle(p, c.oracle());
    auto orbits = stabiliser_orbits(p.field, p.k, c.budget);
    Bisection b0 = coordinate_bisection(p.field, p.k);
    std::vector<std::pair<Bisection, Bisection>> reps;
    for (auto& r : orbits.representatives) reps.emplace_back(b0, r);
    return concurrent_oracle(p, reps, c.oracle());
}

void run_bis_con(const Common& c, const BisParams& p, const std::string& mode, bool use_reps, Out& o) {
    o.doc["params"] = to_json(p);
    o.text << "bis-concurrent q=" << p.q() << " k=" << p.k << " m=" << p.m << " k1=" << p.k1 << " k2=" << p.k2
           << "\n";
    if (mode == "witness") throw Error(Errc::BadParams, "no witness mode for concurrent completeness");
    std::optional<Resolution> pred;
    std::optional<bool> orc;
    if (mode == "predicate" || mode == "all") {
        pred = thm3_predicate(p);
        std::string name = *pred == Resolution::Unresolved ? "unresolved(paper)" : resolution_name(*pred);
        add_verdict(o, "predicate", {{"resolution", name}}, name);
    }
    if (mode == "oracle" || mode == "all") {
        auto v = concurrent_by_reps(c, p, use_reps);
        orc = v.complete;
        std::string line = yesno(v.complete);
        if (pred && *pred == Resolution::Unresolved) line += " (empirical)";
        add_verdict(o, "oracle", to_json(v), line);
    }
    bool agree = true;
    if (pred && orc && *pred != Resolution::Unresolved) agree = (*pred == Resolution::Complete) == *orc;
    o.doc["agree"] = agree;
    if (!agree) {
        o.text << "  DISAGREEMENT\n";
        o.code = 2;
    }
}

// scan -------------------------------------------------------------------------

std::vector<std::uint64_t> parse_qs(const std::string& s) {
    std::vector<std::uint64_t> qs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            qs.push_back(std::stoull(tok));
        } catch (const std::logic_error&) {
            throw Error(Errc::Parse, "bad --qs entry '" + tok + "'");
        }
        Field::of_order(qs.back());
    }
    if (qs.empty()) throw Error(Errc::Parse, "--qs is empty");
    return qs;
}

template <class Fn>
void for_bis(std::uint64_t q, std::size_t k, Fn fn) {
    for (std::size_t m = 1; m < 2 * k; ++m)
        for (std::size_t k2 = 0; k2 <= k; ++k2)
            for (std::size_t k1 = 0; k1 <= k2; ++k1)
                if (k1 + k2 <= m && !(m > k && k1 < m - k)) fn(BisParams::make(q, k, m, k1, k2));
}

void run_scan(const Common& c, const std::string& family, std::size_t max_n, std::size_t max_k,
              const std::string& qs_text, Out& o) {
    std::size_t rows = 0, mismatches = 0, empirical = 0;
    json table = json::array();
    auto row = [&](json params, std::string pred, std::string orc, bool ok) {
        ++rows;
        if (!ok) ++mismatches;
        o.text << "  " << params.dump() << "  predicate=" << pred << " oracle=" << orc << (ok ? "" : "  MISMATCH")
               << "\n";
        table.push_back({{"params", params}, {"predicate", pred}, {"oracle", orc}, {"ok", ok}});
    };
    o.text << "scan " << family << "\n";
    if (family == "sn") {
        for (std::size_t n = 2; n <= max_n; ++n)
            for (std::size_t m = 1; 2 * m <= n; ++m)
                for (std::size_t k = 1; k < n; ++k)
                    for (std::size_t j = (m + k > n ? m + k - n : 0); j <= std::min(m, k); ++j) {
                        bool a = subset_condition(n, m, k, j), b = subset_geometry_oracle(n, m, k, j);
                        row({{"n", n}, {"m", m}, {"k", k}, {"j", j}}, yesno(a), yesno(b), a == b);
                    }
    } else {
        auto qs = parse_qs(qs_text);
        for (auto q : qs) {
            if (family == "proj") {
                for (std::size_t n = 2; n <= max_n; ++n)
                    for (std::size_t m = 1; m < n; ++m)
                        for (std::size_t k = 1; k < n; ++k)
                            for (std::size_t j = (m + k > n ? m + k - n : 0); j <= std::min(m, k); ++j) {
                                auto p = ProjParams::make(q, n, m, k, j);
                                bool a = thm1_predicate(p), b = collinear_oracle_proj(p, c.oracle()).complete;
                                row(to_json(p), yesno(a), yesno(b), a == b);
                            }
            } else if (family == "bis-col") {
                for (std::size_t k = 1; k <= max_k; ++k)
                    for_bis(q, k, [&](const BisParams& p) {
                        bool a = thm2_predicate(p);
                        bool b = collinear_oracle_bis(p, BisSearch::SearchOnly, c.oracle()).complete;
                        row(to_json(p), yesno(a), yesno(b), a == b);
                    });
            } else if (family == "bis-con") {
                for (std::size_t k = 1; k <= max_k; ++k)
                    for_bis(q, k, [&](const BisParams& p) {
                        Resolution a = thm3_predicate(p);
                        bool b = concurrent_by_reps(c, p, true).complete;
                        if (a == Resolution::Unresolved) {
                            ++empirical;
                            row(to_json(p), "unresolved(paper)", yesno(b), true);
                        } else {
                            row(to_json(p), resolution_name(a), yesno(b), (a == Resolution::Complete) == b);
                        }
                    });
            } else {
                throw Error(Errc::BadParams, "unknown family '" + family + "'");
            }
        }
    }
    o.doc["family"] = family;
    o.doc["rows"] = table;
    o.doc["mismatches"] = mismatches;
    o.doc["unresolved"] = empirical;
    o.text << rows << " parameter sets, " << mismatches << " mismatches";
    if (family == "bis-con") o.text << ", " << empirical << " unresolved(paper) with oracle data";
    o.text << "\n";
    if (mismatches) o.code = 2;
}

// orbits, counts, weyl, induction ---------------------------------------------

void run_orbits(const Common& c, std::uint64_t q, std::size_t k, bool golden, const std::string& golden_file, Out& o) {
    Field f = Field::of_order(q);
    auto r = stabiliser_orbits(f, k, c.budget);
    const std::string ms = multiset_text(r.report.lengths);
    o.doc["params"] = {{"q", q}, {"k", k}};
    o.doc["orbits"] = r.report.count();
    o.doc["total"] = r.report.total;
    o.doc["lengths"] = ms;
    json reps = json::array();
    for (auto& b : r.representatives) reps.push_back(to_json(b));
    o.doc["representatives"] = reps;
    o.text << "stabiliser of the coordinate bisection of V(" << 2 * k << "," << q << "): " << r.report.count()
           << (r.report.count() == 1 ? " orbit" : " orbits") << " on the other " << r.report.total << " bisections\n  " << ms << "\n";
    if (!golden) return;
    std::optional<std::vector<std::uint64_t>> expect;
    if (!golden_file.empty()) {
        std::ifstream in(golden_file);
        if (!in) throw Error(Errc::NotFound, "cannot read " + golden_file);
        std::stringstream ss;
        ss << in.rdbuf();
        expect = parse_multiset(ss.str());
    } else {
        expect = golden_orbit_lengths(q, k);
    }
    if (!expect) throw Error(Errc::NotFound, "no golden file for this (q, k)");
    bool ok = *expect == r.report.lengths;
    o.doc["golden"] = ok;
    o.text << "  golden: " << (ok ? "match" : "MISMATCH, expected " + multiset_text(*expect)) << "\n";
    if (!ok) o.code = 2;
}

void run_counts(std::size_t k, std::uint64_t q, std::size_t digits, Out& o) {
    if (k < 1) throw Error(Errc::BadRange, "need k >= 1");
    Field::of_order(q);
    o.doc["params"] = {{"q", q}, {"k", k}};
    o.text << "counts q=" << q << " k=" << k << "\n";
    o.text << "  a  m  H(a,k,q)  ~  lower bound  ~  H > 1/2\n";
    json rows = json::array();
    for (std::size_t a = 1; a <= k; ++a) {
        Rat h = h_value(a, k, q);
        const std::size_t m = k - a + 1;
        bool suff = restricted_movement_sufficient(m, k, q);
        json row{{"a", a}, {"m", m}, {"H", to_text(h)}, {"H_decimal", to_decimal(h, digits)}, {"sufficient", suff}};
        o.text << "  " << a << "  " << m << "  " << to_text(h) << "  " << to_decimal(h, digits);
        if (a >= 2) {
            Rat lb = h_lower_bound(a, k, q);
            row["bound"] = to_text(lb);
            row["bound_decimal"] = to_decimal(lb, digits);
            o.text << "  " << to_text(lb) << "  " << to_decimal(lb, digits);
        } else {
            o.text << "  -  -";
        }
        o.text << "  " << (suff ? "yes" : "no") << "\n";
        rows.push_back(row);
    }
    o.doc["rows"] = rows;
    o.doc["gaussian_2k_k"] = gaussian(2 * k, k, q).str();
    o.text << "  [2k,k]_q = " << gaussian(2 * k, k, q).str() << "\n";
}

void run_weyl(std::size_t n, std::size_t m, std::size_t k, std::size_t j, Out& o) {
    SubsetGeom::make(n, m, k, j);
    std::vector<std::size_t> bm, bk;
    for (std::size_t i = 1; i <= m; ++i) bm.push_back(i);
    for (std::size_t i = 1; i <= k; ++i) bk.push_back(i);
    bool closed = subset_condition(n, m, k, j), check = weyl_triple_check(n, m, k, j);
    o.doc["params"] = {{"n", n}, {"m", m}, {"k", k}, {"j", j}};
    o.doc["double_cosets"] = double_coset_count(n, bm, bk);
    o.doc["factorisation"] = check;
    o.doc["closed_form"] = closed;
    o.doc["agree"] = closed == check;
    o.text << "weyl n=" << n << " m=" << m << " k=" << k << " j=" << j << "\n  double cosets: "
           << double_coset_count(n, bm, bk) << "\n  W = W_M W_K W_M: " << (check ? "yes" : "no")
           << "\n  0 <= k-2j <= n-2m: " << (closed ? "yes" : "no") << "\n";
    if (closed != check) o.code = 2;
}

void run_induction(std::size_t k, std::uint64_t q, std::size_t samples, std::uint64_t seed, bool allow, Out& o) {
    auto r = induction_step_check(k, q, samples, seed, allow);
    o.doc["params"] = {{"q", q}, {"k", k}, {"samples", samples}, {"seed", seed}};
    o.doc["tested"] = r.tested;
    o.doc["via_fifth"] = r.via_fifth;
    o.doc["via_quotient"] = r.via_quotient;
    o.doc["retried"] = r.retried;
    o.doc["failures"] = r.failures;
    o.doc["ok"] = r.ok();
    o.text << "induction k=" << k << " q=" << q << ": " << r.tested << " quadruples, " << r.via_fifth
           << " pairwise disjoint, " << r.via_quotient << " via quotient (" << r.retried << " retried), "
           << r.failures << " failures\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of triple factorisations of GL(n,q) and S_n"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--budget", common.budget, "max enumeration size")->check(CLI::PositiveNumber);
    app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--json", common.as_json, "print JSON instead of text");

    std::uint64_t q = 2;
    std::size_t n = 0, m = 0, k = 0, j = 0, k1 = 0, k2 = 0;
    std::string mode = "all";
    const std::vector<std::string> modes{"predicate", "oracle", "witness", "all"};

    auto* proj = app.add_subcommand("proj-collinear", "m-spaces against k-spaces meeting in dimension j");
    proj->add_option("--q", q)->required();
    proj->add_option("--n", n)->required();
    proj->add_option("--m", m)->required();
    proj->add_option("--k", k)->required();
    proj->add_option("--j", j)->required();
    proj->add_option("--mode", mode)->check(CLI::IsMember(modes));

    bool no_reps = false;
    auto add_bis = [&](CLI::App* s) {
        s->add_option("--q", q)->required();
        s->add_option("--k", k)->required();
        s->add_option("--m", m)->required();
        s->add_option("--k1", k1)->required();
        s->add_option("--k2", k2)->required();
        s->add_option("--mode", mode)->check(CLI::IsMember(modes));
    };
    auto* bcol = app.add_subcommand("bis-collinear", "m-spaces against bisections, collinear completeness");
    add_bis(bcol);
    auto* bcon = app.add_subcommand("bis-concurrent", "m-spaces against bisections, concurrent completeness");
    add_bis(bcon);
    bcon->add_flag("--no-reps", no_reps, "check every second bisection instead of orbit representatives");

    std::string family, qs = "2";
    std::size_t max_n = 5, max_k = 2;
    auto* scan = app.add_subcommand("scan", "compare oracle and closed form over a parameter range");
    scan->add_option("--family", family)->required()->check(CLI::IsMember({"proj", "bis-col", "bis-con", "sn"}));
    scan->add_option("--max-n", max_n);
    scan->add_option("--max-k", max_k);
    scan->add_option("--qs", qs, "comma separated field orders");

    bool golden = false;
    std::string golden_file;
    auto* orb = app.add_subcommand("orbits", "bisection stabiliser orbits on the other bisections");
    orb->add_option("--q", q)->required();
    orb->add_option("--k", k)->required();
    orb->add_flag("--golden", golden, "compare with the shipped multiset");
    orb->add_option("--golden-file", golden_file, "compare with this multiset file instead");

    std::size_t digits = 6;
    auto* cnt = app.add_subcommand("counts", "H(a,k,q), its lower bound and the one-half test");
    cnt->add_option("--q", q)->required();
    cnt->add_option("--k", k)->required();
    cnt->add_option("--digits", digits)->check(CLI::Range(0, 60));

    auto* wey = app.add_subcommand("weyl", "Young subgroups of S_n");
    wey->add_option("--n", n)->required();
    wey->add_option("--m", m)->required();
    wey->add_option("--k", k)->required();
    wey->add_option("--j", j)->required();

    std::size_t samples = 60;
    std::uint64_t seed = 1;
    bool allow = false;
    auto* ind = app.add_subcommand("induction", "sampled check of the level k to k-1 reduction");
    ind->add_option("--q", q)->required();
    ind->add_option("--k", k)->required();
    ind->add_option("--samples", samples);
    ind->add_option("--seed", seed);
    ind->add_flag("--allow-unproven-base", allow);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Out o;
    o.doc["schema"] = kSchema;
    try {
        if (*proj) {
            o.doc["verb"] = "proj-collinear";
            run_proj(common, q, n, m, k, j, mode, o);
        } else if (*bcol) {
            o.doc["verb"] = "bis-collinear";
            run_bis_col(common, BisParams::make(q, k, m, k1, k2), mode, o);
        } else if (*bcon) {
            o.doc["verb"] = "bis-concurrent";
            run_bis_con(common, BisParams::make(q, k, m, k1, k2), mode, !no_reps, o);
        } else if (*scan) {
            o.doc["verb"] = "scan";
            run_scan(common, family, max_n, max_k, qs, o);
        } else if (*orb) {
            o.doc["verb"] = "orbits";
            run_orbits(common, q, k, golden || !golden_file.empty(), golden_file, o);
        } else if (*cnt) {
            o.doc["verb"] = "counts";
            run_counts(k, q, digits, o);
        } else if (*wey) {
            o.doc["verb"] = "weyl";
            run_weyl(n, m, k, j, o);
        } else if (*ind) {
            o.doc["verb"] = "induction";
            run_induction(k, q, samples, seed, allow, o);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (common.as_json) std::cout << json{{"schema", kSchema}, {"error", e.what()}}.dump() << "\n";
        return exit_for(e);
    }
    if (common.as_json)
        std::cout << o.doc.dump() << "\n";
    else
        std::cout << o.text.str();
    return o.code;
}
