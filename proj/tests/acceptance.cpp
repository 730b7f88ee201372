// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "galrep/report.hpp"

using namespace galrep;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string text;
    double limit_seconds;  // 0: no time limit
    std::function<Outcome()> run;
};

Outcome from_reports(const std::vector<CheckReport>& reps) {
    Outcome o;
    std::size_t bad = 0;
    std::int64_t cases = 0;
    for (const auto& r : reps) {
        bad += r.counterexample_total;
        for (auto& [k, v] : r.counts) cases += v;
        if (!r.pass()) {
            o.ok = false;
            o.detail += r.name + ": " + r.counterexamples.front() + "; ";
        }
    }
    o.detail += std::to_string(cases) + " checks, " + std::to_string(bad) + " counterexamples";
    return o;
}

Outcome suites_outcome(std::vector<std::pair<std::string, std::string>> runs) {
    std::vector<CheckReport> reps;
    for (auto& [name, params] : runs) reps.push_back(run_suite(name, params));
    return from_reports(reps);
}

// Every table in range: the wreath products, the index-2 subgroups and the
// relative Weyl groups coming out of the oracle.
Outcome table_sanity() {
    Outcome o;
    int tables = 0;
    auto fail = [&](const std::string& s) {
        if (o.ok) o.detail = s + "; ";
        o.ok = false;
    };
    for (int m = 1; m <= 12; ++m)
        for (int a = 1; a <= 4; ++a) {
            ++tables;
            const auto C = wreath_orthogonality_certificate(WreathTable(m, a));
            if (!C.ok) fail(suites::wreath_name(m, a) + ": " + C.why);
        }
    for (int m = 2; m <= 6; m += 2)
        for (int a = 1; a <= 3; ++a) {
            ++tables;
            std::string why;
            if (!Index2Subgroup(m, a).table().check_orthogonality(&why)) fail(suites::index2_name(m, a) + ": " + why);
        }
    for (const auto& cs : weyl_sweep_cases(5, 4))
        for (int d = 1; d <= weyl_max_d(cs.type, cs.rank); ++d) {
            const auto R = relative_weyl_group(cs.type, cs.rank, d, cs.phi);
            if (R.a_d == 0) continue;
            ++tables;
            std::string why;
            if (!R.table.check_orthogonality(&why)) fail(to_string(cs.type) + std::to_string(cs.rank) + " d=" + std::to_string(d) + ": " + why);
        }
    o.detail += std::to_string(tables) + " tables";
    return o;
}

Outcome graph_fields() {
    Outcome o;
    int n_checked = 0;
    for (int n = 0; n <= 12; ++n)
        for (const auto& la : partitions_of(n))
            for (int eps : {1, -1}) {
                ++n_checked;
                if (graph_extension_field_typeA(eps, la) != graph_extension_field_typeA(eps, two_core(la))) {
                    o.ok = false;
                    o.detail = la.to_string() + " eps=" + std::to_string(eps) + "; ";
                }
            }
    o.detail += std::to_string(n_checked) + " partitions";
    return o;
}

Outcome determinism() {
    const auto a = report_json(run_suites(suite_names(), {}, {}, 1)).dump(2);
    const auto b = report_json(run_suites(suite_names(), {}, {}, 1)).dump(2);
    Outcome o;
    o.ok = a == b;
    o.detail = std::to_string(a.size()) + " bytes" + (o.ok ? ", identical" : ", reports differ");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "square roots of q and -q, H_ell in H_[d], H_[2m] = H_[m]", 5, [] { return suites_outcome({{"lemma22", ""}}); }},
        {2, "root predicate vs enumeration and the root-existence implications", 10, [] { return suites_outcome({{"lemma71", ""}}); }},
        {3, "conductor | m and H_[d]-fixedness for C_m wr S_a and G(m,2,a)", 60,
         [] { return suites_outcome({{"thm41", ""}, {"lemma42", "table_sanity=0"}}); }},
        {4, "full orthogonality and sum of squared degrees for every table", 30, table_sanity},
        {5, "equal d-cores imply equal 2-cores (even d), d-hook decompositions recompose", 60, [] { return suites_outcome({{"cor74", ""}}); }},
        {6, "equal d-cores of symbols imply equal 1-cores (odd d)", 60, [] { return suites_outcome({{"lemma72", ""}}); }},
        {7, "extension field constant along d'-cores", 60, [] { return suites_outcome({{"prop75", "graph_n_max=0"}}); }},
        {8, "graph-extension field of lambda equals that of its 2-core", 5, graph_fields},
        {9, "rationality table data rules", 1, [] { return suites_outcome({{"table1", ""}}); }},
        {10, "Lang image formula and centrality in SL_n", 30, [] { return suites_outcome({{"cor55", ""}}); }},
        {11, "relative Weyl groups match the wreath prediction and are H_[d]-fixed", 240, [] { return suites_outcome({{"weyl-match", ""}}); }},
        {12, "central product root condition", 10, [] { return suites_outcome({{"lemma82", ""}}); }},
        {13, "two full runs give byte-identical JSON", 0, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit_seconds == 0 || t < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failed += !pass;
        char timing[64];
        if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", t, c.limit_seconds);
        else std::snprintf(timing, sizeof timing, "%.2fs", t);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.text << " [" << timing << (in_time ? "" : " EXCEEDED") << "] " << o.detail
                  << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << std::endl;
    return failed ? 1 : 0;
}
