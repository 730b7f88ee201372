#include <gtest/gtest.h>

#include "galrep/report.hpp"

using namespace galrep;

TEST(Report, EvenCoreSuitePassesWithNoCounterexamples) {
    const auto r = run_suite("cor74");
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.counterexample_total, 0u);
    EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Report, RationalityTableSuitePasses) { EXPECT_TRUE(run_suite("table1").pass()); }

TEST(Report, UnknownSuiteIsAnError) {
    EXPECT_THROW(run_suite("unknown"), std::invalid_argument);
    EXPECT_THROW(suite_param_keys("unknown"), std::invalid_argument);
}

TEST(Report, InvalidParametersAreErrors) {
    EXPECT_THROW(run_suite("cor74", "n_max=99"), std::invalid_argument);
    EXPECT_THROW(run_suite("cor74", "n_max=x"), std::invalid_argument);
    EXPECT_THROW(run_suite("cor74", "n_max=3x"), std::invalid_argument);
    EXPECT_THROW(run_suite("cor74", "bogus=1"), std::invalid_argument);
    EXPECT_THROW(run_suite("cor74", "n_max"), std::invalid_argument);
    EXPECT_THROW(run_suite("table1", "n_max=3"), std::invalid_argument);
}

TEST(Report, OverridesAreRecordedInOrder) {
    const auto r = run_suite("cor74", "d_max=6,n_max=7");
    ASSERT_EQ(r.params.size(), 2u);
    EXPECT_EQ(r.params[0], (std::pair<std::string, std::int64_t>{"n_max", 7}));
    EXPECT_EQ(r.params[1], (std::pair<std::string, std::int64_t>{"d_max", 6}));
}

// The declared key table and the keys the suites actually read must agree.
TEST(Report, DeclaredKeysMatchSuites) {
    for (const auto& name : suite_names()) {
        if (name == "thm41" || name == "lemma42" || name == "weyl-match" || name == "prop75") continue;  // slow at defaults
        const auto r = run_suite(name);
        std::vector<std::string> got;
        for (auto& [k, v] : r.params) got.push_back(k);
        EXPECT_EQ(got, suite_param_keys(name)) << name;
    }
    const auto r = run_suite("thm41", "m_max=2,a_max=2,index2_m_max=2,index2_a_max=1");
    EXPECT_EQ(r.params.size(), suite_param_keys("thm41").size());
}

TEST(Report, FailIffCounterexamples) {
    CheckReport r;
    r.name = "cor74";
    EXPECT_TRUE(r.pass());
    for (int i = 0; i < 70; ++i) r.fail("x" + std::to_string(i));
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.counterexample_total, 70u);
    EXPECT_EQ(r.counterexamples.size(), CheckReport::kMaxListed);
    const auto j = report_json({r});
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["suites"][0]["status"], "fail");
    EXPECT_FALSE(j["suites"][0].contains("wall_seconds"));
    EXPECT_TRUE(report_json({r}, true)["suites"][0].contains("wall_seconds"));
}

TEST(Report, SmallRunsAreDeterministic) {
    const std::vector<std::string> names{"lemma82", "cor74", "lemma72", "table1", "cor55"};
    const auto a = report_json(run_suites(names, {}, {}, 1)).dump();
    const auto b = report_json(run_suites(names, {}, {}, 3)).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(report_csv(run_suites(names, {}, {}, 1)), report_csv(run_suites(names, {}, {}, 2)));
}

TEST(Report, CsvLongFormat) {
    CheckReport r;
    r.name = "lemma22";
    r.params = {{"ell_max", 5}};
    r.count("cases") = 3;
    r.fail("a, \"quoted\" case");
    const auto csv = report_csv({r});
    EXPECT_EQ(csv,
              "suite,section,key,value\n"
              "lemma22,status,,fail\n"
              "lemma22,param,ell_max,5\n"
              "lemma22,count,cases,3\n"
              "lemma22,count,counterexample_total,1\n"
              "lemma22,counterexample,0,\"a, \"\"quoted\"\" case\"\n");
}

TEST(Report, QueryExamples) {
    EXPECT_EQ(query("2-core", "(3,1)").text, "()");
    EXPECT_EQ(query("generic-degree", "(2,1)").text, "q^2 + q");
    EXPECT_EQ(query("field", "eps=-1 lambda=(2,1) ell=7 q=3 r=2").text, "trivial over Q_7");
    EXPECT_EQ(query("field", "eps=-1 lambda=(2,1) ell=7 q=3 r=2").json["value"], "trivial over Q_7");
}

TEST(Report, QueryKinds) {
    // (4,2,1): two 3-hooks come off, leaving (1)
    const auto c = query("d-core", "(4,2,1) d=3");
    EXPECT_EQ(c.text, "(1)");
    EXPECT_EQ(c.json["weight"], 2);
    EXPECT_EQ(query("d-core", "lambda=(5) d=5").text, "()");
    EXPECT_EQ(query("symbol-core", "row1=0,3 row2= d=3").text, "({0,3},{})");  // 3 -> 0 is blocked
    EXPECT_EQ(query("symbol-core", "row1=1,3 d=3").text, query("symbol-core", "row1=0,1 d=3").text);
    EXPECT_EQ(query("conductor", "label=((),(1),())").text, "3");
    EXPECT_EQ(query("conductor", "label=((1),(),())").text, "1");
    EXPECT_EQ(query("conductor", "((2),())").text, "1");
    EXPECT_EQ(query("weyl", "type=B rank=2 d=4").text, "order 4, C4 wr S1, matches");
    EXPECT_EQ(query("weyl", "type=A rank=2 d=5").text, "no 5-regular element");
}

TEST(Report, MalformedQueries) {
    EXPECT_THROW(query("nope", "(1)"), std::invalid_argument);
    EXPECT_THROW(query("2-core", ""), std::invalid_argument);
    EXPECT_THROW(query("2-core", "(3,"), std::invalid_argument);
    EXPECT_THROW(query("d-core", "(3,1) d=0"), std::invalid_argument);
    EXPECT_THROW(query("d-core", "(3,1) d=2 extra=1"), std::invalid_argument);
    EXPECT_THROW(query("symbol-core", "row1=0,1 d=2"), std::invalid_argument);
    EXPECT_THROW(query("conductor", "label=((1),(1)"), std::invalid_argument);
    EXPECT_THROW(query("weyl", "type=Q rank=2 d=1"), std::invalid_argument);
    EXPECT_THROW(query("weyl", "type=B rank=2 d=1 twist=graph"), std::invalid_argument);
    EXPECT_THROW(query("field", "eps=0 lambda=(1) ell=7 q=3 r=1"), std::invalid_argument);
}

// The diagram-based core oracle against the abacus route, all partitions of n <= 14.
TEST(Report, DiagramCoreOracleAgrees) {
    for (int n = 0; n <= 14; ++n)
        for (const auto& la : partitions_of(n))
            for (int d = 1; d <= 7; ++d) ASSERT_EQ(suites::diagram_core(la, d), d_core(la, d).core) << la.to_string() << " d=" << d;
}

TEST(Report, LiftUnit) {
    EXPECT_EQ(suites::lift_unit(1, 4, 12), 1);
    EXPECT_EQ(suites::lift_unit(3, 4, 12), 7);
    EXPECT_EQ(suites::lift_unit(5, 6, 10), 11);
    for (std::int64_t m : {2, 4, 6, 12})
        for (std::int64_t n : {5, 8, 9, 35})
            for (auto k : unit_residues(m)) {
                const auto x = suites::lift_unit(k, m, n);
                EXPECT_EQ(x % m, k);
                EXPECT_EQ(std::gcd(x, std::lcm(m, n)), 1);
            }
}
