#include <gtest/gtest.h>

#include "galrep/rationality.hpp"

using namespace galrep;

namespace {

// brute force: smallest f such that x^r = b has a solution in F_{ell^f}, via
// the cyclic group of order ell^f - 1 (b lies in the subgroup of order ell - 1)
int brute_degree(std::int64_t r, std::int64_t b, std::int64_t ell) {
    const std::int64_t g = primitive_root(ell);
    // discrete log of b
    std::int64_t k = 0, x = 1;
    while (x != mod_floor(b, ell)) {
        x = x * g % ell;
        ++k;
    }
    for (int f = 1; f <= 12; ++f) {
        // F_{ell^f}^x is cyclic of order N; b = h^{k N/(ell-1)} for a generator h
        std::int64_t N = 1;
        for (int i = 0; i < f; ++i) N *= ell;
        N -= 1;
        const std::int64_t e = k * (N / (ell - 1));
        // h^e is an r-th power iff gcd(r, N) | e
        if (e % std::gcd(r, N) == 0) return f;
    }
    return -1;
}

}  // namespace

TEST(Rationality, ResidueDegreeMatchesBruteForce) {
    for (std::int64_t ell : {3, 5, 7, 11, 13})
        for (std::int64_t r = 1; r <= 6; ++r) {
            if (r % ell == 0) continue;
            for (std::int64_t b = 1; b < ell; ++b) ASSERT_EQ(root_residue_degree(r, b, ell), brute_degree(r, b, ell)) << ell << " " << r << " " << b;
        }
}

TEST(Rationality, FrobeniusClassExamples) {
    EXPECT_EQ(frobenius_class_typeA_twisted(Partition{2, 1}), FrobeniusClass::MinusQ);
    EXPECT_EQ(frobenius_class_typeA_twisted(Partition{4}), FrobeniusClass::One);
    // (1,1) is one vertical domino, so its 2-core is empty
    EXPECT_EQ(frobenius_class_typeA_twisted(Partition{1, 1}), FrobeniusClass::One);
    EXPECT_EQ(frobenius_class_typeA_twisted(Partition{3, 2, 1}), FrobeniusClass::MinusQ);
}

TEST(Rationality, GraphFieldExamples) {
    EXPECT_TRUE(graph_extension_field_typeA(1, Partition{3}).symbolically_trivial());
    EXPECT_EQ(graph_extension_field_typeA(-1, Partition{2, 1}), FieldDescriptor::adjoin_sqrt(-1));
    for (int n = 0; n <= 12; ++n)
        for (auto& la : partitions_of(n))
            for (int eps : {1, -1}) ASSERT_EQ(graph_extension_field_typeA(eps, la), graph_extension_field_typeA(eps, two_core(la)));
}

TEST(Rationality, F0FieldExamples) {
    for (int r = 1; r <= 6; ++r)
        for (std::int64_t ell : {3, 5, 7, 11}) EXPECT_TRUE(f0_extension_field(FrobeniusClass::One, r, ell, PrimePower(2, 1)).trivial_over_Qell());
    EXPECT_FALSE(f0_extension_field(FrobeniusClass::MinusQ, 2, 5, PrimePower(2, 1)).trivial_over_Qell());
    // d' = d_ell(-q) odd: -q is a square, and every r-th root with gcd(r, ell-1) | (ell-1)/d' exists
    for (std::int64_t ell : {3, 5, 7, 11, 13, 17, 19, 23})
        for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            if (q % ell == 0) continue;
            if (mult_order(-q, ell) % 2 == 0) continue;
            EXPECT_TRUE(f0_extension_field(FrobeniusClass::MinusQ, 2, ell, PrimePower::from_value(q)).trivial_over_Qell());
        }
}

TEST(Rationality, ExtensionFieldExamples) {
    EXPECT_TRUE(extension_field_typeA(1, Partition{1, 1}, 7, PrimePower(2, 1), 1).trivial_over_Qell());
    EXPECT_TRUE(extension_field_typeA(-1, Partition{2, 1}, 7, PrimePower(3, 1), 2).trivial_over_Qell());
    EXPECT_TRUE(extension_field_typeA(-1, Partition{}, 5, PrimePower(2, 1), 2).trivial_over_Qell());
    EXPECT_EQ(extension_field_typeA(-1, Partition{2, 1}, 7, PrimePower(3, 1), 2).to_string(), "trivial over Q_7");
    // sqrt(-2) over Q_5 is a quadratic extension
    auto f = extension_field_typeA(-1, Partition{2, 1}, 5, PrimePower(2, 1), 2);
    EXPECT_FALSE(f.trivial_over_Qell());
    EXPECT_EQ(f.resolution()->degree, 2);
}

TEST(Rationality, DescriptorNormalization) {
    auto a = FieldDescriptor::adjoin_root(2, FrobeniusClass::MinusQ);
    EXPECT_EQ(a, FieldDescriptor::adjoin_sqrt(-1));
    EXPECT_TRUE(FieldDescriptor::adjoin_root(3, FrobeniusClass::One).symbolically_trivial());
    for (std::int64_t ell : {3, 5, 7, 11, 13})
        for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            if (q % ell == 0) continue;
            for (auto base : {FieldDescriptor::adjoin_sqrt(1), FieldDescriptor::adjoin_sqrt(-1), FieldDescriptor::adjoin_root(3, FrobeniusClass::MinusQ),
                              FieldDescriptor::adjoin_sqrt(1).join(FieldDescriptor::adjoin_sqrt(-1))}) {
                // ell dividing the root index would be ramified; not modelled
                if (ell == 3 && base.generators().back().kind == FieldGenerator::Kind::Root) continue;
                auto r1 = base.resolve(ell, q);
                // idempotent
                ASSERT_EQ(r1.resolve(ell, q), r1);
                // symbolically trivial stays trivial; resolved trivial drops every generator
                if (r1.trivial_over_Qell()) ASSERT_TRUE(r1.symbolically_trivial());
            }
            ASSERT_TRUE(FieldDescriptor::trivial().resolve(ell, q).trivial_over_Qell());
        }
}

TEST(Rationality, CoreFieldExamples) {
    auto rep = check_prop75(-1, 4, 5, PrimePower(2, 1), 2);
    EXPECT_EQ(rep.d_prime, 4);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.rows.size(), 5u);
    // insensitive to the choice of 2-core-determined rule
    FrobeniusRule always_minus = [](const Partition&) { return FrobeniusClass::MinusQ; };
    FrobeniusRule by_size = [](const Partition& la) { return two_core(la).size() % 2 ? FrobeniusClass::MinusQ : FrobeniusClass::One; };
    for (int n = 1; n <= 8; ++n)
        for (std::int64_t ell : {3, 5, 7, 11, 13})
            for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
                if (q % ell == 0) continue;
                auto Q = PrimePower::from_value(q);
                for (int eps : {1, -1})
                    for (int r : {1, 2}) {
                        ASSERT_TRUE(check_prop75(eps, n, ell, Q, r).pass);
                        ASSERT_TRUE(check_prop75(eps, n, ell, Q, r, always_minus).pass);
                        ASSERT_TRUE(check_prop75(eps, n, ell, Q, r, by_size).pass);
                    }
            }
}

TEST(Rationality, RationalityTableData) {
    auto t = load_table1();
    EXPECT_EQ(t.rows.size(), 10u);
    EXPECT_EQ(t.exceptions.size(), 6u);
    auto rep = table1_consistency(t);
    EXPECT_TRUE(rep.pass()) << (rep.violations.empty() ? "" : rep.violations.front());
    EXPECT_GT(rep.sweep_cases, 100u);

    // a corrupted row is caught
    Table1 bad = t;
    bad.rows[0].ds.push_back(4);
    EXPECT_FALSE(table1_consistency(bad).pass());
    Table1 bad2 = t;
    bad2.rows[5].ds.push_back(4);
    EXPECT_FALSE(table1_consistency(bad2).pass());
    Table1 bad3 = t;
    bad3.exceptions[0].d_parity = "any";
    EXPECT_FALSE(table1_consistency(bad3).pass());

    EXPECT_THROW(parse_table1(nlohmann::json::parse(R"({"format":"galrep-table1","rows":[{"group":"G2"}],"exceptions":[]})")), std::runtime_error);
    EXPECT_THROW(parse_table1(nlohmann::json::parse(R"({"format":"galrep-table1","rows":[{"group":"G2","d":[3],"characters":["x"],"field":{"kind":"root_of_unity","order":7}}],"exceptions":[]})")),
                 std::runtime_error);
    EXPECT_THROW(load_table1("/nonexistent/table1.json"), std::runtime_error);
}

TEST(Rationality, FrobeniusSignConstantOnSeries) {
    auto rep = corollary76_consistency(5, {1, 3, 5, 7});
    EXPECT_TRUE(rep.pass());
    EXPECT_GT(rep.pairs_checked, 0u);
    EXPECT_GT(rep.pairs_skipped, 0u);
    EXPECT_THROW(corollary76_consistency(3, {2}), std::invalid_argument);
    auto S = SymbolBCD({0, 1, 2}, {});
    EXPECT_EQ(frobenius_sign_symbol(S), frobenius_sign_symbol(symbol_d_core(S, 3)));
}
