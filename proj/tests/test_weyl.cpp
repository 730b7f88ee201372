#include <gtest/gtest.h>

#include "galrep/weyl.hpp"

using namespace galrep;

TEST(Weyl, GroupOrders) {
    EXPECT_EQ(weyl_group(WeylType::A, 2).elements.size(), 6u);
    EXPECT_EQ(weyl_group(WeylType::B, 2).elements.size(), 8u);
    EXPECT_EQ(weyl_group(WeylType::D, 3).elements.size(), 24u);
    EXPECT_EQ(weyl_group(WeylType::B, 4).elements.size(), 384u);
    EXPECT_EQ(weyl_group(WeylType::D, 4).elements.size(), 192u);
    EXPECT_THROW(weyl_group(WeylType::A, 8), std::invalid_argument);
    EXPECT_THROW(weyl_group(WeylType::D, 1), std::invalid_argument);
}

TEST(Weyl, SignedPermutationBasics) {
    SignedPermutation a({1, 0}, {1, -1}), b({0, 1}, {-1, 1});
    auto ab = a * b;
    // check on a vector: (ab)v = a(b v)
    std::vector<int> v{3, 5};
    EXPECT_EQ(ab.apply(v), a.apply(b.apply(v)));
    EXPECT_THROW(SignedPermutation({0, 0}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(SignedPermutation({0, 1}, {1, 2}), std::invalid_argument);
}

TEST(Weyl, RegularElementExamples) {
    auto b2 = d_regular_elements(weyl_group(WeylType::B, 2), 4, Twist::None);
    EXPECT_EQ(b2.a_d, 1);
    // Coxeter elements of B_2: negative 2-cycles, there are two of them
    EXPECT_EQ(b2.elements.size(), 2u);
    for (auto& x : b2.elements) EXPECT_EQ(x.w.cycles(), (std::vector<std::pair<int, int>>{{2, -1}}));

    auto a2 = d_regular_elements(weyl_group(WeylType::A, 2), 1, Twist::None);
    EXPECT_EQ(a2.a_d, 2);
    ASSERT_EQ(a2.elements.size(), 1u);
    EXPECT_EQ(a2.elements[0].w, SignedPermutation::identity(3));

    auto b3 = d_regular_elements(weyl_group(WeylType::B, 3), 2, Twist::None);
    EXPECT_EQ(b3.a_d, 3);
    ASSERT_EQ(b3.elements.size(), 1u);
    EXPECT_EQ(b3.elements[0].w.negatives(), 3);
}

TEST(Weyl, EigenspaceExactMatchesFormula) {
    // exhaustive over B_3 and the twisted A_3 coset for d up to 8
    for (auto [t, r, phi] : std::vector<std::tuple<WeylType, int, Twist>>{{WeylType::B, 3, Twist::None}, {WeylType::A, 3, Twist::TypeA}, {WeylType::D, 3, Twist::TypeD}}) {
        auto W = weyl_group(t, r);
        auto P = twist_matrix(t, r, phi);
        for (auto& w : W.elements)
            for (int d = 1; d <= 8; ++d) {
                auto M = w * P;
                ASSERT_EQ(static_cast<int>(eigenspace_basis(M, d, t == WeylType::A).size()), eigenspace_dim_formula(M, d, t == WeylType::A));
            }
    }
}

TEST(Weyl, RelativeWeylExamples) {
    auto r1 = relative_weyl_group(WeylType::B, 2, 4, Twist::None);
    EXPECT_EQ(r1.order, 4);
    EXPECT_EQ(r1.degrees, (std::vector<std::int64_t>{1, 1, 1, 1}));
    EXPECT_TRUE(matches_wreath_prediction(r1));
    EXPECT_EQ(r1.shape.to_string(), "C4 wr S1");

    EXPECT_EQ(relative_weyl_group(WeylType::A, 2, 3, Twist::None).order, 3);

    auto r3 = relative_weyl_group(WeylType::B, 3, 2, Twist::None);
    EXPECT_EQ(r3.order, 48);
    EXPECT_EQ(r3.degrees, (std::vector<std::int64_t>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3}));

    auto r4 = relative_weyl_group(WeylType::D, 4, 2, Twist::None);
    EXPECT_TRUE(r4.shape.index2);
    EXPECT_TRUE(matches_wreath_prediction(r4));
    EXPECT_EQ(r4.order, 192);

    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) EXPECT_TRUE(matches_wreath_prediction(WeylType::A, n - 1, d, Twist::None)) << n << " " << d;
}

TEST(Weyl, ADFromDegrees) {
    for (auto c : weyl_sweep_cases(5, 4)) {
        auto W = weyl_group(c.type, c.rank);
        for (int d = 1; d <= weyl_max_d(c.type, c.rank); ++d)
            ASSERT_EQ(d_regular_elements(W, d, c.phi).a_d, a_from_degrees(c.type, c.rank, c.phi, d))
                << to_string(c.type) << c.rank << " " << to_string(c.phi) << " d=" << d;
    }
}

TEST(Weyl, SweepMatchesWreathAndHdFixed) {
    int checked = 0;
    for (auto c : weyl_sweep_cases(4, 4))
        for (int d = 1; d <= weyl_max_d(c.type, c.rank); ++d) {
            if (a_from_degrees(c.type, c.rank, c.phi, d) == 0) continue;
            auto R = relative_weyl_group(c.type, c.rank, d, c.phi);
            EXPECT_TRUE(matches_wreath_prediction(R)) << to_string(c.type) << c.rank << " " << to_string(c.phi) << " d=" << d
                                                      << " oracle order " << R.order << " predicted " << R.shape.to_string();
            EXPECT_TRUE(R.all_hd_fixed);
            ++checked;
        }
    EXPECT_GT(checked, 50);
}
