#include <gtest/gtest.h>

#include "galrep/qpolynomial.hpp"

using namespace galrep;

TEST(QPoly, CyclotomicExamples) {
    EXPECT_EQ(cyclotomic_poly(1), (QPolynomial{-1, 1}));
    EXPECT_EQ(cyclotomic_poly(6), (QPolynomial{1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(12), (QPolynomial{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(12).to_string(), "q^4 - q^2 + 1");
}

TEST(QPoly, CyclotomicProductIdentity) {
    for (int d = 1; d <= 60; ++d) {
        QPolynomial p{1};
        for (auto e : divisors(d)) p *= cyclotomic_poly(static_cast<int>(e));
        ASSERT_EQ(p, QPolynomial::monomial(d) - QPolynomial{1}) << d;
    }
    // 105 is the first index with a coefficient outside {-1,0,1}
    bool has_two = false;
    for (auto& c : cyclotomic_poly(105).coefficients()) has_two |= (c == -2);
    EXPECT_TRUE(has_two);
}

TEST(QPoly, Valuation) {
    EXPECT_EQ(phi_d_valuation(QPolynomial{-1, 0, 1}, 2), 1);
    EXPECT_EQ(phi_d_valuation(QPolynomial::monomial(3), 3), 0);
    EXPECT_EQ(phi_d_valuation(QPolynomial{0, 0, 1, 1, 1}, 3), 1);
    EXPECT_EQ(phi_d_valuation(cyclotomic_poly(5) * cyclotomic_poly(5) * cyclotomic_poly(2), 5), 2);
    EXPECT_THROW(phi_d_valuation(QPolynomial{}, 2), std::invalid_argument);
}

TEST(QPoly, GenericDegreeExamples) {
    EXPECT_EQ(generic_degree_typeA(Partition{4}), QPolynomial{1});
    EXPECT_EQ(generic_degree_typeA(Partition{1, 1, 1}), QPolynomial::monomial(3));
    EXPECT_EQ(generic_degree_typeA(Partition{2, 1}), (QPolynomial{0, 1, 1}));
    EXPECT_TRUE(in_uch_phid_prime_typeA(Partition{2, 1}, 3));
    EXPECT_FALSE(in_uch_phid_prime_typeA(Partition{2, 1}, 2));
    for (int d = 1; d <= 6; ++d) EXPECT_TRUE(in_uch_phid_prime_typeA(Partition{5}, d));
    EXPECT_THROW(generic_degree_typeA(Partition{}), std::invalid_argument);
}

TEST(QPoly, GenericDegreeAtOneIsHookLength) {
    for (int n = 1; n <= 10; ++n)
        for (auto& la : partitions_of(n)) ASSERT_EQ(generic_degree_typeA(la).evaluate(1), BigInt(hook_length_degree(la))) << la.to_string();
}

TEST(QPoly, ValuationMatchesCoreWeight) {
    for (int n = 1; n <= 10; ++n)
        for (auto& la : partitions_of(n))
            for (int d = 2; d <= 10; ++d) {
                auto cr = d_core(la, d);
                int v = phi_d_valuation(generic_degree_typeA(la), d);
                ASSERT_EQ(v, n / d - cr.weight) << la.to_string() << " d=" << d;
                ASSERT_EQ(v == 0, in_uch_phid_prime_typeA(la, d));
            }
}

TEST(QPoly, GenericDegreeIsIntegral) {
    // the GL_n degree of a hook (n-k,1^k) is q^{k(k+1)/2} times a q-binomial, here spot-checked at q = 2
    auto g = generic_degree_typeA(Partition{3, 1, 1});
    EXPECT_EQ(g.evaluate(2), BigInt(8 * 35));
}
