#include <gtest/gtest.h>

#include <set>

#include "galrep/numtheory.hpp"

using namespace galrep;

namespace {

// r-th powers in F_ell^x by enumeration.
std::set<std::int64_t> rth_powers(std::int64_t r, std::int64_t ell) {
    std::set<std::int64_t> s;
    for (std::int64_t x = 1; x < ell; ++x) s.insert(pow_mod(x, r, ell));
    return s;
}

std::int64_t brute_order(std::int64_t u, std::int64_t ell) {
    std::int64_t x = u % ell, k = 1;
    while (x != 1) {
        x = x * u % ell;
        ++k;
    }
    return k;
}

}  // namespace

TEST(NumberTheory, MultOrder) {
    EXPECT_EQ(mult_order(2, 7), 3);
    EXPECT_EQ(mult_order(3, 7), 6);
    EXPECT_EQ(mult_order(8, 7), 1);
    EXPECT_THROW(mult_order(14, 7), std::invalid_argument);
    EXPECT_THROW(mult_order(3, 9), std::invalid_argument);
    EXPECT_THROW(mult_order(3, 2), std::invalid_argument);
}

TEST(NumberTheory, Squares) {
    EXPECT_TRUE(is_square_mod(2, 7));
    EXPECT_FALSE(is_square_mod(3, 7));
    for (std::int64_t k = 1; k < 30; ++k)
        if (k % 11) EXPECT_TRUE(is_square_mod(k * k, 11));
    EXPECT_THROW(is_square_mod(7, 7), std::invalid_argument);
}

TEST(NumberTheory, SqrtFixedExamples) {
    EXPECT_TRUE(sqrt_q_fixed(PrimePower(2, 1), 7));
    EXPECT_FALSE(sqrt_q_fixed(PrimePower(3, 1), 5));
    EXPECT_TRUE(sqrt_q_fixed(PrimePower(2, 2), 7));
    EXPECT_TRUE(sqrt_minus_q_fixed(PrimePower(3, 1), 7));
    EXPECT_FALSE(sqrt_minus_q_fixed(PrimePower(2, 1), 5));
    EXPECT_TRUE(sqrt_minus_q_fixed(PrimePower(2, 1), 3));  // -2 = 1 mod 3
}

TEST(NumberTheory, Subgroups) {
    EXPECT_EQ(hell_subgroup(5, 8).residues(), (std::vector<std::int64_t>{1, 5}));
    EXPECT_EQ(hell_subgroup(7, 12).residues(), (std::vector<std::int64_t>{1, 7}));
    EXPECT_EQ(hell_subgroup(7, 6).residues(), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(hd_subgroup(4, 8).residues(), (std::vector<std::int64_t>{1, 5}));
    EXPECT_EQ(hd_subgroup(1, 15), GaloisSubgroup::full(15));
    EXPECT_EQ(hd_subgroup(6, 12), hd_subgroup(3, 12));
    EXPECT_EQ(hd_subgroup(6, 12).residues(), (std::vector<std::int64_t>{1, 7}));
    EXPECT_THROW(hd_subgroup(5, 12), std::invalid_argument);
    // ell-part of the modulus is unconstrained
    EXPECT_EQ(hell_subgroup(3, 9), GaloisSubgroup::full(9));
}

TEST(NumberTheory, HellInsideHd) {
    for (auto ell : primes_up_to(100)) {
        if (ell == 2) continue;
        for (std::int64_t n = 1; n <= 120; ++n)
            for (std::int64_t d : divisors(n))
                if ((ell - 1) % d == 0) ASSERT_TRUE(hell_subgroup(ell, n).subset_of(hd_subgroup(d, n))) << ell << " " << n << " " << d;
    }
}

TEST(NumberTheory, HdOddDoubling) {
    for (std::int64_t m = 1; m <= 25; m += 2)
        for (std::int64_t n = 2 * m; n <= 200; n += 2 * m) ASSERT_EQ(hd_subgroup(2 * m, n), hd_subgroup(m, n));
}

TEST(NumberTheory, SquareRootSweeps) {
    int checked = 0;
    for (auto ell : primes_up_to(200)) {
        if (ell == 2) continue;
        for (std::int64_t q = 2; q <= 200; ++q) {
            if (!is_prime_power(q) || q % ell == 0) continue;
            auto Q = PrimePower::from_value(q);
            std::int64_t d = mult_order(q, ell);
            if (d % 2 == 1) {
                ASSERT_TRUE(sqrt_q_fixed(Q, ell));
                ++checked;
            }
            if (d % 2 == 0 && (d / 2) % 2 == 1) {
                ASSERT_TRUE(sqrt_minus_q_fixed(Q, ell));
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(NumberTheory, RootExistsExamples) {
    EXPECT_TRUE(root_exists_in_Qell(2, 3, 7));
    EXPECT_TRUE(root_exists_in_Qell(5, 1, 11));
    EXPECT_FALSE(root_exists_in_Qell(2, 4, 5));
    EXPECT_THROW(root_exists_in_Qell(7, 1, 7), std::invalid_argument);
    EXPECT_THROW(root_exists_in_Qell(2, 5, 7), std::invalid_argument);
    EXPECT_TRUE(root_exists_for_integer(1, 5, 7));
    EXPECT_TRUE(root_exists_for_integer(2, -3, 7));
    EXPECT_FALSE(root_exists_for_integer(3, 2, 7));
    EXPECT_THROW(root_exists_for_integer(2, 14, 7), std::invalid_argument);
}

TEST(NumberTheory, RootExistsMatchesEnumeration) {
    for (auto ell : primes_up_to(100)) {
        if (ell == 2) continue;
        for (std::int64_t r = 1; r <= 24; ++r) {
            if (r % ell == 0) continue;
            auto pw = rth_powers(r, ell);
            for (std::int64_t a : divisors(ell - 1)) {
                // every element of order a gives the same answer
                std::set<bool> answers;
                for (std::int64_t u = 1; u < ell; ++u)
                    if (brute_order(u, ell) == a) answers.insert(pw.count(u) > 0);
                ASSERT_EQ(answers.size(), 1u);
                ASSERT_EQ(root_exists_in_Qell(r, a, ell), *answers.begin()) << r << " " << a << " " << ell;
            }
            for (std::int64_t b = 1; b < ell; ++b) ASSERT_EQ(root_exists_for_integer(r, b, ell), pw.count(b) > 0);
        }
    }
}

TEST(NumberTheory, CentralProductExamples) {
    EXPECT_TRUE(central_product_splits(2, 6, 1, 7, 3));
    EXPECT_TRUE(central_product_splits(2, 3, 1, 7, 2));
    EXPECT_EQ(central_product_splits(1, 6, 1, 7, 3), root_exists_in_Qell(1, 6, 7));
    EXPECT_THROW(central_product_splits(2, 4, 1, 7, 3), std::invalid_argument);
}

TEST(NumberTheory, PadicRootsWhenEllDividesR) {
    // oracle: r-th powers of units modulo ell^{v+2}, one level deeper than the predicate reads
    for (std::int64_t ell : {3, 5, 7, 11}) {
        for (std::int64_t r = 1; r <= 30; ++r) {
            const auto [v, rp] = split_ell(r, ell);
            ASSERT_EQ(ipow(ell, v) * rp, r);
            const std::int64_t M = ipow(ell, v + 2);
            if (M > 20000) continue;
            std::set<std::int64_t> pw;
            for (std::int64_t x = 1; x < M; ++x)
                if (x % ell) pw.insert(pow_mod(x, r, M));
            for (std::int64_t b = 1; b < M; ++b) {
                if (b % ell == 0) continue;
                ASSERT_EQ(unit_root_exists_padic(r, b, ell), pw.count(b) > 0) << ell << " " << r << " " << b;
                if (v == 0) ASSERT_EQ(unit_root_exists_padic(r, b, ell), root_exists_for_integer(r, b, ell));
            }
            for (std::int64_t a : divisors(ell - 1)) {
                // the Teichmueller lift of an order-a residue is a root of unity of order a
                const std::int64_t u = pow_mod(primitive_root(ell), (ell - 1) / a, ell);
                std::int64_t t = u;
                for (int i = 0; i < v + 2; ++i) t = pow_mod(t, ell, M);
                ASSERT_EQ(root_exists_in_Qell_any_r(r, a, ell), pw.count(t) > 0) << ell << " " << r << " " << a;
            }
        }
    }
    EXPECT_FALSE(unit_root_exists_padic(3, 2, 3));  // 2 = -1 * (1 + 3*...) needs b^2 = 1 mod 9
    EXPECT_TRUE(unit_root_exists_padic(3, 8, 3));   // 8 = 2^3
    EXPECT_THROW(unit_root_exists_padic(2, 9, 3), std::invalid_argument);
}
