#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "galrep/cyclotomic.hpp"

using namespace galrep;

namespace {

// Cyclic convolution in Z[t]/(t^n - 1); no reduction by Phi_n until the end.
std::vector<Rational> cyclic_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const std::size_t n = a.size();
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[(i + j) % n] += a[i] * b[j];
    return r;
}

std::complex<double> embed(const CyclotomicNumber& x) {
    const double pi = std::acos(-1.0);
    std::complex<double> s = 0;
    for (auto& [e, c] : x.terms())
        s += static_cast<double>(c.num()) / static_cast<double>(c.den()) *
             std::polar(1.0, 2 * pi * static_cast<double>(e) / static_cast<double>(x.order()));
    return s;
}

std::vector<Rational> random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), sparse(0, 2);
    std::vector<Rational> v(n);
    for (auto& c : v)
        if (sparse(rng) == 0) c = Rational(coef(rng), den(rng));
    return v;
}

}  // namespace

TEST(Cyclotomic, RootOfUnityExamples) {
    EXPECT_EQ(root_of_unity(1, 0), CyclotomicNumber(1, Rational(1)));
    EXPECT_EQ(root_of_unity(4, 2), CyclotomicNumber(4, Rational(-1)));
    EXPECT_EQ(root_of_unity(3, 1) + root_of_unity(3, 2), CyclotomicNumber(3, Rational(-1)));
    EXPECT_TRUE((root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero());
    EXPECT_TRUE(CyclotomicNumber(7).terms().empty());
}

TEST(Cyclotomic, GaloisExamples) {
    auto z3 = root_of_unity(3, 1);
    EXPECT_EQ(galois_apply(2, z3), root_of_unity(3, 2));
    EXPECT_EQ(galois_apply(5, root_of_unity(8, 1)), root_of_unity(8, 5));
    auto s = root_of_unity(3, 1) - root_of_unity(3, 2);
    EXPECT_EQ(galois_apply(2, s), -s);
    EXPECT_EQ(s * s, CyclotomicNumber(3, Rational(-3)));
    EXPECT_THROW(galois_apply(2, root_of_unity(4, 1)), std::invalid_argument);
}

TEST(Cyclotomic, ConductorExamples) {
    EXPECT_EQ(conductor(CyclotomicNumber(5, Rational(7, 2))), 1);
    EXPECT_EQ(conductor(root_of_unity(3, 1) - root_of_unity(3, 2)), 3);
    EXPECT_EQ(conductor(root_of_unity(8, 1)), 8);
    // zeta_3 seen inside Q(zeta_12)
    EXPECT_EQ(conductor(root_of_unity(3, 1).lift(12)), 3);
    // -zeta_3 is a primitive 6th root but lives in Q(zeta_3)
    EXPECT_EQ(conductor(root_of_unity(6, 1)), 3);
    // sqrt(2) = z8 + z8^7
    EXPECT_EQ(conductor(root_of_unity(8, 1) + root_of_unity(8, 7)), 8);
    // i = z4
    EXPECT_EQ(conductor(root_of_unity(12, 3)), 4);
}

TEST(Cyclotomic, FixednessExamples) {
    EXPECT_FALSE(is_fixed_by(root_of_unity(8, 1), GaloisSubgroup(8, {1, 5})));
    EXPECT_TRUE(is_fixed_by(CyclotomicNumber(8, Rational(-1)), GaloisSubgroup(8, {1, 3, 5, 7})));
    EXPECT_TRUE(is_fixed_by(root_of_unity(3, 1).lift(12), GaloisSubgroup(12, {1, 7})));
    EXPECT_THROW(is_fixed_by(root_of_unity(3, 1), GaloisSubgroup(12, {1, 7})), std::invalid_argument);
}

TEST(Cyclotomic, SubgroupValidation) {
    EXPECT_THROW(GaloisSubgroup(8, {3}), std::invalid_argument);      // missing 1
    EXPECT_THROW(GaloisSubgroup(8, {1, 2}), std::invalid_argument);   // not a unit
    EXPECT_THROW(GaloisSubgroup(7, {1, 2}), std::invalid_argument);   // 4 missing
    EXPECT_NO_THROW(GaloisSubgroup(7, {1, 2, 4}));
    EXPECT_EQ(GaloisSubgroup::full(12).size(), 4u);
}

TEST(Cyclotomic, ArithmeticMatchesCyclicOracle) {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> ord(1, 24);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = ord(rng);
        auto a = random_vec(rng, static_cast<std::size_t>(n));
        auto b = random_vec(rng, static_cast<std::size_t>(n));
        auto x = CyclotomicNumber::from_exponents(n, a);
        auto y = CyclotomicNumber::from_exponents(n, b);
        std::vector<Rational> sum(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
        EXPECT_EQ(x + y, CyclotomicNumber::from_exponents(n, sum));
        EXPECT_EQ(x * y, CyclotomicNumber::from_exponents(n, cyclic_mul(a, b)));
        // floating embedding as a second, unrelated check
        EXPECT_LT(std::abs(embed(x * y) - embed(x) * embed(y)), 1e-6);
    }
}

TEST(Cyclotomic, GaloisIsActionAndHomomorphism) {
    std::mt19937 rng(7);
    for (int n : {5, 8, 9, 12, 15, 20, 24}) {
        auto units = unit_residues(n);
        for (int t = 0; t < 20; ++t) {
            auto x = CyclotomicNumber::from_exponents(n, random_vec(rng, static_cast<std::size_t>(n)));
            auto y = CyclotomicNumber::from_exponents(n, random_vec(rng, static_cast<std::size_t>(n)));
            for (auto k1 : units)
                for (auto k2 : units) {
                    EXPECT_EQ(galois_apply(k1, galois_apply(k2, x)), galois_apply((k1 * k2) % n, x));
                }
            for (auto k : units) {
                EXPECT_EQ(galois_apply(k, x * y), galois_apply(k, x) * galois_apply(k, y));
                EXPECT_EQ(conductor(galois_apply(k, x)), conductor(x));
            }
        }
    }
}

TEST(Cyclotomic, RationalIffConductorOne) {
    std::mt19937 rng(11);
    for (int n = 1; n <= 24; ++n) {
        for (int t = 0; t < 10; ++t) {
            auto x = CyclotomicNumber::from_exponents(n, random_vec(rng, static_cast<std::size_t>(n)));
            bool fixed = is_fixed_by(x, GaloisSubgroup::full(n));
            EXPECT_EQ(fixed, x.is_rational());
            EXPECT_EQ(fixed, conductor(x) == 1);
            // a trace is always rational
            CyclotomicNumber tr(n);
            for (auto k : unit_residues(n)) tr += galois_apply(k, x);
            EXPECT_TRUE(tr.is_rational());
        }
    }
}

TEST(Cyclotomic, ConductorOfPrimitiveRoots) {
    for (int n = 1; n <= 40; ++n)
        for (int k = 0; k < n; ++k) {
            int o = n / static_cast<int>(std::gcd(k, n));
            int expect = (o % 4 == 2) ? o / 2 : o;
            EXPECT_EQ(conductor(root_of_unity(n, k)), expect) << n << " " << k;
        }
}

TEST(Cyclotomic, InverseAndMinimize) {
    std::mt19937 rng(3);
    for (int n : {3, 4, 7, 8, 12, 15}) {
        for (int t = 0; t < 10; ++t) {
            auto x = CyclotomicNumber::from_exponents(n, random_vec(rng, static_cast<std::size_t>(n)));
            if (x.is_zero()) continue;
            EXPECT_EQ(x * x.inverse(), CyclotomicNumber(n, Rational(1)));
            auto m = x.minimize();
            EXPECT_EQ(m.order(), conductor(x));
            EXPECT_EQ(m.lift(n), x);
        }
    }
    auto sqrt_m3 = (root_of_unity(3, 1) - root_of_unity(3, 2)).lift(12);
    EXPECT_EQ(sqrt_m3.minimize().order(), 3);
}

TEST(Cyclotomic, MixedOrderLifts) {
    auto s = root_of_unity(3, 1) + root_of_unity(4, 1);
    EXPECT_EQ(s.order(), 12);
    EXPECT_EQ(s, root_of_unity(12, 4) + root_of_unity(12, 3));
    EXPECT_EQ(root_of_unity(4, 1) * root_of_unity(4, 1), CyclotomicNumber(1, Rational(-1)));
}
