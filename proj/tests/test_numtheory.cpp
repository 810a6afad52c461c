#include <gtest/gtest.h>

#include "laz/numtheory.hpp"
#include "oracles.hpp"

using namespace laz;

TEST(Factorize, PrimePowersAndProducts) {
    EXPECT_EQ(factorize(25).factors, (std::vector<PrimePower>{{5, 2}}));
    EXPECT_EQ(factorize(9).factors, (std::vector<PrimePower>{{3, 2}}));
    EXPECT_EQ(factorize(105).factors, (std::vector<PrimePower>{{3, 1}, {5, 1}, {7, 1}}));
    EXPECT_FALSE(factorize(105).has_even_prime());
}

TEST(Factorize, FlagsEvenAndRejectsSmall) {
    const auto f = factorize(12);
    EXPECT_TRUE(f.has_even_prime());
    EXPECT_EQ(f.factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
    EXPECT_THROW(factorize(1), DomainError);
    EXPECT_THROW(factorize(-7), DomainError);
}

TEST(Factorize, ProductReconstructsModulus) {
    for (i64 k = 2; k < 5000; ++k) {
        const auto f = factorize(k);
        i64 prod = 1;
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            prod *= f.factors[i].value();
            EXPECT_TRUE(is_prime(f.factors[i].prime));
            if (i > 0) EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
        }
        ASSERT_EQ(prod, k);
    }
}

TEST(EulerPhi, Examples) {
    EXPECT_EQ(euler_phi(factorize(25)), 20);
    EXPECT_EQ(euler_phi(factorize(9)), 6);
    EXPECT_EQ(euler_phi(Factorization{}), 1);
    EXPECT_EQ(euler_phi(1), 1);
}

TEST(EulerPhi, MatchesCountingUpTo10000) {
    for (i64 k = 1; k <= 10000; ++k) ASSERT_EQ(euler_phi(k), oracle::phi_by_count(k)) << k;
}

TEST(GroupExponent, Examples) {
    EXPECT_EQ(group_exponent(factorize(25)), 20);
    EXPECT_EQ(group_exponent(factorize(15)), 4);
    EXPECT_EQ(group_exponent(factorize(105)), 12);
    EXPECT_THROW(group_exponent(factorize(20)), UnsupportedModulus);
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 25), 20);
    EXPECT_EQ(multiplicative_order(5, 7), 6);
    EXPECT_EQ(multiplicative_order(1, 25), 1);
    EXPECT_EQ(multiplicative_order(1, 9), 1);
    EXPECT_THROW(multiplicative_order(5, 25), NotAUnit);
    EXPECT_THROW(multiplicative_order(6, 9), NotAUnit);
}

TEST(MultiplicativeOrder, MatchesIterationAndDividesExponent) {
    for (i64 k = 3; k <= 1000; ++k) {
        const auto f = factorize(k);
        const i64 lambda = carmichael_lambda(f);
        for (i64 a = 1; a < k; ++a) {
            if (std::gcd(a, k) != 1) continue;
            const i64 m = multiplicative_order(a, k);
            ASSERT_EQ(m, oracle::order_by_iteration(a, k)) << a << " mod " << k;
            ASSERT_EQ(lambda % m, 0);
            if (!f.has_even_prime()) ASSERT_EQ(group_exponent(f) % m, 0);
        }
    }
}

TEST(PrimitiveRoot, SmallestGenerator) {
    EXPECT_EQ(primitive_root_prime_power(3, 2), 2);
    EXPECT_EQ(primitive_root_prime_power(5, 1), 2);
    EXPECT_EQ(primitive_root_prime_power(7, 1), 3);
    EXPECT_EQ(multiplicative_order(2, 9), 6);
    EXPECT_THROW(primitive_root_prime_power(2, 3), UnsupportedModulus);
    EXPECT_THROW(primitive_root_prime_power(9, 1), DomainError);
}

TEST(PrimitiveRoot, GeneratesWholeGroup) {
    for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43})
        for (int e = 1; e <= 3; ++e) {
            const PrimePower pp{p, e};
            if (pp.value() > 200000) continue;
            const i64 g = primitive_root_prime_power(p, e);
            ASSERT_EQ(oracle::order_by_iteration(g, pp.value()), pp.totient());
            for (i64 h = 2; h < g; ++h)
                if (h % p != 0) ASSERT_LT(oracle::order_by_iteration(h, pp.value()), pp.totient());
        }
}

TEST(Crt, Examples) {
    auto c = crt_combine({{1, 9}, {2, 25}});
    EXPECT_EQ(c.value, 127);
    EXPECT_EQ(c.modulus, 225);
    EXPECT_EQ(127 % 9, 1);
    EXPECT_EQ(127 % 25, 2);
    EXPECT_EQ(crt_combine({{0, 3}}).value, 0);
    c = crt_combine({{2, 3}, {3, 5}});
    EXPECT_EQ(c.value, 8);
    EXPECT_EQ(c.modulus, 15);
    EXPECT_EQ(crt_combine({{-1, 7}, {4, 11}}).value, 48);
    EXPECT_THROW(crt_combine({{1, 9}, {2, 15}}), DomainError);
}

TEST(ElementOfOrder, KnownModuli) {
    auto s = element_of_order(factorize(25), 20);
    EXPECT_EQ(s.exponent, 20);
    EXPECT_EQ(s.cofactor, 1);
    EXPECT_EQ(multiplicative_order(s.generator, 25), 20);
    EXPECT_EQ(element_of_order(factorize(25), 20, 2).generator, 2);

    s = element_of_order(factorize(9), 6);
    EXPECT_EQ(multiplicative_order(s.generator, 9), 6);
    EXPECT_EQ(element_of_order(factorize(9), 6, 2).generator, 2);

    EXPECT_EQ(element_of_order(factorize(25), 1).generator, 1);
    EXPECT_EQ(element_of_order(factorize(7), 6, 5).generator, 5);
}

TEST(ElementOfOrder, Errors) {
    EXPECT_THROW(element_of_order(factorize(25), 3), NoSuchOrder);
    EXPECT_THROW(element_of_order(factorize(25), 20, 7), ValidationError); // order 4
    EXPECT_THROW(element_of_order(factorize(25), 20, 5), ValidationError); // not a unit
    EXPECT_THROW(element_of_order(factorize(20), 2), UnsupportedModulus);
    EXPECT_THROW(element_of_order(factorize(25), 0), DomainError);
}

TEST(ElementOfOrder, ExactOrderForEveryDivisor) {
    for (i64 k = 3; k <= 400; k += 2) {
        const auto f = factorize(k);
        const i64 e = group_exponent(f);
        for (i64 n = 1; n <= e; ++n) {
            if (e % n != 0) continue;
            const auto s = element_of_order(f, n);
            ASSERT_EQ(s.order * s.cofactor, s.exponent);
            ASSERT_EQ(pow_mod(s.generator, n, k), 1 % k);
            ASSERT_EQ(oracle::order_by_iteration(s.generator, k), n) << "K=" << k << " N=" << n;
            // deterministic
            ASSERT_EQ(element_of_order(f, n).generator, s.generator);
        }
    }
}
