#include <gtest/gtest.h>

#include <random>

#include "klsf/bitset.hpp"
#include "klsf/numtheory.hpp"

using namespace klsf;

TEST(NumTheory, FloorDivAndMod) {
    EXPECT_EQ(floor_div(7, 2), 3);
    EXPECT_EQ(floor_div(-1, 4), -1);
    EXPECT_EQ(floor_div(-8, 4), -2);
    EXPECT_EQ(mod_floor(-1, 7), 6);
    EXPECT_EQ(mod_floor(-8, 7), 6);
    EXPECT_EQ(mod_floor(14, 7), 0);
}

TEST(NumTheory, Divisors) {
    EXPECT_EQ(divisors(1), (std::vector<Int>{1}));
    EXPECT_EQ(divisors(10), (std::vector<Int>{1, 2, 5, 10}));
    EXPECT_EQ(divisors(36), (std::vector<Int>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
    for (Int n = 1; n <= 300; ++n) {
        std::vector<Int> slow;
        for (Int d = 1; d <= n; ++d)
            if (n % d == 0) slow.push_back(d);
        EXPECT_EQ(divisors(n), slow) << n;
    }
}

TEST(NumTheory, Factorize) {
    EXPECT_EQ(factorize(360), (std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}}));
    EXPECT_EQ(smallest_prime_factor(91), 7);
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
}

TEST(NumTheory, ExtendedGcdIdentity) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> dist(-500, 500);
    for (int i = 0; i < 2000; ++i) {
        const Int a = dist(rng), b = dist(rng);
        const auto r = extended_gcd(a, b);
        EXPECT_EQ(r.gcd, gcd(a, b));
        EXPECT_GE(r.gcd, 0);
        EXPECT_EQ(a * r.x + b * r.y, r.gcd);
    }
}

TEST(BitsetTest, BasicOps) {
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    EXPECT_EQ(b.count(), 3u);
    EXPECT_EQ(b.find_first(), 0u);
    EXPECT_EQ(b.find_next(1), 64u);
    EXPECT_EQ(b.find_next(65), 129u);
    b.reset(64);
    EXPECT_FALSE(b.test(64));
    Bitset c(130);
    c.set(129);
    EXPECT_TRUE(b.intersects(c));
    c.clear();
    EXPECT_TRUE(c.none());
    c.set_all();
    EXPECT_EQ(c.count(), 130u);
}

TEST(BitsetTest, OrRangeMatchesBitLoop) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        Bitset src(n), dst(n), expect(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() & 1) src.set(i);
            if (rng() % 3 == 0) {
                dst.set(i);
                expect.set(i);
            }
        }
        const std::size_t src_pos = rng() % n;
        const std::size_t dst_pos = rng() % n;
        const std::size_t len = rng() % (std::min(n - src_pos, n - dst_pos) + 1);
        for (std::size_t i = 0; i < len; ++i)
            if (src.test(src_pos + i)) expect.set(dst_pos + i);
        dst.or_range(dst_pos, src, src_pos, len);
        EXPECT_EQ(dst, expect);
    }
}
