#include <doctest.h>

#include <numeric>
#include <random>

#include "naive.hpp"
#include "psiq/arith.hpp"
#include "psiq/errors.hpp"

using namespace psiq;

TEST_CASE("build_sieve examples")
{
    const auto s1 = build_sieve(1);
    CHECK(s1.limit() == 1);
    CHECK(s1.psi(1) == 1);
    CHECK(s1.spf(1) == 1);

    CHECK(build_sieve(10).psi(6) == 12);
    CHECK(build_sieve(600).psi(538) == 810);
}

TEST_CASE("build_sieve rejects bad limits")
{
    CHECK_THROWS_AS(build_sieve(0), InvalidInput);
    CHECK_THROWS_AS(build_sieve(PsiSieve::kMaxLimit + 1), ResourceError);
}

TEST_CASE("sieve invariants")
{
    const u64 n_max = 200000;
    const auto sieve = build_sieve(n_max);
    CHECK(sieve.psi(1) == 1);
    for (u64 n = 2; n <= n_max; ++n) {
        const u64 p = sieve.spf(n);
        REQUIRE(n % p == 0);
        if (p == n) CHECK(sieve.psi(n) == n + 1);
        REQUIRE(sieve.psi(n) > n);
    }
}

TEST_CASE("factorize examples")
{
    const auto sieve = build_sieve(1000);
    CHECK(factorize(1, sieve).factors.empty());
    CHECK(factorize(12, sieve).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(538, sieve).factors == std::vector<PrimePower>{{2, 1}, {269, 1}});
    CHECK(factorize(538).factors == std::vector<PrimePower>{{2, 1}, {269, 1}});
    CHECK_THROWS_AS(factorize(0, sieve), InvalidInput);
    CHECK_THROWS_AS(factorize(1001, sieve), InvalidInput);
    CHECK_THROWS_AS(factorize(0), InvalidInput);
}

TEST_CASE("factorization invariants")
{
    const auto sieve = build_sieve(50000);
    for (u64 n = 1; n <= 50000; n += 7) {
        for (const auto& f : {factorize(n, sieve), factorize(n)}) {
            u64 prod = 1;
            u64 last = 0;
            for (const auto& [p, e] : f.factors) {
                REQUIRE(naive::is_prime(p));
                REQUIRE(p > last);
                REQUIRE(e >= 1);
                last = p;
                for (int i = 0; i < e; ++i) prod *= p;
            }
            REQUIRE(prod == n);
            REQUIRE((n == 1) == f.factors.empty());
        }
    }
    // large spot value, trial division only
    const auto big = factorize(550912);
    u64 prod = 1;
    for (const auto& [p, e] : big.factors)
        for (int i = 0; i < e; ++i) prod *= p;
    CHECK(prod == 550912);
}

TEST_CASE("psi examples")
{
    CHECK(psi(1) == 1);
    CHECK(psi(8) == 12);
    for (int k = 1; k <= 40; ++k) CHECK(psi(u64{1} << k) == 3 * (u64{1} << (k - 1)));
    CHECK(psi(46) == 72);
    CHECK_THROWS_AS(psi(0), InvalidInput);
    // 2*3*5*...*47 has psi ~ 4.4 * n, beyond 64 bits once n is near 2^64
    CHECK_THROWS_AS(psi(614889782588491410ull * 29), OverflowError);
}

TEST_CASE("psi agrees with the divisor-sum oracle")
{
    for (u64 n = 1; n <= 3000; ++n) REQUIRE(psi(n) == naive::psi(n));
}

TEST_CASE("multiplicativity for coprime m, n with mn <= 10^4")
{
    const auto sieve = build_sieve(10000);
    for (u64 m = 1; m <= 10000; ++m)
        for (u64 n = 1; m * n <= 10000; ++n)
            if (std::gcd(m, n) == 1) REQUIRE(sieve.psi(m * n) == sieve.psi(m) * sieve.psi(n));
}

TEST_CASE("prime powers up to 10^6")
{
    const auto sieve = build_sieve(1000000);
    for (u64 p = 2; p <= 1000000; ++p) {
        if (!naive::is_prime(p)) continue;
        u64 pk = p;
        u64 prev = 1;
        while (pk <= 1000000) {
            REQUIRE(sieve.psi(pk) == prev * (p + 1));
            prev = pk;
            if (pk > 1000000 / p) break;
            pk *= p;
        }
    }
}

TEST_CASE("growth: psi(n) >= n + 1 with equality exactly at primes")
{
    const u64 n_max = 1000000;
    const auto sieve = build_sieve(n_max);
    // independent primality from a plain Eratosthenes sieve
    std::vector<bool> composite(n_max + 1, false);
    for (u64 i = 2; i * i <= n_max; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= n_max; j += i) composite[j] = true;
    for (u64 n = 2; n <= n_max; ++n) {
        REQUIRE(sieve.psi(n) >= n + 1);
        REQUIRE((sieve.psi(n) == n + 1) == !composite[n]);
    }
}

TEST_CASE("sieve and trial division agree up to 10^5")
{
    const auto sieve = build_sieve(100000);
    for (u64 n = 1; n <= 100000; ++n) REQUIRE(psi(n) == sieve.psi(n));
    CHECK(psi(100001, sieve) == psi(100001));
}

TEST_CASE("int_kth_root examples")
{
    CHECK(int_kth_root(0, 2) == 0);
    CHECK(int_kth_root(13824, 3) == 24);
    CHECK(int_kth_root(13823, 3) == 23);
    CHECK(int_kth_root(kU128Max, 2) == ~u64{0});
    CHECK_THROWS_AS(int_kth_root(10, 6), InvalidInput);
}

TEST_CASE("int_kth_root brackets random 128-bit inputs")
{
    std::mt19937_64 rng(20251016);
    for (int iter = 0; iter < 20000; ++iter) {
        const int k = 2 + iter % 4;
        // vary magnitude so small and near-max inputs both show up
        const int bits = 1 + static_cast<int>(rng() % 128);
        u128 x = (static_cast<u128>(rng()) << 64) | rng();
        if (bits < 128) x &= (u128{1} << bits) - 1;
        const u64 r = int_kth_root(x, k);
        const auto lo = checked_pow(r, k);
        REQUIRE(lo);
        REQUIRE(*lo <= x);
        const auto hi = checked_pow(u128{r} + 1, k);
        REQUIRE((!hi || *hi > x));
    }
}

TEST_CASE("is_perfect_kth_power")
{
    CHECK(is_perfect_kth_power(1296, 2) == 36u);
    CHECK_FALSE(is_perfect_kth_power(5, 2));
    CHECK(is_perfect_kth_power(1, 5) == 1u);
    CHECK(is_perfect_kth_power(0, 3) == 0u);
    CHECK(is_perfect_kth_power(pow_u128(72, 5), 5) == 72u);
    CHECK_FALSE(is_perfect_kth_power(pow_u128(72, 5) + 1, 5));
    const u64 big = 0xFFFFFFFFFFFFFFFFull;
    CHECK(is_perfect_kth_power(static_cast<u128>(big) * big, 2) == big);
}

TEST_CASE("wide helpers")
{
    CHECK(to_string(u128{0}) == "0");
    CHECK(to_string(kU128Max) == "340282366920938463463374607431768211455");
    CHECK(to_string(static_cast<i128>(-126)) == "-126");
    CHECK(parse_u128("340282366920938463463374607431768211455") == kU128Max);
    CHECK_FALSE(parse_u128("340282366920938463463374607431768211456"));
    CHECK_FALSE(parse_u128("12a"));
    CHECK_FALSE(parse_u128(""));
    CHECK(from_big(to_big(kU128Max)) == kU128Max);
    CHECK_FALSE(from_big(to_big(kU128Max) + 1));
    CHECK_FALSE(from_big(BigInt(-1)));
    CHECK_THROWS_AS(pow_u128(u128{1} << 64, 2), OverflowError);
    CHECK(v2(0) == 128);
    CHECK(v2(u128{1} << 100) == 100);
    CHECK(v2(12) == 2);
}
