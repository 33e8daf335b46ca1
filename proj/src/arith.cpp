#include "psiq/arith.hpp"

#include <cmath>
#include <limits>
#include <new>
#include <string>

#include "psiq/errors.hpp"

namespace psiq {

PsiSieve::PsiSieve(u64 limit)
    : limit_(limit)
{
    if (limit == 0) throw InvalidInput("sieve limit must be at least 1");
    if (limit > kMaxLimit)
        throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds " + std::to_string(kMaxLimit));
    try {
        spf_.assign(limit + 1, 0);
        psi_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate psi sieve of " + std::to_string(limit) + " entries (~12 bytes each)");
    }

    spf_[1] = 1;
    psi_[1] = 1;
    std::vector<std::uint32_t> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            psi_[i] = i + 1;
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        const u64 smallest = spf_[i];
        for (const std::uint32_t p : primes) {
            if (p > smallest || i * p > limit) break;
            const u64 m = i * p;
            spf_[m] = p;
            // p == spf(i): p divides i, psi gains a factor p; otherwise coprime
            psi_[m] = (p == smallest) ? p * psi_[i] : (p + 1) * psi_[i];
        }
    }
}

PsiSieve build_sieve(u64 limit)
{
    return PsiSieve(limit);
}

Factorization factorize(u64 n, const PsiSieve& sieve)
{
    if (n == 0 || n > sieve.limit())
        throw InvalidInput("factorize: n=" + std::to_string(n) + " outside 1.." + std::to_string(sieve.limit()));
    Factorization f{n, {}};
    while (n > 1) {
        const u64 p = sieve.spf(n);
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    return f;
}

Factorization factorize(u64 n)
{
    if (n == 0) throw InvalidInput("factorize: n must be positive");
    Factorization f{n, {}};
    auto strip = [&](u64 p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.push_back({p, e});
    };
    strip(2);
    for (u64 p = 3; p <= n / p; p += 2) strip(p);
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

u64 psi(const Factorization& f)
{
    u128 r = f.n;
    for (const auto& [p, e] : f.factors) r = r / p * (p + 1);
    if (r > std::numeric_limits<u64>::max())
        throw OverflowError("psi(" + std::to_string(f.n) + ") exceeds 64 bits");
    return static_cast<u64>(r);
}

u64 psi(u64 n)
{
    return psi(factorize(n));
}

u64 psi(u64 n, const PsiSieve& sieve)
{
    if (n >= 1 && n <= sieve.limit()) return sieve.psi(n);
    return psi(n);
}

namespace {

// r^k <= x, without overflowing
bool pow_le(u128 r, int k, u128 x)
{
    auto p = checked_pow(r, k);
    return p && *p <= x;
}

} // namespace

u64 int_kth_root(u128 x, int k)
{
    if (k < 2 || k > 5) throw InvalidInput("int_kth_root: k must be in 2..5");
    if (x < 2) return static_cast<u64>(x);
    const long double seed = std::pow(static_cast<long double>(x), 1.0L / k);
    u128 r = seed < 1.0L ? 1 : static_cast<u128>(seed);
    while (!pow_le(r, k, x)) --r;
    while (pow_le(r + 1, k, x)) ++r;
    return static_cast<u64>(r);
}

std::optional<u64> is_perfect_kth_power(u128 x, int k)
{
    const u64 r = int_kth_root(x, k);
    if (pow_u128(r, k) == x) return r;
    return std::nullopt;
}

u64 odd_radical(const Factorization& f)
{
    u64 r = 1;
    for (const auto& pp : f.factors)
        if (pp.prime != 2) r *= pp.prime;
    return r;
}

int v2(u128 x) noexcept
{
    if (x == 0) return 128;
    const auto lo = static_cast<u64>(x);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<u64>(x >> 64));
}

} // namespace psiq
