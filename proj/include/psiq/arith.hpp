#ifndef PSIQ_ARITH_HPP_
#define PSIQ_ARITH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psiq/wide.hpp"

namespace psiq {

struct PrimePower
{
    u64 prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod prime^exponent, primes strictly increasing; empty for n = 1.
struct Factorization
{
    u64 n = 1;
    std::vector<PrimePower> factors;
};

// Smallest-prime-factor table and Dedekind psi values for 1..limit.
//
// Built once by a linear sieve and read-only afterwards, so a single
// instance can be shared by any number of concurrent readers. Memory is
// 12 bytes per entry (32-bit spf, 64-bit psi).
class PsiSieve
{
public:
    // Largest limit whose spf entries fit 32 bits.
    static constexpr u64 kMaxLimit = 0xFFFFFFFFull;

    explicit PsiSieve(u64 limit);

    [[nodiscard]] u64 limit() const noexcept { return limit_; }

    // Both accessors require 1 <= n <= limit (unchecked).
    [[nodiscard]] u64 psi(u64 n) const noexcept { return psi_[n]; }
    [[nodiscard]] u64 spf(u64 n) const noexcept { return spf_[n]; }

    // Index 0 is a placeholder; entry n holds psi(n).
    [[nodiscard]] std::span<const u64> psi_values() const noexcept { return psi_; }

private:
    u64 limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<u64> psi_;
};

// Throws InvalidInput for limit 0, ResourceError when the tables cannot be allocated.
PsiSieve build_sieve(u64 limit);

// Requires 1 <= n <= sieve.limit(), else InvalidInput.
Factorization factorize(u64 n, const PsiSieve& sieve);

// Trial division up to sqrt(n). Requires n >= 1.
Factorization factorize(u64 n);

// psi(n) = n * prod_{p | n} (1 + 1/p), psi(1) = 1.
// Throws InvalidInput for n = 0 and OverflowError when the value exceeds 64 bits.
u64 psi(u64 n);
u64 psi(u64 n, const PsiSieve& sieve);
u64 psi(const Factorization& f);

// floor(x^(1/k)) for k in 2..5, exact.
u64 int_kth_root(u128 x, int k);

std::optional<u64> is_perfect_kth_power(u128 x, int k);

// Odd part of the radical: product of the distinct odd primes of f.
u64 odd_radical(const Factorization& f);

// 2-adic valuation; v2(0) is defined as 128.
int v2(u128 x) noexcept;

} // namespace psiq

#endif // PSIQ_ARITH_HPP_
