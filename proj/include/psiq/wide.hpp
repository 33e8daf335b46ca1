#ifndef PSIQ_WIDE_HPP_
#define PSIQ_WIDE_HPP_

// 128-bit helpers: checked arithmetic, powers, decimal conversion.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace psiq {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr u128 kU128Max = ~u128{0};

[[nodiscard]] constexpr std::optional<u128> checked_add(u128 a, u128 b) noexcept
{
    if (a > kU128Max - b) return std::nullopt;
    return a + b;
}

[[nodiscard]] constexpr std::optional<u128> checked_mul(u128 a, u128 b) noexcept
{
    if (a != 0 && b > kU128Max / a) return std::nullopt;
    return a * b;
}

// base^exp, or nullopt when the result exceeds 128 bits.
[[nodiscard]] constexpr std::optional<u128> checked_pow(u128 base, int exp) noexcept
{
    u128 r = 1;
    for (int i = 0; i < exp; ++i) {
        auto next = checked_mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

// base^exp; throws OverflowError past 128 bits.
u128 pow_u128(u128 base, int exp);

std::string to_string(u128 v);
std::string to_string(i128 v);

// Parses a non-empty run of decimal digits; nullopt on junk or overflow.
std::optional<u128> parse_u128(std::string_view text);

inline BigInt to_big(u128 v)
{
    BigInt r = static_cast<u64>(v >> 64);
    r <<= 64;
    r += static_cast<u64>(v);
    return r;
}

// nullopt when v is negative or wider than 128 bits.
std::optional<u128> from_big(const BigInt& v);

} // namespace psiq

#endif // PSIQ_WIDE_HPP_
