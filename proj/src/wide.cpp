#include "psiq/wide.hpp"

#include <algorithm>

#include "psiq/errors.hpp"

namespace psiq {

u128 pow_u128(u128 base, int exp)
{
    auto r = checked_pow(base, exp);
    if (!r) throw OverflowError("power exceeds 128 bits");
    return *r;
}

std::string to_string(u128 v)
{
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v)
{
    if (v >= 0) return to_string(static_cast<u128>(v));
    // two's complement negate through the unsigned type handles INT128_MIN
    return "-" + to_string(static_cast<u128>(0) - static_cast<u128>(v));
}

std::optional<u128> parse_u128(std::string_view text)
{
    if (text.empty()) return std::nullopt;
    u128 r = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        auto m = checked_mul(r, 10);
        if (!m) return std::nullopt;
        auto a = checked_add(*m, static_cast<u128>(c - '0'));
        if (!a) return std::nullopt;
        r = *a;
    }
    return r;
}

std::optional<u128> from_big(const BigInt& v)
{
    if (v < 0 || (v != 0 && boost::multiprecision::msb(v) >= 128)) return std::nullopt;
    const BigInt mask = (BigInt(1) << 64) - 1;
    u128 hi = static_cast<u64>((v >> 64) & mask);
    u128 lo = static_cast<u64>(v & mask);
    return (hi << 64) | lo;
}

} // namespace psiq
