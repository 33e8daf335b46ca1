#include "psiq/tuple.hpp"

#include <algorithm>
#include <string>

#include "psiq/arith.hpp"
#include "psiq/errors.hpp"

namespace psiq {

void validate_kind(const TupleKind& kind)
{
    if (kind.power < 2 || kind.power > 5) throw InvalidInput("power must be in 2..5");
    if (kind.equal < 1) throw InvalidInput("equal-class size must be at least 1");
    if (kind.free < 1) throw InvalidInput("free-class size must be at least 1");
}

const std::vector<TupleKind>& named_kinds()
{
    static const std::vector<TupleKind> kinds = {
        {2, 1, 1, "quadratic-pair"},    {2, 2, 1, "quadratic-triple"}, {2, 3, 1, "quadratic-quadruple"},
        {3, 1, 2, "cubic-triple"},      {3, 2, 2, "cubic-quadruple"},  {3, 3, 2, "cubic-quintuple"},
        {4, 1, 4, "quartic-quintuple"}, {5, 1, 4, "quintic-quintuple"},
    };
    return kinds;
}

std::optional<TupleKind> lookup_kind(std::string_view name)
{
    for (const auto& k : named_kinds())
        if (k.name == name) return k;
    return std::nullopt;
}

std::string kind_label(const TupleKind& kind)
{
    for (const auto& k : named_kinds())
        if (k == kind) return k.name;
    return "p" + std::to_string(kind.power) + "-e" + std::to_string(kind.equal) + "-f" + std::to_string(kind.free);
}

namespace {

VerifyReport verify_big(const TupleKind& kind, std::span<const u64> eq, std::span<const u64> fr,
                        std::vector<u64> psis)
{
    VerifyReport rep;
    rep.used_bigint = true;
    rep.psi_values = std::move(psis);
    rep.lhs = boost::multiprecision::pow(BigInt(rep.psi_values.front()), kind.power);
    for (u64 a : eq) rep.rhs += boost::multiprecision::pow(BigInt(a), kind.power);
    for (u64 b : fr) rep.rhs += boost::multiprecision::pow(BigInt(b), kind.power);
    rep.discrepancy = rep.lhs - rep.rhs;
    return rep;
}

} // namespace

VerifyReport verify_solution(const TupleKind& kind, std::span<const u64> equal_entries,
                             std::span<const u64> free_entries)
{
    validate_kind(kind);
    if (equal_entries.size() != static_cast<std::size_t>(kind.equal) ||
        free_entries.size() != static_cast<std::size_t>(kind.free))
        throw InvalidInput("expected " + std::to_string(kind.equal) + " equal and " + std::to_string(kind.free) +
                           " free entries, got " + std::to_string(equal_entries.size()) + " and " +
                           std::to_string(free_entries.size()));
    auto positive = [](u64 x) { return x > 0; };
    if (!std::all_of(equal_entries.begin(), equal_entries.end(), positive) ||
        !std::all_of(free_entries.begin(), free_entries.end(), positive))
        throw InvalidInput("entries must be positive integers");

    std::vector<u64> psis;
    psis.reserve(equal_entries.size());
    for (u64 a : equal_entries) psis.push_back(psi(a));
    const bool same_psi = std::all_of(psis.begin(), psis.end(), [&](u64 v) { return v == psis.front(); });

    auto fast = [&]() -> std::optional<VerifyReport> {
        auto lhs = checked_pow(psis.front(), kind.power);
        if (!lhs) return std::nullopt;
        u128 rhs = 0;
        for (auto span : {equal_entries, free_entries}) {
            for (u64 x : span) {
                auto term = checked_pow(x, kind.power);
                if (!term) return std::nullopt;
                auto sum = checked_add(rhs, *term);
                if (!sum) return std::nullopt;
                rhs = *sum;
            }
        }
        VerifyReport rep;
        rep.psi_values = psis;
        rep.lhs = to_big(*lhs);
        rep.rhs = to_big(rhs);
        rep.discrepancy = rep.lhs - rep.rhs;
        return rep;
    };

    VerifyReport rep;
    if (auto r = fast())
        rep = std::move(*r);
    else
        rep = verify_big(kind, equal_entries, free_entries, psis);
    rep.ok = same_psi && rep.discrepancy == 0;
    return rep;
}

Solution canonicalize(const TupleKind& kind, std::span<const u64> equal_entries, std::span<const u64> free_entries)
{
    const auto rep = verify_solution(kind, equal_entries, free_entries);
    if (!rep.ok) throw InvalidInput("not a solution: " + format_tuple(equal_entries, free_entries));
    auto target = from_big(rep.lhs);
    if (!target) throw OverflowError("target of " + format_tuple(equal_entries, free_entries) + " exceeds 128 bits");

    Solution s;
    s.kind = kind;
    if (s.kind.name.empty()) s.kind.name = kind_label(kind);
    s.equal_entries.assign(equal_entries.begin(), equal_entries.end());
    s.free_entries.assign(free_entries.begin(), free_entries.end());
    std::sort(s.equal_entries.begin(), s.equal_entries.end());
    std::sort(s.free_entries.begin(), s.free_entries.end());
    s.psi_value = rep.psi_values.front();
    s.target = *target;
    return s;
}

std::optional<Solution> double_solution(const Solution& s)
{
    if (!std::all_of(s.equal_entries.begin(), s.equal_entries.end(), [](u64 a) { return a % 2 == 0; }))
        return std::nullopt;
    constexpr u64 kHalf = ~u64{0} / 2;
    auto twice = [&](u64 x) {
        if (x > kHalf) throw OverflowError("doubling " + std::to_string(x) + " exceeds 64 bits");
        return 2 * x;
    };
    Solution d = s;
    for (auto& a : d.equal_entries) a = twice(a);
    for (auto& b : d.free_entries) b = twice(b);
    d.psi_value = twice(s.psi_value);
    auto t = checked_mul(s.target, u128{1} << s.kind.power);
    if (!t) throw OverflowError("doubled target exceeds 128 bits");
    d.target = *t;
    return d;
}

std::string format_tuple(std::span<const u64> equal_entries, std::span<const u64> free_entries)
{
    std::string out = "(";
    bool first = true;
    for (auto span : {equal_entries, free_entries}) {
        for (u64 x : span) {
            if (!first) out += ", ";
            out += std::to_string(x);
            first = false;
        }
    }
    return out + ")";
}

std::string format_tuple(const Solution& s)
{
    return format_tuple(s.equal_entries, s.free_entries);
}

} // namespace psiq
