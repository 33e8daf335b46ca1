#ifndef PSIQ_TUPLE_HPP_
#define PSIQ_TUPLE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psiq/wide.hpp"

namespace psiq {

// The family psi^p(a_1) = ... = psi^p(a_e) = sum a_i^p + sum b_j^p,
// with e "equal" entries sharing one psi value and f "free" entries.
struct TupleKind
{
    int power = 2;
    int equal = 1;
    int free = 1;
    std::string name;

    // Identity is (power, equal, free); the name is only a label.
    friend bool operator==(const TupleKind& a, const TupleKind& b) noexcept
    {
        return a.power == b.power && a.equal == b.equal && a.free == b.free;
    }
};

// Throws InvalidInput unless power in 2..5, equal >= 1, free >= 1.
void validate_kind(const TupleKind& kind);

// The eight named families, in order of increasing (power, equal, free).
const std::vector<TupleKind>& named_kinds();

std::optional<TupleKind> lookup_kind(std::string_view name);

// Name of a known (p, e, f), or "p<power>-e<equal>-f<free>" otherwise.
std::string kind_label(const TupleKind& kind);

struct Solution
{
    TupleKind kind;
    std::vector<u64> equal_entries; // non-decreasing
    std::vector<u64> free_entries;  // non-decreasing
    u64 psi_value = 0;
    u128 target = 0; // psi_value^power

    friend bool operator==(const Solution& a, const Solution& b)
    {
        return a.kind == b.kind && a.equal_entries == b.equal_entries && a.free_entries == b.free_entries;
    }
    // Sort order of search output: equal entries, then free entries.
    friend std::strong_ordering operator<=>(const Solution& a, const Solution& b)
    {
        if (auto c = a.equal_entries <=> b.equal_entries; c != 0) return c;
        return a.free_entries <=> b.free_entries;
    }
};

struct VerifyReport
{
    bool ok = false;
    std::vector<u64> psi_values;
    BigInt lhs;         // psi(a_1)^p
    BigInt rhs;         // sum of all entries^p
    BigInt discrepancy; // lhs - rhs
    bool used_bigint = false;
};

// Exact check of the defining equation. 128-bit fast path, retried with
// arbitrary precision when any intermediate would overflow.
// Throws InvalidInput on wrong arity or a zero entry.
VerifyReport verify_solution(const TupleKind& kind, std::span<const u64> equal_entries,
                             std::span<const u64> free_entries);

// Sorted copy with psi and target filled in. Throws InvalidInput when the
// tuple does not verify, OverflowError when the target exceeds 128 bits.
Solution canonicalize(const TupleKind& kind, std::span<const u64> equal_entries,
                      std::span<const u64> free_entries);

// Entrywise doubling; valid because psi(2a) = 2 psi(a) for even a.
// nullopt when some equal entry is odd.
std::optional<Solution> double_solution(const Solution& s);

// "(a, b, c, d)": equal entries then free entries.
std::string format_tuple(const Solution& s);
std::string format_tuple(std::span<const u64> equal_entries, std::span<const u64> free_entries);

} // namespace psiq

#endif // PSIQ_TUPLE_HPP_
