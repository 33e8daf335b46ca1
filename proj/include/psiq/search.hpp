#ifndef PSIQ_SEARCH_HPP_
#define PSIQ_SEARCH_HPP_

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "psiq/arith.hpp"
#include "psiq/tuple.hpp"

namespace psiq {

// How the free part of a four-entry (or three-entry) sum is decomposed.
enum class FreeStrategy
{
    Auto,         // meet-in-the-middle when its pair table fits the memory budget
    Descent,      // recursive descent, two-pointer on the last two entries
    MeetInMiddle, // two-pointer over a sorted table of all pair sums
};

struct SearchConfig
{
    TupleKind kind;
    u64 bound = 1; // equal-class entries range over 1..bound
    unsigned jobs = 1;
    bool emit_partial = false;
    FreeStrategy strategy = FreeStrategy::Auto;
};

// Largest bound for which every intermediate of a search fits 128 bits.
u64 max_safe_bound(const TupleKind& kind);

// Throws InvalidInput (naming the maximum safe bound when that is the problem).
void validate_config(const SearchConfig& config);

// All n <= bound grouped by psi(n); members ascending, classes keyed by psi value.
class PsiClassIndex
{
public:
    explicit PsiClassIndex(const PsiSieve& sieve);
    // Restricted to 1..bound, bound <= sieve.limit().
    PsiClassIndex(const PsiSieve& sieve, u64 bound);

    [[nodiscard]] u64 bound() const noexcept { return bound_; }
    [[nodiscard]] const std::map<u64, std::vector<u64>>& classes() const noexcept { return classes_; }
    [[nodiscard]] std::span<const u64> members(u64 psi_value) const;

private:
    u64 bound_;
    std::map<u64, std::vector<u64>> classes_;
};

PsiClassIndex build_class_index(const PsiSieve& sieve);

// Every non-decreasing tuple (b_1..b_count), 1 <= b_j <= cap, with
// sum b_j^power == residual, in lexicographic order.
// count in 1..4, power in 2..5; anything else is InvalidInput.
// Above 2^28 candidate entries (count >= 2) it throws ResourceError.
std::vector<std::vector<u64>> decompose_sum_of_powers(u128 residual, int count, int power, u64 cap);

// Receives each finished chunk of solutions (chunk order is scheduling dependent).
using PartialSink = std::function<void(std::span<const Solution>)>;

// All canonical solutions whose equal entries are <= config.bound, sorted.
// The output does not depend on config.jobs.
std::vector<Solution> search(const SearchConfig& config, const PartialSink& on_partial = {});

// Same, reusing a sieve whose limit is at least config.bound.
std::vector<Solution> search(const SearchConfig& config, const PsiSieve& sieve, const PartialSink& on_partial = {});

inline constexpr u64 kOracleMaxBound = 500;

// Plain nested loops in arbitrary precision, sharing no code with search().
// Throws InvalidInput above kOracleMaxBound.
std::vector<Solution> brute_force_oracle(const SearchConfig& config);

} // namespace psiq

#endif // PSIQ_SEARCH_HPP_
