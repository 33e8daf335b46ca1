#ifndef PSIQ_THEOREM_HPP_
#define PSIQ_THEOREM_HPP_

// Checkable versions of the two obstruction arguments:
//
//  * psi^2(x) = x^2 + y^2 has no solution. With u = psi(x) - x,
//    v = psi(x) + x, d = gcd(u, v), u = d u1, v = d v1, a solution forces
//    u1 and v1 to be coprime squares. Every x falls in one of five shapes
//    and each shape comes with a small certificate that they are not.
//
//  * psi^2(a) = 2 a^2 + c^2 holds only for a = 2^k. For odd a the quantity
//    F = A^2 - 2 B^2 is 2 mod 4; for a = 2^k m (odd m > 1) the quantity
//    H = 9 P^2 - 8 Q^2 is 8 or 12 mod 16. A, P are products of (p + 1) and
//    B, Q products of p over the distinct odd primes of a.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psiq/arith.hpp"
#include "psiq/tuple.hpp"

namespace psiq {

enum class PairCase
{
    PowerOfTwo,         // x = 2^k
    OddOnly,            // x odd
    TwoThree,           // x = 2^k 3^r
    TwoTimesPrimePower, // x = 2^k p^r, p odd, p != 3
    General,            // x = 2^k times at least two odd primes
};

const char* to_string(PairCase c) noexcept;

// Machine-checkable reason that u1 * v1 is not a square.
struct PairWitness
{
    enum class Kind
    {
        NonSquare, // u1 or v1 itself is not a perfect square
        Mod8,      // u1, v1 odd: squares would force 2^(v2(d)+3) | 2x, but v2(2x) is smaller
        Mod5,      // the named cofactor is 2 or 3 mod 5
        DividesP,  // p = 4l + 1 with g = 3: 3 | (l+1) and 3 | (5l+2) would make 3 | p
    };

    Kind kind = Kind::NonSquare;
    char which = 'v'; // 'u' or 'v' for NonSquare / Mod5
    u64 value = 0;    // the non-square cofactor, or v2(d) for Mod8
    std::string text;
};

const char* to_string(PairWitness::Kind k) noexcept;

struct PairObstructionReport
{
    u64 x = 0;
    u64 psi = 0;
    u64 u = 0;
    u64 v = 0;
    u64 d = 0;
    u64 u1 = 0;
    u64 v1 = 0;
    PairCase case_id = PairCase::General;

    // Shape parameters: x = 2^k * rest. For TwoTimesPrimePower also the
    // odd prime p = 4l + 3 or 4l + 1, its exponent r and, for p = 4l + 1,
    // g = gcd(l + 1, 5l + 2).
    int k = 0;
    u64 p = 0;
    int r = 0;
    u64 l = 0;
    int p_mod4 = 0;
    u64 g = 0;

    PairWitness witness;           // cheapest available certificate
    PairWitness case_certificate;  // the congruence argument for this case
};

// Requires x >= 2 (x = 1 makes u = 0). Throws InvalidInput otherwise.
PairObstructionReport pair_obstruction(u64 x);
PairObstructionReport pair_obstruction(u64 x, const PsiSieve& sieve);

// Recomputes everything the witness claims from x alone.
bool witness_holds(u64 x, const PairWitness& w);

// u + v = 2 psi, v - u = 2x, d u1 = u, d v1 = v, gcd(u1, v1) = 1, both
// certificates re-check.
bool report_consistent(const PairObstructionReport& rep);

struct Theorem1Report
{
    u64 checked = 0;
    std::vector<u64> failures;
    std::array<u64, 5> case_counts{};
};

// For every 2 <= x <= limit: psi^2(x) - x^2 is not a positive square and
// pair_obstruction produces a consistent report. Requires limit >= 2.
Theorem1Report verify_theorem1(u64 limit, unsigned jobs = 1);

// (2^k, 2^k, 2^(k-1)); k in 1..62.
Solution triple_family(int k);

enum class EqualPairBranch
{
    PowerOfTwoFamily,
    OddBranch,
    MixedBranch,
};

const char* to_string(EqualPairBranch b) noexcept;

struct Theorem2Report
{
    u64 a = 0;
    EqualPairBranch branch = EqualPairBranch::PowerOfTwoFamily;
    int k = 0;              // exponent of 2 in a
    std::vector<u64> odd_primes;
    u64 prod_plus_one = 1;  // A (odd branch) or P (mixed branch)
    u64 prod_primes = 1;    // B or Q
    i128 obstruction = 0;   // F = A^2 - 2B^2 or H = 9P^2 - 8Q^2; 0 for the family
    int residue = 0;        // F mod 4 or H mod 16, nonnegative
    std::optional<u64> c;   // present iff psi^2(a) - 2a^2 is a positive square
};

// Requires a >= 2.
Theorem2Report classify_equal_pair(u64 a);

} // namespace psiq

#endif // PSIQ_THEOREM_HPP_
