#include "psiq/theorem.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "psiq/errors.hpp"

namespace psiq {

const char* to_string(PairCase c) noexcept
{
    switch (c) {
    case PairCase::PowerOfTwo: return "PowerOfTwo";
    case PairCase::OddOnly: return "OddOnly";
    case PairCase::TwoThree: return "TwoThree";
    case PairCase::TwoTimesPrimePower: return "TwoTimesPrimePower";
    case PairCase::General: return "General";
    }
    return "?";
}

const char* to_string(PairWitness::Kind k) noexcept
{
    switch (k) {
    case PairWitness::Kind::NonSquare: return "NonSquare";
    case PairWitness::Kind::Mod8: return "Mod8";
    case PairWitness::Kind::Mod5: return "Mod5";
    case PairWitness::Kind::DividesP: return "DividesP";
    }
    return "?";
}

const char* to_string(EqualPairBranch b) noexcept
{
    switch (b) {
    case EqualPairBranch::PowerOfTwoFamily: return "PowerOfTwoFamily";
    case EqualPairBranch::OddBranch: return "OddBranch";
    case EqualPairBranch::MixedBranch: return "MixedBranch";
    }
    return "?";
}

namespace {

struct Cofactors
{
    u64 u, v, d, u1, v1;
};

Cofactors cofactors(u64 x, u64 psi_x)
{
    const u128 v = static_cast<u128>(psi_x) + x;
    if (v > ~u64{0}) throw OverflowError("psi(x) + x exceeds 64 bits for x=" + std::to_string(x));
    Cofactors c{};
    c.u = psi_x - x;
    c.v = static_cast<u64>(v);
    c.d = std::gcd(c.u, c.v);
    c.u1 = c.u / c.d;
    c.v1 = c.v / c.d;
    return c;
}

bool is_square(u64 n)
{
    return is_perfect_kth_power(n, 2).has_value();
}

bool nonresidue_mod5(u64 n)
{
    return n % 5 == 2 || n % 5 == 3;
}

PairWitness mod8_certificate(const Cofactors& c, int k)
{
    PairWitness w;
    w.kind = PairWitness::Kind::Mod8;
    w.value = static_cast<u64>(v2(c.d));
    w.text = "u1=" + std::to_string(c.u1) + ", v1=" + std::to_string(c.v1) +
             " odd, so squares would give 2^" + std::to_string(v2(c.d) + 3) + " | d(b^2-a^2) = 2x, but v2(2x) = " +
             std::to_string(k + 1);
    return w;
}

PairWitness non_square(char which, u64 value)
{
    PairWitness w;
    w.kind = PairWitness::Kind::NonSquare;
    w.which = which;
    w.value = value;
    w.text = std::string(1, which) + "1 = " + std::to_string(value) + " is not a perfect square";
    return w;
}

PairObstructionReport classify(u64 x, u64 psi_x, const Factorization& f)
{
    PairObstructionReport rep;
    rep.x = x;
    rep.psi = psi_x;
    const auto c = cofactors(x, psi_x);
    rep.u = c.u;
    rep.v = c.v;
    rep.d = c.d;
    rep.u1 = c.u1;
    rep.v1 = c.v1;

    std::vector<PrimePower> odd;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2)
            rep.k = pp.exponent;
        else
            odd.push_back(pp);
    }

    if (odd.empty()) {
        rep.case_id = PairCase::PowerOfTwo;
    } else if (rep.k == 0) {
        rep.case_id = PairCase::OddOnly;
    } else if (odd.size() == 1) {
        rep.p = odd.front().prime;
        rep.r = odd.front().exponent;
        if (rep.p == 3) {
            rep.case_id = PairCase::TwoThree;
        } else {
            rep.case_id = PairCase::TwoTimesPrimePower;
            rep.p_mod4 = static_cast<int>(rep.p % 4);
            if (rep.p_mod4 == 3) {
                rep.l = (rep.p - 3) / 4;
            } else {
                rep.l = (rep.p - 1) / 4;
                rep.g = std::gcd(rep.l + 1, 5 * rep.l + 2);
            }
        }
    } else {
        rep.case_id = PairCase::General;
    }

    if (rep.case_id == PairCase::TwoTimesPrimePower && rep.p_mod4 == 1) {
        PairWitness w;
        if (rep.g == 3) {
            w.kind = PairWitness::Kind::DividesP;
            w.value = rep.p;
            w.text = "gcd(l+1, 5l+2) = 3 forces 3 | (5l+2)-(l+1) = p = " + std::to_string(rep.p);
        } else {
            w.kind = PairWitness::Kind::Mod5;
            w.which = 'v';
            w.value = rep.v1;
            w.text = "v1 = 5l+2 = " + std::to_string(rep.v1) + " is " + std::to_string(rep.v1 % 5) +
                     " mod 5, not a square residue";
        }
        rep.case_certificate = w;
    } else {
        rep.case_certificate = mod8_certificate(c, rep.k);
    }

    if (!is_square(rep.u1))
        rep.witness = non_square('u', rep.u1);
    else if (!is_square(rep.v1))
        rep.witness = non_square('v', rep.v1);
    else
        rep.witness = rep.case_certificate;
    return rep;
}

bool witness_holds_with_psi(u64 x, u64 psi_x, const PairWitness& w)
{
    if (x < 2 || psi_x <= x) return false;
    const auto c = cofactors(x, psi_x);
    switch (w.kind) {
    case PairWitness::Kind::NonSquare: {
        const u64 cof = w.which == 'u' ? c.u1 : c.v1;
        return (w.which == 'u' || w.which == 'v') && cof == w.value && !is_square(cof);
    }
    case PairWitness::Kind::Mod8:
        return c.u1 % 2 == 1 && c.v1 % 2 == 1 && w.value == static_cast<u64>(v2(c.d)) &&
               v2(c.d) + 3 > v2(x) + 1;
    case PairWitness::Kind::Mod5: {
        const u64 cof = w.which == 'u' ? c.u1 : c.v1;
        return (w.which == 'u' || w.which == 'v') && cof == w.value && nonresidue_mod5(cof);
    }
    case PairWitness::Kind::DividesP: {
        // only meaningful for x = 2^k p^r with p = 4l + 1
        const u64 odd = x >> v2(x);
        if (w.value < 5 || w.value % 4 != 1 || odd % w.value != 0) return false;
        const u64 l = (w.value - 1) / 4;
        return std::gcd(l + 1, 5 * l + 2) == 3 && w.value % 3 == 0;
    }
    }
    return false;
}

void require_at_least_two(u64 x, const char* what)
{
    if (x < 2) throw InvalidInput(std::string(what) + " requires an argument >= 2 (psi(1) = 1 is degenerate)");
}

} // namespace

PairObstructionReport pair_obstruction(u64 x)
{
    require_at_least_two(x, "pair_obstruction");
    const auto f = factorize(x);
    return classify(x, psi(f), f);
}

PairObstructionReport pair_obstruction(u64 x, const PsiSieve& sieve)
{
    require_at_least_two(x, "pair_obstruction");
    if (x > sieve.limit()) return pair_obstruction(x);
    return classify(x, sieve.psi(x), factorize(x, sieve));
}

bool witness_holds(u64 x, const PairWitness& w)
{
    if (x < 2) return false;
    return witness_holds_with_psi(x, psi(x), w);
}

bool report_consistent(const PairObstructionReport& rep)
{
    if (rep.x < 2 || rep.d == 0) return false;
    const u128 two_psi = u128{2} * rep.psi;
    return static_cast<u128>(rep.u) + rep.v == two_psi && rep.v - rep.u == 2 * rep.x && rep.d * rep.u1 == rep.u &&
           rep.d * rep.v1 == rep.v && std::gcd(rep.u1, rep.v1) == 1 &&
           witness_holds_with_psi(rep.x, rep.psi, rep.witness) &&
           witness_holds_with_psi(rep.x, rep.psi, rep.case_certificate);
}

Theorem1Report verify_theorem1(u64 limit, unsigned jobs)
{
    if (limit < 2) throw InvalidInput("verify_theorem1 requires limit >= 2");
    const PsiSieve sieve(limit);
    jobs = std::max(1u, jobs);

    Theorem1Report total;
    std::mutex mu;
    auto scan = [&](u64 begin, u64 end) {
        Theorem1Report local;
        for (u64 x = begin; x < end; ++x) {
            const u64 p = sieve.psi(x);
            const u128 gap = static_cast<u128>(p) * p - static_cast<u128>(x) * x;
            bool bad = is_perfect_kth_power(gap, 2).has_value();
            try {
                const auto rep = pair_obstruction(x, sieve);
                ++local.case_counts[static_cast<std::size_t>(rep.case_id)];
                bad = bad || !report_consistent(rep);
            } catch (const std::exception&) {
                bad = true;
            }
            if (bad) local.failures.push_back(x);
            ++local.checked;
        }
        std::lock_guard lock(mu);
        total.checked += local.checked;
        for (std::size_t i = 0; i < total.case_counts.size(); ++i) total.case_counts[i] += local.case_counts[i];
        total.failures.insert(total.failures.end(), local.failures.begin(), local.failures.end());
    };

    const u64 span = limit - 1; // x in [2, limit]
    if (jobs == 1) {
        scan(2, limit + 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            const u64 b = 2 + span * t / jobs;
            const u64 e = 2 + span * (t + 1) / jobs;
            pool.emplace_back(scan, b, e);
        }
    }
    std::sort(total.failures.begin(), total.failures.end());
    return total;
}

Solution triple_family(int k)
{
    if (k < 1 || k > 62) throw InvalidInput("triple_family: k must be in 1..62");
    const u64 a = u64{1} << k;
    const std::array<u64, 2> eq{a, a};
    const std::array<u64, 1> fr{a / 2};
    return canonicalize(*lookup_kind("quadratic-triple"), eq, fr);
}

Theorem2Report classify_equal_pair(u64 a)
{
    require_at_least_two(a, "classify_equal_pair");
    const auto f = factorize(a);
    Theorem2Report rep;
    rep.a = a;
    BigInt plus_one = 1;
    BigInt primes = 1;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) {
            rep.k = pp.exponent;
            continue;
        }
        rep.odd_primes.push_back(pp.prime);
        plus_one *= pp.prime + 1;
        primes *= pp.prime;
    }

    if (rep.odd_primes.empty()) {
        rep.branch = EqualPairBranch::PowerOfTwoFamily;
    } else {
        rep.branch = rep.k == 0 ? EqualPairBranch::OddBranch : EqualPairBranch::MixedBranch;
        rep.prod_plus_one = static_cast<u64>(plus_one);
        rep.prod_primes = static_cast<u64>(primes);
        const BigInt value = rep.k == 0 ? BigInt(plus_one * plus_one - 2 * primes * primes)
                                        : BigInt(9 * plus_one * plus_one - 8 * primes * primes);
        const BigInt modulus = rep.k == 0 ? 4 : 16;
        BigInt res = value % modulus;
        if (res < 0) res += modulus;
        rep.residue = static_cast<int>(res);
        const BigInt i128_max = (BigInt(1) << 127) - 1;
        if (value > i128_max || value < -i128_max) throw OverflowError("F/H exceeds 128 bits");
        const auto mag = from_big(boost::multiprecision::abs(value));
        rep.obstruction = value < 0 ? -static_cast<i128>(*mag) : static_cast<i128>(*mag);
    }

    // c is read off the defining equation, independently of the congruences above
    const BigInt ps = psi(a);
    const BigInt gap = ps * ps - 2 * BigInt(a) * a;
    if (gap > 0) {
        if (auto g = from_big(gap)) {
            if (auto root = is_perfect_kth_power(*g, 2)) rep.c = *root;
        }
    }
    return rep;
}

} // namespace psiq
