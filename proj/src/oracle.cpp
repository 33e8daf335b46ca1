// Deliberately naive reference search: nested loops over every entry, psi by
// trial division, all arithmetic in cpp_int. It must not call into the sieve,
// the class index or the decomposition kernels it is used to check.

#include <algorithm>
#include <string>

#include "psiq/errors.hpp"
#include "psiq/search.hpp"

namespace psiq {

namespace {

BigInt naive_psi(u64 n)
{
    BigInt r = n;
    u64 m = n;
    for (u64 d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        r = r / d * (d + 1);
        while (m % d == 0) m /= d;
    }
    if (m > 1) r = r / m * (m + 1);
    return r;
}

class Oracle
{
public:
    explicit Oracle(const SearchConfig& config)
        : kind_(config.kind)
        , bound_(config.bound)
    {
        psi_.push_back(0);
        for (u64 n = 1; n <= bound_; ++n) psi_.push_back(naive_psi(n));
    }

    std::vector<Solution> run()
    {
        std::vector<u64> eq;
        equal_loop(1, eq);
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    const BigInt& power_of(u64 b)
    {
        while (pw_.size() <= b) pw_.push_back(boost::multiprecision::pow(BigInt(pw_.size()), kind_.power));
        return pw_[b];
    }

    void equal_loop(u64 from, std::vector<u64>& eq)
    {
        if (eq.size() == static_cast<std::size_t>(kind_.equal)) {
            const BigInt target = boost::multiprecision::pow(psi_[eq.front()], kind_.power);
            BigInt residual = target;
            for (u64 a : eq) residual -= power_of(a);
            if (residual <= 0) return;
            std::vector<u64> fr;
            free_loop(1, residual, eq, fr, target);
            return;
        }
        for (u64 a = from; a <= bound_; ++a) {
            if (!eq.empty() && psi_[a] != psi_[eq.front()]) continue;
            eq.push_back(a);
            equal_loop(a, eq);
            eq.pop_back();
        }
    }

    void free_loop(u64 from, const BigInt& residual, const std::vector<u64>& eq, std::vector<u64>& fr,
                   const BigInt& target)
    {
        const int left = kind_.free - static_cast<int>(fr.size());
        if (left == 1) {
            // last entry: binary search b >= from with b^p == residual
            u64 lo = from;
            u64 hi = from;
            while (power_of(hi) < residual) hi *= 2;
            while (lo < hi) {
                const u64 mid = lo + (hi - lo) / 2;
                if (power_of(mid) < residual)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            if (power_of(lo) != residual) return;
            fr.push_back(lo);
            record(eq, fr, target);
            fr.pop_back();
            return;
        }
        for (u64 b = from; left * power_of(b) <= residual; ++b) {
            fr.push_back(b);
            free_loop(b, residual - power_of(b), eq, fr, target);
            fr.pop_back();
        }
    }

    void record(const std::vector<u64>& eq, const std::vector<u64>& fr, const BigInt& target)
    {
        Solution s;
        s.kind = kind_;
        if (s.kind.name.empty()) s.kind.name = kind_label(kind_);
        s.equal_entries = eq;
        s.free_entries = fr;
        s.psi_value = static_cast<u64>(psi_[eq.front()]);
        auto t = from_big(target);
        if (!t) throw OverflowError("oracle target exceeds 128 bits");
        s.target = *t;
        out_.push_back(std::move(s));
    }

    TupleKind kind_;
    u64 bound_;
    std::vector<BigInt> psi_;
    std::vector<BigInt> pw_;
    std::vector<Solution> out_;
};

} // namespace

std::vector<Solution> brute_force_oracle(const SearchConfig& config)
{
    validate_kind(config.kind);
    if (config.bound < 1) throw InvalidInput("bound must be at least 1");
    if (config.bound > kOracleMaxBound)
        throw InvalidInput("oracle bound " + std::to_string(config.bound) + " exceeds " +
                           std::to_string(kOracleMaxBound));
    return Oracle(config).run();
}

} // namespace psiq
