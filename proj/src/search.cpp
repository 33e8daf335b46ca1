#include "psiq/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "psiq/errors.hpp"

namespace psiq {

u64 max_safe_bound(const TupleKind& kind)
{
    validate_kind(kind);
    // psi(n) < 4.4 n for every n < 2^64, so (e + 1) * (5N)^p bounds psi^p(N) and every partial sum.
    auto safe = [&](u64 n) {
        auto top = checked_pow(u128{5} * n, kind.power);
        return top && checked_mul(*top, static_cast<u128>(kind.equal + 1)).has_value();
    };
    u64 lo = 1;
    u64 hi = PsiSieve::kMaxLimit;
    if (safe(hi)) return hi;
    while (hi - lo > 1) {
        const u64 mid = lo + (hi - lo) / 2;
        (safe(mid) ? lo : hi) = mid;
    }
    return lo;
}

void validate_config(const SearchConfig& config)
{
    validate_kind(config.kind);
    if (config.bound < 1) throw InvalidInput("bound must be at least 1");
    if (config.jobs < 1) throw InvalidInput("jobs must be at least 1");
    const u64 safe = max_safe_bound(config.kind);
    if (config.bound > safe)
        throw InvalidInput("bound " + std::to_string(config.bound) + " is not 128-bit safe for " +
                           kind_label(config.kind) + "; maximum safe bound is " + std::to_string(safe));
}

PsiClassIndex::PsiClassIndex(const PsiSieve& sieve)
    : PsiClassIndex(sieve, sieve.limit())
{
}

PsiClassIndex::PsiClassIndex(const PsiSieve& sieve, u64 bound)
    : bound_(bound)
{
    if (bound > sieve.limit()) throw InvalidInput("class index bound exceeds the sieve limit");
    for (u64 n = 1; n <= bound_; ++n) classes_[sieve.psi(n)].push_back(n);
}

std::span<const u64> PsiClassIndex::members(u64 psi_value) const
{
    auto it = classes_.find(psi_value);
    if (it == classes_.end()) return {};
    return it->second;
}

PsiClassIndex build_class_index(const PsiSieve& sieve)
{
    return PsiClassIndex(sieve);
}

namespace {

using Tuple = std::vector<u64>;

// i^power for 0 <= i <= cap, plus the decomposition kernels that read it.
class PowerSums
{
public:
    PowerSums(int power, u64 cap)
    {
        pw_.reserve(cap + 1);
        for (u64 i = 0; i <= cap; ++i) pw_.push_back(pow_u128(i, power));
    }

    [[nodiscard]] u64 cap() const noexcept { return pw_.size() - 1; }
    [[nodiscard]] u128 pow(u64 i) const noexcept { return pw_[i]; }

    // Largest i <= cap with i^power <= x.
    [[nodiscard]] u64 root(u128 x) const
    {
        return static_cast<u64>(std::upper_bound(pw_.begin(), pw_.end(), x) - pw_.begin()) - 1;
    }

    // Recursive descent; prefix holds the entries chosen so far, all <= lo.
    template <class Emit>
    void descend(u128 residual, int count, u64 lo, Tuple& prefix, Emit&& emit) const
    {
        if (count == 1) {
            const u64 r = root(residual);
            if (r >= lo && pw_[r] == residual) {
                prefix.push_back(r);
                emit(prefix);
                prefix.pop_back();
            }
            return;
        }
        if (count == 2) {
            u64 i = lo;
            u64 j = root(residual);
            while (i <= j) {
                const u128 rest = residual - pw_[j];
                if (pw_[i] < rest) {
                    ++i;
                } else if (pw_[i] > rest) {
                    --j;
                } else {
                    prefix.push_back(i);
                    prefix.push_back(j);
                    emit(prefix);
                    prefix.resize(prefix.size() - 2);
                    ++i;
                    --j;
                }
            }
            return;
        }
        for (u64 b = lo; b <= cap(); ++b) {
            // remaining entries are all >= b
            if (pw_[b] > residual / static_cast<u128>(count)) break;
            prefix.push_back(b);
            descend(residual - pw_[b], count - 1, b, prefix, emit);
            prefix.pop_back();
        }
    }

private:
    std::vector<u128> pw_;
};

// Sorted table of x^p + y^p over 1 <= x <= y, used to split four-entry sums
// into two pairs.
class PairSumTable
{
public:
    struct Entry
    {
        u128 sum;
        std::uint32_t x;
        std::uint32_t y;
    };

    static u64 count_entries(const PowerSums& pw, u128 max_sum)
    {
        u64 n = 0;
        for (u64 x = 1; x <= pw.cap() && 2 * pw.pow(x) <= max_sum; ++x) n += pw.root(max_sum - pw.pow(x)) - x + 1;
        return n;
    }

    PairSumTable(const PowerSums& pw, u128 max_sum)
    {
        entries_.reserve(count_entries(pw, max_sum));
        for (u64 x = 1; x <= pw.cap() && 2 * pw.pow(x) <= max_sum; ++x) {
            const u64 top = pw.root(max_sum - pw.pow(x));
            for (u64 y = x; y <= top; ++y)
                entries_.push_back({pw.pow(x) + pw.pow(y), static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
        }
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            if (a.sum != b.sum) return a.sum < b.sum;
            return a.x < b.x;
        });
    }

    // All (b1 <= b2 <= b3 <= b4) with the given sum; unsorted.
    template <class Emit>
    void split(u128 residual, Emit&& emit) const
    {
        if (entries_.empty()) return;
        auto end = std::upper_bound(entries_.begin(), entries_.end(), residual,
                                    [](u128 r, const Entry& e) { return r < e.sum; });
        if (end == entries_.begin()) return;
        std::ptrdiff_t i = 0;
        std::ptrdiff_t j = (end - entries_.begin()) - 1;
        Tuple t(4);
        auto try_emit = [&](const Entry& lo, const Entry& hi) {
            if (lo.y > hi.x) return;
            t[0] = lo.x;
            t[1] = lo.y;
            t[2] = hi.x;
            t[3] = hi.y;
            emit(t);
        };
        while (i <= j) {
            const u128 si = entries_[i].sum;
            const u128 sj = entries_[j].sum;
            if (si > residual - sj) {
                --j;
            } else if (si < residual - sj) {
                ++i;
            } else if (si == sj) {
                // one run of equal sums; each unordered pair once
                for (auto a = i; a <= j; ++a)
                    for (auto b = a; b <= j; ++b) try_emit(entries_[a], entries_[b]);
                break;
            } else {
                auto i2 = i;
                while (entries_[i2].sum == si) ++i2;
                auto j2 = j;
                while (entries_[j2].sum == sj) --j2;
                for (auto a = i; a < i2; ++a)
                    for (auto b = j2 + 1; b <= j; ++b) try_emit(entries_[a], entries_[b]);
                i = i2;
                j = j2;
            }
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<Entry> entries_;
};

constexpr u64 kPairTableBudgetEntries = u64{24} << 20; // ~768 MiB

void check_decompose_args(int count, int power)
{
    if (count < 1 || count > 4) throw InvalidInput("free count must be in 1..4");
    if (power < 2 || power > 5) throw InvalidInput("power must be in 2..5");
}

// One unit of outer iteration: a single a (e = 1) or a whole psi class.
struct WorkItem
{
    u64 psi_value;
    std::span<const u64> members;
};

class Searcher
{
public:
    Searcher(const SearchConfig& config, const PsiSieve& sieve)
        : config_(config)
        , power_(config.kind.power)
    {
        u64 max_psi = 1;
        for (u64 n = 1; n <= config.bound; ++n) max_psi = std::max(max_psi, sieve.psi(n));
        max_target_ = pow_u128(max_psi, power_);
        pw_.emplace(power_, int_kth_root(max_target_, power_));

        if (config.kind.free == 4) {
            bool mitm = config.strategy == FreeStrategy::MeetInMiddle;
            if (config.strategy == FreeStrategy::Auto)
                mitm = PairSumTable::count_entries(*pw_, max_target_) <= kPairTableBudgetEntries;
            if (mitm) pairs_.emplace(*pw_, max_target_);
        }

        if (config.kind.equal == 1) {
            singles_.resize(config.bound);
            for (u64 a = 1; a <= config.bound; ++a) singles_[a - 1] = a;
            for (u64 a = 1; a <= config.bound; ++a)
                items_.push_back({sieve.psi(a), std::span<const u64>(&singles_[a - 1], 1)});
        } else {
            index_.emplace(sieve, config.bound);
            for (const auto& [value, members] : index_->classes()) items_.push_back({value, members});
        }
    }

    std::vector<Solution> run(const PartialSink& sink)
    {
        const std::size_t n_items = items_.size();
        const unsigned jobs = std::max(1u, config_.jobs);
        const std::size_t n_chunks = std::min<std::size_t>(n_items, std::size_t{jobs} * 16);
        std::vector<std::vector<Solution>> chunk_out(n_chunks);
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::exception_ptr failure;

        auto worker = [&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                const std::size_t begin = n_items * c / n_chunks;
                const std::size_t end = n_items * (c + 1) / n_chunks;
                try {
                    auto& out = chunk_out[c];
                    for (std::size_t k = begin; k < end; ++k) process(items_[k], out);
                    std::sort(out.begin(), out.end());
                    if (sink) {
                        std::lock_guard lock(mu);
                        sink(out);
                    }
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                    next = n_chunks;
                    return;
                }
            }
        };

        if (jobs == 1 || n_chunks <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        }
        if (failure) std::rethrow_exception(failure);

        std::vector<Solution> all;
        for (auto& part : chunk_out) std::move(part.begin(), part.end(), std::back_inserter(all));
        std::sort(all.begin(), all.end());
        return all;
    }

private:
    void process(const WorkItem& item, std::vector<Solution>& out) const
    {
        const u128 target = pow_u128(item.psi_value, power_);
        std::vector<u64> chosen;
        chosen.reserve(config_.kind.equal);
        choose_equal(item, target, 0, 0, chosen, out);
    }

    // Non-decreasing multisets of class members, pruned once the partial sum
    // leaves no room for f positive free entries.
    void choose_equal(const WorkItem& item, u128 target, std::size_t from, u128 partial, std::vector<u64>& chosen,
                      std::vector<Solution>& out) const
    {
        const int remaining = config_.kind.equal - static_cast<int>(chosen.size());
        if (remaining == 0) {
            emit_free(item.psi_value, target, target - partial, chosen, out);
            return;
        }
        const auto free_min = static_cast<u128>(config_.kind.free);
        for (std::size_t i = from; i < item.members.size(); ++i) {
            const u128 term = pow_u128(item.members[i], power_);
            const u128 need = static_cast<u128>(remaining) * term;
            if (partial + need >= target || target - partial - need < free_min) break;
            chosen.push_back(item.members[i]);
            choose_equal(item, target, i, partial + term, chosen, out);
            chosen.pop_back();
        }
    }

    void emit_free(u64 psi_value, u128 target, u128 residual, const std::vector<u64>& chosen,
                   std::vector<Solution>& out) const
    {
        auto emit = [&](const Tuple& free) {
            Solution s;
            s.kind = config_.kind;
            if (s.kind.name.empty()) s.kind.name = kind_label(s.kind);
            s.equal_entries = chosen;
            s.free_entries = free;
            s.psi_value = psi_value;
            s.target = target;
            out.push_back(std::move(s));
        };
        if (pairs_) {
            pairs_->split(residual, emit);
        } else {
            Tuple prefix;
            prefix.reserve(config_.kind.free);
            pw_->descend(residual, config_.kind.free, 1, prefix, emit);
        }
    }

    const SearchConfig& config_;
    int power_;
    u128 max_target_ = 0;
    std::optional<PowerSums> pw_;
    std::optional<PairSumTable> pairs_;
    std::optional<PsiClassIndex> index_;
    std::vector<u64> singles_;
    std::vector<WorkItem> items_;
};

} // namespace

std::vector<std::vector<u64>> decompose_sum_of_powers(u128 residual, int count, int power, u64 cap)
{
    check_decompose_args(count, power);
    std::vector<Tuple> out;
    if (residual == 0 || cap == 0) return out;
    if (count == 1) {
        const auto r = is_perfect_kth_power(residual, power);
        if (r && *r >= 1 && *r <= cap) out.push_back({*r});
        return out;
    }
    const u64 top = std::min<u64>(cap, int_kth_root(residual, power));
    // the descent tables every power up to top
    if (top > (u64{1} << 28)) throw ResourceError("decomposition table too large: " + std::to_string(top) + " entries");
    const PowerSums pw(power, top);
    Tuple prefix;
    pw.descend(residual, count, 1, prefix, [&](const Tuple& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Solution> search(const SearchConfig& config, const PartialSink& on_partial)
{
    validate_config(config);
    const PsiSieve sieve(config.bound);
    return search(config, sieve, on_partial);
}

std::vector<Solution> search(const SearchConfig& config, const PsiSieve& sieve, const PartialSink& on_partial)
{
    validate_config(config);
    if (sieve.limit() < config.bound) throw InvalidInput("sieve limit is below the search bound");
    Searcher s(config, sieve);
    return s.run(config.emit_partial ? on_partial : PartialSink{});
}

} // namespace psiq
