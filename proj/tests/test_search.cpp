#include <doctest.h>

#include <random>
#include <set>

#include "naive.hpp"
#include "psiq/errors.hpp"
#include "psiq/io.hpp"
#include "psiq/search.hpp"

using namespace psiq;

namespace {

TupleKind kind(const char* name)
{
    auto k = lookup_kind(name);
    REQUIRE(k);
    return *k;
}

std::vector<std::string> tuples(const std::vector<Solution>& sols)
{
    std::vector<std::string> out;
    for (const auto& s : sols) out.push_back(format_tuple(s));
    return out;
}

SearchConfig config(const char* name, u64 bound, unsigned jobs = 1)
{
    SearchConfig c;
    c.kind = kind(name);
    c.bound = bound;
    c.jobs = jobs;
    return c;
}

} // namespace

TEST_CASE("class index examples")
{
    const auto idx25 = build_class_index(build_sieve(25));
    const auto c36 = idx25.members(36);
    CHECK(std::vector<u64>(c36.begin(), c36.end()) == std::vector<u64>{18, 20, 22});

    const auto idx16 = build_class_index(build_sieve(16));
    const auto c24 = idx16.members(24);
    CHECK(std::vector<u64>(c24.begin(), c24.end()) == std::vector<u64>{12, 14, 15, 16});

    const auto idx1 = build_class_index(build_sieve(1));
    REQUIRE(idx1.classes().size() == 1);
    CHECK(idx1.classes().begin()->first == 1);
    CHECK(idx1.classes().begin()->second == std::vector<u64>{1});
    CHECK(idx1.members(7).empty());
}

TEST_CASE("class index partitions 1..N")
{
    const u64 n = 5000;
    const auto sieve = build_sieve(n);
    const auto idx = build_class_index(sieve);
    std::vector<int> seen(n + 1, 0);
    for (const auto& [value, members] : idx.classes()) {
        REQUIRE(std::is_sorted(members.begin(), members.end()));
        for (u64 m : members) {
            REQUIRE(sieve.psi(m) == value);
            ++seen[m];
        }
    }
    for (u64 i = 1; i <= n; ++i) REQUIRE(seen[i] == 1);

    const PsiClassIndex half(sieve, 100);
    CHECK(half.bound() == 100);
    CHECK_THROWS_AS(PsiClassIndex(sieve, n + 1), InvalidInput);
}

TEST_CASE("decompose_sum_of_powers examples")
{
    using T = std::vector<std::vector<u64>>;
    CHECK(decompose_sum_of_powers(25, 2, 2, 25) == T{{3, 4}});
    CHECK(decompose_sum_of_powers(1729, 2, 3, 13) == T{{1, 12}, {9, 10}});
    CHECK(decompose_sum_of_powers(9, 1, 2, 10) == T{{3}});
    CHECK(decompose_sum_of_powers(9, 1, 2, 2).empty());
    CHECK(decompose_sum_of_powers(0, 2, 2, 10).empty());
    CHECK(decompose_sum_of_powers(1729, 2, 3, 11) == T{{9, 10}});
    CHECK_THROWS_AS(decompose_sum_of_powers(10, 5, 2, 10), InvalidInput);
    CHECK_THROWS_AS(decompose_sum_of_powers(10, 2, 6, 10), InvalidInput);
}

TEST_CASE("decompose matches full enumeration")
{
    std::mt19937_64 rng(99);
    for (int power = 2; power <= 5; ++power) {
        for (int count = 1; count <= 4; ++count) {
            const u64 cap = count >= 3 ? 25 : 60;
            for (int iter = 0; iter < 150; ++iter) {
                // sums of actual powers so that hits are common
                u128 r = 0;
                for (int j = 0; j < count; ++j) r += naive::pow(1 + rng() % cap, power);
                if (iter % 3 == 0) r += rng() % 5;
                const auto got = decompose_sum_of_powers(r, count, power, cap);
                const auto want = naive::decompositions(r, count, power, cap);
                REQUIRE(got == want);
                const std::set<std::vector<u64>> uniq(got.begin(), got.end());
                REQUIRE(uniq.size() == got.size());
            }
        }
    }
}

TEST_CASE("decompose handles residuals near 2^128")
{
    const u64 big = 0xFFFFFFFFFFFFFFFFull;
    const u128 r = static_cast<u128>(big) * big; // (2^64 - 1)^2
    const auto got = decompose_sum_of_powers(r, 1, 2, big);
    REQUIRE(got.size() == 1);
    CHECK(got[0][0] == big);
    CHECK_THROWS_AS(decompose_sum_of_powers(r, 2, 2, big), ResourceError);
}

TEST_CASE("search examples")
{
    CHECK(search(config("quadratic-pair", 10000)).empty());
    CHECK(tuples(search(config("quadratic-triple", 16))) ==
          std::vector<std::string>{"(2, 2, 1)", "(4, 4, 2)", "(8, 8, 4)", "(16, 16, 8)"});
    CHECK(tuples(search(config("quartic-quintuple", 1000))) ==
          std::vector<std::string>{"(538, 96, 532, 548, 648)"});
}

TEST_CASE("search validates its configuration")
{
    auto c = config("quintic-quintuple", 1);
    const u64 safe = max_safe_bound(c.kind);
    CHECK(safe > 1000000);
    c.bound = safe + 1;
    try {
        search(c);
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find(std::to_string(safe)) != std::string::npos);
    }
    c.bound = 0;
    CHECK_THROWS_AS(search(c), InvalidInput);
    c.bound = 10;
    c.jobs = 0;
    CHECK_THROWS_AS(search(c), InvalidInput);
    // the bound really is safe: (e + 1) * (5N)^p fits
    const auto top = checked_pow(u128{5} * safe, 5);
    REQUIRE(top);
    CHECK(checked_mul(*top, 2));
    CHECK_FALSE(checked_mul(*checked_pow(u128{5} * (safe + 1), 5), 2));
}

TEST_CASE("search output: sorted, canonical, verified")
{
    for (const auto& k : named_kinds()) {
        SearchConfig c;
        c.kind = k;
        c.bound = 150;
        const auto sols = search(c);
        CHECK(std::is_sorted(sols.begin(), sols.end()));
        CHECK(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
        for (const auto& s : sols) {
            REQUIRE(std::is_sorted(s.equal_entries.begin(), s.equal_entries.end()));
            REQUIRE(std::is_sorted(s.free_entries.begin(), s.free_entries.end()));
            REQUIRE(s.equal_entries.back() <= 150);
            const auto rep = verify_solution(s.kind, s.equal_entries, s.free_entries);
            REQUIRE(rep.ok);
            REQUIRE(rep.lhs == to_big(s.target));
        }
    }
}

TEST_CASE("descent and meet-in-the-middle agree on four free entries")
{
    for (const char* name : {"quartic-quintuple", "quintic-quintuple"}) {
        auto c = config(name, 300);
        c.strategy = FreeStrategy::Descent;
        const auto a = search(c);
        c.strategy = FreeStrategy::MeetInMiddle;
        const auto b = search(c);
        CHECK(tuples(a) == tuples(b));
    }
    // a custom kind with two equal and four free entries exercises both paths with e > 1
    SearchConfig c;
    c.kind = {3, 2, 4, ""};
    c.bound = 60;
    c.strategy = FreeStrategy::Descent;
    const auto a = search(c);
    c.strategy = FreeStrategy::MeetInMiddle;
    const auto b = search(c);
    CHECK(!a.empty());
    CHECK(tuples(a) == tuples(b));
}

TEST_CASE("search is independent of jobs and reports partial chunks")
{
    for (const char* name : {"cubic-quintuple", "quintic-quintuple"}) {
        std::string base;
        for (unsigned jobs : {1u, 2u, 8u}) {
            auto c = config(name, 200, jobs);
            c.emit_partial = true;
            std::size_t streamed = 0;
            const auto sols = search(c, [&](std::span<const Solution> part) { streamed += part.size(); });
            CHECK(streamed == sols.size());
            std::string dump;
            for (const auto& s : sols) dump += to_json_line(s) + "\n";
            if (jobs == 1)
                base = dump;
            else
                CHECK(dump == base);
        }
    }
}

TEST_CASE("oracle examples")
{
    // counts frozen from the oracle; 28 printed Table 3 rows with a <= 200 plus (197, 27, 46)
    const auto cubic = brute_force_oracle(config("cubic-triple", 200));
    CHECK(cubic.size() == 29);
    CHECK(format_tuple(cubic.front()) == "(4, 3, 5)");
    CHECK(format_tuple(cubic.back()) == "(197, 27, 46)");
    CHECK(tuples(cubic) == tuples(search(config("cubic-triple", 200))));

    const auto triples = brute_force_oracle(config("quadratic-triple", 128));
    CHECK(tuples(triples) == std::vector<std::string>{"(2, 2, 1)", "(4, 4, 2)", "(8, 8, 4)", "(16, 16, 8)",
                                                      "(32, 32, 16)", "(64, 64, 32)", "(128, 128, 64)"});
    CHECK(tuples(triples) == tuples(search(config("quadratic-triple", 128))));

    CHECK(brute_force_oracle(config("quadratic-pair", 500)).empty());
    CHECK_THROWS_AS(brute_force_oracle(config("quadratic-pair", 501)), InvalidInput);
}

TEST_CASE("search and oracle agree on custom kinds")
{
    for (TupleKind k : {TupleKind{2, 2, 2, ""}, TupleKind{3, 1, 3, ""}, TupleKind{2, 1, 3, ""}, TupleKind{4, 2, 2, ""}}) {
        SearchConfig c;
        c.kind = k;
        c.bound = 40;
        INFO(kind_label(k));
        CHECK(tuples(search(c)) == tuples(brute_force_oracle(c)));
    }
}
