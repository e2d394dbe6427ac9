#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "netcoop/rng.hpp"

using namespace netcoop;

TEST_SUITE("rng") {

TEST_CASE("splitmix64 matches the published reference stream") {
    // reference outputs for state 0 (Vigna's splitmix64.c test vector)
    std::uint64_t s = 0;
    CHECK(splitmix64(s) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64(s) == 0x6E789E6AA1B965F4ULL);
    CHECK(splitmix64(s) == 0x06C45D188009454FULL);
}

TEST_CASE("uniform01 is [0,1) with the documented 53-bit construction") {
    Rng a(12345), b(12345);
    std::mt19937_64 raw(12345);
    for (int i = 0; i < 1000; ++i) {
        double u = a.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == static_cast<double>(raw() >> 11) * 0x1.0p-53);
    }
    for (int i = 0; i < 1000; ++i) (void)b.uniform01();
    CHECK(a.uniform01() == b.uniform01()); // same seed, same stream
}

TEST_CASE("bounded draws are in range and unbiased enough") {
    Rng rng(777);
    CHECK(rng.bounded(1) == 0);

    std::vector<int> counts(3, 0);
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
        std::uint64_t v = rng.bounded(3);
        REQUIRE(v < 3);
        ++counts[static_cast<int>(v)];
    }
    for (int c : counts) {
        CHECK(c > draws / 3 - 1000);
        CHECK(c < draws / 3 + 1000);
    }
}

TEST_CASE("bounded handles large n") {
    Rng rng(5);
    std::uint64_t n = 0xFFFFFFFFFFFFFFF0ULL;
    for (int i = 0; i < 100; ++i) CHECK(rng.bounded(n) < n);
}

TEST_CASE("derive_seed decorrelates indices") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 2000; ++i) seen.insert(derive_seed(42, i));
    CHECK(seen.size() == 2000);
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
}

TEST_CASE("sample_without_replacement basic contract") {
    Rng rng(2);
    auto s = sample_without_replacement(10, 4, rng);
    REQUIRE(s.size() == 4);
    std::set<int> uniq(s.begin(), s.end());
    CHECK(uniq.size() == 4);
    for (int v : s) {
        CHECK(v >= 0);
        CHECK(v < 10);
    }

    Rng r2(2);
    CHECK(sample_without_replacement(10, 4, r2) == s); // deterministic

    Rng r3(3);
    auto all = sample_without_replacement(6, 6, r3);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<int>{0, 1, 2, 3, 4, 5});

    Rng r4(4);
    CHECK(sample_without_replacement(5, 0, r4).empty());
}

TEST_CASE("sample_without_replacement covers all elements over many draws") {
    Rng rng(99);
    std::vector<int> hits(8, 0);
    for (int rep = 0; rep < 4000; ++rep)
        for (int v : sample_without_replacement(8, 4, rng)) ++hits[v];
    // each element should be picked about 4000 * 4/8 = 2000 times
    for (int h : hits) {
        CHECK(h > 1700);
        CHECK(h < 2300);
    }
}

} // TEST_SUITE
