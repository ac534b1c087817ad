#include <doctest.h>

#include <algorithm>
#include <climits>
#include <random>

#include "liscount/oracles.hpp"

using namespace liscount;

namespace {

// Exponential-time reference: longest strictly increasing subsequence by
// scanning every subset chain.
int lis_exhaustive(const Word& w) {
    int best = 0;
    const std::size_t n = w.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        int prev = INT_MIN;
        int len = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1))
                continue;
            if (w[i] > prev) {
                prev = w[i];
                ++len;
            } else {
                ok = false;
            }
        }
        if (ok)
            best = std::max(best, len);
    }
    return best;
}

// Strictly decreasing chains of w are strictly increasing chains of -w.
int longest_strictly_decreasing(const Word& w) {
    Word negated;
    for (int x : w)
        negated.push_back(-x);
    return lis_length(negated);
}

}  // namespace

TEST_CASE("lis_length examples") {
    CHECK(lis_length({1, 2, 1, 2}) == 2);
    CHECK(lis_length({2, 2, 1, 1}) == 1);
    CHECK(lis_length({1, 3, 2, 3, 1, 2}) == 3);
    CHECK(lis_length({}) == 0);
}

TEST_CASE("lis_length matches exhaustive search") {
    // all words over {1,2,3} up to length 6
    for (std::size_t len = 0; len <= 6; ++len) {
        Word w(len, 1);
        while (true) {
            CHECK(lis_length(w) == lis_exhaustive(w));
            std::size_t i = 0;
            while (i < len && w[i] == 3)
                w[i++] = 1;
            if (i == len)
                break;
            ++w[i];
        }
    }
    // random longer words
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> letter(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Word w(10);
        for (int& x : w)
            x = letter(rng);
        CHECK(lis_length(w) == lis_exhaustive(w));
    }
}

TEST_CASE("reversal symmetry of strict chains") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> letter(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Word w(9);
        for (int& x : w)
            x = letter(rng);
        Word rev(w.rbegin(), w.rend());
        CHECK(lis_length(w) == longest_strictly_decreasing(rev));
    }
}

TEST_CASE("brute-force counts against published values") {
    CHECK(count_via_brute(2, 2, 2).value == 6);
    CHECK(count_via_brute(1, 3, 2).value == 1);
    CHECK(count_via_brute(2, 2, 3).value == 43);
    CHECK(count_via_brute(2, 2, 0).value == 1);
}

TEST_CASE("enumeration cap refusal") {
    CHECK_THROWS_AS(count_via_brute(2, 2, 6, BigInt(100)), EnumerationCapExceeded);
    try {
        count_via_brute(2, 2, 6, BigInt(100));
    } catch (const EnumerationCapExceeded& e) {
        CHECK(e.required == total_word_count(2, 6));
    }
}

TEST_CASE("rsk counts against published values") {
    CHECK(count_via_rsk(2, 3, 3).value == 374);
    CHECK(count_via_rsk(3, 4, 3).value == 34650);
    CHECK(count_via_rsk(4, 2, 0).value == 1);
}

TEST_CASE("rsk r=1 specialization is the sum of squared f_lambda") {
    for (int d = 1; d <= 4; ++d) {
        for (int n = 0; n <= 8; ++n) {
            BigInt squares(0);
            for (const Partition& lambda :
                 partitions_of(static_cast<unsigned>(n), static_cast<unsigned>(d))) {
                CHECK(kostka_g(lambda, 1, n) == f_lambda(lambda));
                squares += f_lambda(lambda) * f_lambda(lambda);
            }
            CHECK(count_via_rsk(d, 1, n).value == squares);
        }
    }
}

TEST_CASE("brute and rsk agree everywhere within the cap") {
    const BigInt cap(1000000);
    for (int r = 1; r <= 4; ++r) {
        for (int d = 1; d <= 4; ++d) {
            for (int n = 0; r * n <= 10; ++n) {
                if (total_word_count(r, n) > cap)
                    continue;
                CHECK(count_via_brute(d, r, n, cap).value == count_via_rsk(d, r, n).value);
            }
        }
    }
}
