#pragma once

#include <stdexcept>
#include <vector>

#include "liscount/gessel.hpp"

namespace liscount {

using Word = std::vector<int>;

inline constexpr long kDefaultBruteCap = 100000000L;  // 10^8 words

struct EnumerationCapExceeded : std::runtime_error {
    EnumerationCapExceeded(BigInt required_size, const BigInt& cap)
        : std::runtime_error("brute-force enumeration needs " + required_size.get_str() +
                             " words, cap is " + cap.get_str()),
          required(std::move(required_size)) {}
    BigInt required;
};

// Length of the longest strictly increasing subsequence (patience insertion).
int lis_length(const Word& w);

// Ground truth by exhaustive multiset-permutation enumeration. Throws
// EnumerationCapExceeded when (rn)!/(r!)^n exceeds the cap.
CountResult count_via_brute(int d, int r, int n, const BigInt& cap = BigInt(kDefaultBruteCap));

// RSK identity: sum of f_lambda * K_{lambda,(r^n)} over |lambda| = rn,
// length <= d.
CountResult count_via_rsk(int d, int r, int n);

}  // namespace liscount
