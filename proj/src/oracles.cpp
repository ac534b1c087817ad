#include "liscount/oracles.hpp"

#include <algorithm>

namespace liscount {

int lis_length(const Word& w) {
    std::vector<int> tails;
    for (int x : w) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

CountResult count_via_brute(int d, int r, int n, const BigInt& cap) {
    if (d < 1 || r < 1 || n < 0)
        throw std::invalid_argument("count_via_brute: need d >= 1, r >= 1, n >= 0");
    BigInt total = total_word_count(r, n);
    if (total > cap)
        throw EnumerationCapExceeded(std::move(total), cap);
    Word w;
    w.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(n));
    for (int letter = 1; letter <= n; ++letter)
        for (int k = 0; k < r; ++k)
            w.push_back(letter);
    // std::next_permutation on the sorted word walks all multiset
    // permutations in lexicographic order, each exactly once.
    unsigned long count = 0;
    do {
        if (lis_length(w) <= d)
            ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return CountResult{d, r, n, BigInt(count), CountMethod::brute};
}

CountResult count_via_rsk(int d, int r, int n) {
    if (d < 1 || r < 1 || n < 0)
        throw std::invalid_argument("count_via_rsk: need d >= 1, r >= 1, n >= 0");
    BigInt sum(0);
    for (const Partition& lambda :
         partitions_of(static_cast<unsigned>(r) * static_cast<unsigned>(n),
                       static_cast<unsigned>(d)))
        sum += f_lambda(lambda) * kostka_g(lambda, r, n);
    return CountResult{d, r, n, std::move(sum), CountMethod::rsk};
}

}  // namespace liscount
