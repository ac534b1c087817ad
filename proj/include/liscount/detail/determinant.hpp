#pragma once

#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace liscount::detail {

// Cofactor expansion memoized over column subsets: O(2^n * n) ring products.
// R needs +, -, * and copy construction.
template <typename R>
R det_laplace(const std::vector<std::vector<R>>& a, const R& zero) {
    const std::size_t n = a.size();
    if (n == 0)
        throw std::invalid_argument("det_laplace: empty matrix");
    std::vector<std::optional<R>> memo(std::size_t(1) << n);
    auto rec = [&](auto&& self, unsigned mask) -> const R& {
        auto& slot = memo[mask];
        if (slot)
            return *slot;
        const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        const std::size_t row = n - size;
        if (size == 1) {
            slot = a[row][static_cast<std::size_t>(std::countr_zero(mask))];
            return *slot;
        }
        R acc = zero;
        bool plus = true;
        for (unsigned m = mask; m != 0; m &= m - 1) {
            const unsigned col = static_cast<unsigned>(std::countr_zero(m));
            const R prod = a[row][col] * self(self, mask & ~(1u << col));
            acc = plus ? acc + prod : acc - prod;
            plus = !plus;
        }
        slot = std::move(acc);
        return *slot;
    };
    const unsigned full = static_cast<unsigned>((std::size_t(1) << n) - 1);
    return rec(rec, full);
}

// Bird's division-free determinant: iterate X <- mu(X) * A, where mu zeroes
// the lower triangle and replaces the diagonal with trailing-diagonal sums.
// O(n^4) ring products; valid over any commutative ring.
template <typename R>
R det_division_free(const std::vector<std::vector<R>>& a, const R& zero) {
    const std::size_t n = a.size();
    if (n == 0)
        throw std::invalid_argument("det_division_free: empty matrix");
    if (n == 1)
        return a[0][0];
    std::vector<std::vector<R>> x = a;
    for (std::size_t step = 1; step < n; ++step) {
        std::vector<R> diag(n, zero);
        for (std::size_t i = n - 1; i-- > 0;)
            diag[i] = diag[i + 1] - x[i + 1][i + 1];
        std::vector<std::vector<R>> y;
        y.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<R> row;
            row.reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                R acc = diag[i] * a[i][j];
                for (std::size_t k = i + 1; k < n; ++k)
                    acc = acc + x[i][k] * a[k][j];
                row.push_back(std::move(acc));
            }
            y.push_back(std::move(row));
        }
        x = std::move(y);
    }
    return (n % 2 == 1) ? x[0][0] : -x[0][0];
}

}  // namespace liscount::detail
