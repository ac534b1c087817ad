#include "liscount/symfunc.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "liscount/detail/determinant.hpp"

namespace liscount {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

unsigned Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
    std::vector<unsigned> conj;
    if (!parts_.empty()) {
        conj.resize(parts_[0], 0);
        for (unsigned part : parts_)
            for (unsigned j = 0; j < part; ++j)
                ++conj[j];
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void enumerate_partitions(unsigned remaining, unsigned max_part, unsigned slots,
                          std::vector<unsigned>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (slots == 0 || static_cast<unsigned long>(max_part) * slots < remaining)
        return;
    // Largest admissible first part first gives decreasing lex order overall.
    unsigned top = std::min(max_part, remaining);
    for (unsigned part = top; part >= 1; --part) {
        current.push_back(part);
        enumerate_partitions(remaining - part, part, slots - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned weight, unsigned max_length) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    enumerate_partitions(weight, weight, max_length, current, out);
    return out;
}

CycleTypeData cycle_type_data(const Partition& mu) {
    BigInt z(1);
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const unsigned long mult = j - i;
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), parts[i], mult);
        z *= p * factorial(mult);
        i = j;
    }
    BigInt cls;
    mpz_divexact(cls.get_mpz_t(), factorial(mu.weight()).get_mpz_t(), z.get_mpz_t());
    return CycleTypeData{mu, z, cls};
}

namespace {

void enumerate_homogeneous(int var, long remaining, ExponentVector& e, TPoly& out) {
    // var is 1-based; fills exponents of t_var..t_1 with weighted sum = remaining.
    if (var == 1) {
        e[0] = static_cast<unsigned>(remaining);
        Rational coeff(1);
        for (unsigned exp : e)
            coeff /= Rational(factorial(exp));
        out.add_term(e, coeff);
        e[0] = 0;
        return;
    }
    for (long exp = 0; exp * var <= remaining; ++exp) {
        e[static_cast<std::size_t>(var - 1)] = static_cast<unsigned>(exp);
        enumerate_homogeneous(var - 1, remaining - exp * var, e, out);
    }
    e[static_cast<std::size_t>(var - 1)] = 0;
}

}  // namespace

TPoly complete_homogeneous(long k, int r) {
    if (r < 1)
        throw std::invalid_argument("complete_homogeneous: need r >= 1");
    if (k < 0)
        return TPoly(r);
    static std::mutex mu;
    static std::map<std::pair<long, int>, TPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({k, r});
        if (it != cache.end())
            return it->second;
    }
    TPoly h(r);
    ExponentVector e(static_cast<std::size_t>(r), 0);
    enumerate_homogeneous(r, k, e, h);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(k, r), std::move(h)).first->second;
}

TPoly cycle_index(int r) {
    if (r < 1)
        throw std::invalid_argument("cycle_index: need r >= 1");
    TPoly cyc(r);
    for (const Partition& mu : partitions_of(static_cast<unsigned>(r), static_cast<unsigned>(r))) {
        ExponentVector e(static_cast<std::size_t>(r), 0);
        for (unsigned part : mu.parts())
            ++e[part - 1];
        Rational coeff(BigInt(1), cycle_type_data(mu).z_mu);
        coeff.canonicalize();
        cyc.add_term(e, coeff);
    }
    return cyc;
}

TPoly schur(const Partition& lambda, int r) {
    if (r < 1)
        throw std::invalid_argument("schur: need r >= 1");
    const std::size_t ell = lambda.length();
    if (ell == 0)
        return TPoly::constant(r, Rational(1));
    std::vector<std::vector<TPoly>> m;
    m.reserve(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        std::vector<TPoly> row;
        row.reserve(ell);
        for (std::size_t j = 0; j < ell; ++j)
            row.push_back(complete_homogeneous(
                static_cast<long>(lambda.parts()[i]) - static_cast<long>(i) + static_cast<long>(j),
                r));
        m.push_back(std::move(row));
    }
    return detail::det_laplace(m, TPoly(r));
}

BigInt f_lambda(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks(1);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (unsigned j = 0; j < lambda.parts()[i]; ++j) {
            const long hook = static_cast<long>(lambda.parts()[i]) - j +
                              static_cast<long>(conj.parts()[j]) - static_cast<long>(i) - 1;
            hooks *= hook;
        }
    }
    BigInt f;
    mpz_divexact(f.get_mpz_t(), factorial(lambda.weight()).get_mpz_t(), hooks.get_mpz_t());
    return f;
}

BigInt kostka_g(const Partition& lambda, int r, int n) {
    if (r < 1 || n < 0)
        throw std::invalid_argument("kostka_g: need r >= 1, n >= 0");
    if (lambda.weight() != static_cast<unsigned>(r) * static_cast<unsigned>(n))
        throw std::invalid_argument("kostka_g: |lambda| must equal r*n");
    const Rational paired =
        gaussian_pairing(schur(lambda, r), cycle_index(r).pow(static_cast<unsigned>(n)));
    const BigInt g = to_integer(paired);
    if (g < 0)
        throw std::logic_error("kostka_g: pairing produced a negative value");
    return g;
}

namespace {

void count_ssyt(const std::vector<unsigned>& shape, std::vector<std::vector<unsigned>>& grid,
                std::vector<unsigned>& remaining, std::size_t row, unsigned col, BigInt& count) {
    if (row == shape.size()) {
        ++count;
        return;
    }
    if (col == shape[row]) {
        count_ssyt(shape, grid, remaining, row + 1, 0, count);
        return;
    }
    const unsigned min_row = col > 0 ? grid[row][col - 1] : 1;                    // weak rows
    const unsigned min_col = row > 0 && col < shape[row - 1] ? grid[row - 1][col] + 1 : 1;  // strict cols
    for (unsigned v = std::max(min_row, min_col); v <= remaining.size(); ++v) {
        if (remaining[v - 1] == 0)
            continue;
        --remaining[v - 1];
        grid[row][col] = v;
        count_ssyt(shape, grid, remaining, row, col + 1, count);
        ++remaining[v - 1];
    }
}

}  // namespace

BigInt kostka_ssyt_oracle(const Partition& lambda, const std::vector<unsigned>& content) {
    unsigned total = std::accumulate(content.begin(), content.end(), 0u);
    if (total != lambda.weight())
        throw std::invalid_argument("kostka_ssyt_oracle: content weight mismatch");
    std::vector<std::vector<unsigned>> grid;
    for (unsigned part : lambda.parts())
        grid.emplace_back(part, 0u);
    std::vector<unsigned> remaining = content;
    BigInt count(0);
    count_ssyt(lambda.parts(), grid, remaining, 0, 0, count);
    return count;
}

}  // namespace liscount
