#include "liscount/gessel.hpp"

#include <map>
#include <stdexcept>

#include "liscount/detail/determinant.hpp"

namespace liscount {

const char* to_string(CountMethod method) {
    switch (method) {
        case CountMethod::gessel: return "gessel";
        case CountMethod::gessel_tr: return "gessel-tr";
        case CountMethod::gessel_r2: return "gessel-r2";
        case CountMethod::rsk: return "rsk";
        case CountMethod::brute: return "brute";
    }
    return "?";
}

VSeries toeplitz_entry(int m, int r, int N) {
    if (r < 1 || N < 0)
        throw std::invalid_argument("toeplitz_entry: need r >= 1, N >= 0");
    const int order = r * N;
    VSeries s(r, order);
    for (int k = 0; k <= order; ++k) {
        const long idx = static_cast<long>(k) + m;
        if (idx < 0)
            continue;
        TPoly h = complete_homogeneous(idx, r);
        if (h.is_zero())
            continue;
        Rational inv_kfact(BigInt(1), factorial(static_cast<unsigned long>(k)));
        inv_kfact.canonicalize();
        h *= inv_kfact;
        s.set_coefficient(k, std::move(h));
    }
    return s;
}

namespace {

VSeries det_vseries(const std::vector<std::vector<VSeries>>& m, const VSeries& zero,
                    int d, DetAlgorithm alg) {
    if (alg == DetAlgorithm::automatic)
        alg = d <= 4 ? DetAlgorithm::laplace : DetAlgorithm::division_free;
    return alg == DetAlgorithm::laplace ? detail::det_laplace(m, zero)
                                        : detail::det_division_free(m, zero);
}

}  // namespace

VSeries toeplitz_det_truncated(int d, int r, int N, DetAlgorithm alg) {
    if (d < 1)
        throw std::invalid_argument("toeplitz_det_truncated: need d >= 1");
    const int order = r * N;
    // Any monomial that feeds a kept v^k coefficient sits inside a minor
    // whose offset sum is at most d^2/4, so its weighted t-degree never
    // exceeds order + d^2/4. Pruning above that is lossless.
    const long limit = static_cast<long>(order) + static_cast<long>(d) * d / 4 + 1;
    std::map<int, VSeries> by_offset;
    for (int m = -(d - 1); m <= d - 1; ++m) {
        VSeries e = toeplitz_entry(m, r, N);
        e.set_degree_limit(limit);
        by_offset.emplace(m, std::move(e));
    }
    std::vector<std::vector<VSeries>> matrix;
    matrix.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<VSeries> row;
        row.reserve(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            row.push_back(by_offset.at(i - j));
        matrix.push_back(std::move(row));
    }
    VSeries zero(r, order);
    zero.set_degree_limit(limit);
    VSeries det = det_vseries(matrix, zero, d, alg);
    det.set_degree_limit(-1);
    return det;
}

namespace {

void check_count_args(int d, int r, int n) {
    if (d < 1 || r < 1 || n < 0)
        throw std::invalid_argument("count: need d >= 1, r >= 1, n >= 0");
}

BigInt checked_count(const Rational& value) {
    const BigInt v = to_integer(value);
    if (v < 0)
        throw std::logic_error("count: negative value, invariant violated");
    return v;
}

}  // namespace

CountResult count_via_gessel(int d, int r, int n, DetAlgorithm alg) {
    check_count_args(d, r, n);
    const int rn = r * n;
    const VSeries det = toeplitz_det_truncated(d, r, n, alg);
    const TPoly& f = det.coefficient(rn);
    const TPoly cyc_pow = cycle_index(r).pow(static_cast<unsigned>(n));
    const Rational a =
        Rational(factorial(static_cast<unsigned long>(rn))) * gaussian_pairing(f, cyc_pow);
    return CountResult{d, r, n, checked_count(a), CountMethod::gessel};
}

CountResult count_via_gessel_tr_eliminated(int d, int r, int n) {
    check_count_args(d, r, n);
    const int rn = r * n;
    const VSeries det = toeplitz_det_truncated(d, r, n);
    const TPoly& f = det.coefficient(rn);

    // Split F_rn by the exponent of t_r; the t_r pairing collapses to the
    // substitution t_r -> vbar^r/r, leaving a pairing over t_1..t_{r-1}
    // against powers of Cyc_r with its t_r term removed.
    const int rr = r - 1;
    std::map<unsigned, TPoly> by_tr_exponent;
    for (const auto& [e, c] : f.terms()) {
        ExponentVector head(e.begin(), e.end() - 1);
        auto it = by_tr_exponent.find(e[static_cast<std::size_t>(rr)]);
        if (it == by_tr_exponent.end())
            it = by_tr_exponent.emplace(e[static_cast<std::size_t>(rr)], TPoly(rr)).first;
        it->second.add_term(head, c);
    }
    TPoly cyc_rest(rr);
    const TPoly cyc = cycle_index(r);
    for (const auto& [e, c] : cyc.terms()) {
        if (e[static_cast<std::size_t>(rr)] != 0)
            continue;
        cyc_rest.add_term(ExponentVector(e.begin(), e.end() - 1), c);
    }

    Rational sum(0);
    Rational inv_r(1, static_cast<unsigned long>(r));
    for (const auto& [tr_exp, part] : by_tr_exponent) {
        if (tr_exp > static_cast<unsigned>(n))
            continue;  // vbar degree would overshoot rn
        Rational weight(1);
        for (unsigned k = 0; k < tr_exp; ++k)
            weight *= inv_r;
        weight /= Rational(factorial(static_cast<unsigned long>(n) - tr_exp));
        sum += weight * gaussian_pairing(part, cyc_rest.pow(static_cast<unsigned>(n) - tr_exp));
    }
    const Rational a = Rational(factorial(static_cast<unsigned long>(rn))) *
                       Rational(factorial(static_cast<unsigned long>(n))) * sum;
    return CountResult{d, r, n, checked_count(a), CountMethod::gessel_tr};
}

std::vector<Rational> gessel_r1_series(int d, int N) {
    if (d < 1 || N < 0)
        throw std::invalid_argument("gessel_r1_series: need d >= 1, N >= 0");
    const int order = 2 * N;
    // Entries I_{|i-j|}(2x) as truncated series in x with constant
    // coefficients (zero-variable TPoly values).
    std::map<int, VSeries> by_offset;
    for (int m = 0; m <= d - 1; ++m) {
        VSeries s(0, order);
        for (int k = 0; 2 * k + m <= order; ++k) {
            Rational c(BigInt(1), factorial(static_cast<unsigned long>(k)) *
                                      factorial(static_cast<unsigned long>(k + m)));
            c.canonicalize();
            s.set_coefficient(2 * k + m, TPoly::constant(0, c));
        }
        by_offset.emplace(m, std::move(s));
    }
    std::vector<std::vector<VSeries>> matrix;
    for (int i = 0; i < d; ++i) {
        std::vector<VSeries> row;
        for (int j = 0; j < d; ++j)
            row.push_back(by_offset.at(i >= j ? i - j : j - i));
        matrix.push_back(std::move(row));
    }
    const VSeries det = det_vseries(matrix, VSeries(0, order), d, DetAlgorithm::automatic);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(N) + 1);
    const ExponentVector empty;
    for (int n = 0; n <= N; ++n)
        coeffs.push_back(det.coefficient(2 * n).coefficient(empty));
    return coeffs;
}

CountResult count_via_gessel_r2(int d, int n) {
    check_count_args(d, 2, n);
    const int order = 2 * n;
    // hhat_j(x) = [z^j] exp(xz + z^2/2) = sum_{a+2b=j} x^a / (a! b! 2^b).
    auto hhat = [](long j) {
        TPoly p(1);
        for (long b = 0; 2 * b <= j; ++b) {
            const long a = j - 2 * b;
            BigInt den = factorial(static_cast<unsigned long>(a)) *
                         factorial(static_cast<unsigned long>(b));
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(b));
            Rational c(BigInt(1), den);
            c.canonicalize();
            p.add_term(ExponentVector{static_cast<unsigned>(a)}, c);
        }
        return p;
    };
    std::map<int, VSeries> by_offset;
    for (int m = -(d - 1); m <= d - 1; ++m) {
        VSeries s(1, order);
        for (int k = 0; k <= order; ++k) {
            const long idx = static_cast<long>(k) + m;
            if (idx < 0)
                continue;
            TPoly h = hhat(idx);
            Rational inv_kfact(BigInt(1), factorial(static_cast<unsigned long>(k)));
            inv_kfact.canonicalize();
            h *= inv_kfact;
            s.set_coefficient(k, std::move(h));
        }
        by_offset.emplace(m, std::move(s));
    }
    std::vector<std::vector<VSeries>> matrix;
    for (int i = 0; i < d; ++i) {
        std::vector<VSeries> row;
        for (int j = 0; j < d; ++j)
            row.push_back(by_offset.at(i - j));
        matrix.push_back(std::move(row));
    }
    const VSeries det = det_vseries(matrix, VSeries(1, order), d, DetAlgorithm::automatic);
    // Termwise Gaussian moments: E[x^{2m}] = (2m-1)!!, odd moments vanish.
    Rational expectation(0);
    for (const auto& [e, c] : det.coefficient(order).terms()) {
        if (e[0] % 2 != 0)
            continue;
        expectation += c * Rational(odd_double_factorial(e[0] / 2));
    }
    const Rational a = Rational(factorial(static_cast<unsigned long>(2 * n))) *
                       Rational(factorial(static_cast<unsigned long>(n))) * expectation;
    return CountResult{d, 2, n, checked_count(a), CountMethod::gessel_r2};
}

Rational prob_lis_le(int d, int r, int n) {
    check_count_args(d, r, n);
    // The RSK sum is the cheapest exact route; all methods agree (tested).
    Rational p(0);
    for (const Partition& lambda :
         partitions_of(static_cast<unsigned>(r) * static_cast<unsigned>(n),
                       static_cast<unsigned>(d)))
        p += Rational(f_lambda(lambda) * kostka_g(lambda, r, n));
    p /= Rational(total_word_count(r, n));
    return p;
}

Rational poissonized_partial_sum(int d, int r, const Rational& theta, int N) {
    if (theta < 0 || N < 0)
        throw std::invalid_argument("poissonized_partial_sum: need theta >= 0, N >= 0");
    Rational sum(0);
    Rational theta_pow(1);
    for (int n = 0; n <= N; ++n) {
        Rational inv_nfact(BigInt(1), factorial(static_cast<unsigned long>(n)));
        inv_nfact.canonicalize();
        sum += prob_lis_le(d, r, n) * theta_pow * inv_nfact;
        theta_pow *= theta;
    }
    return sum;
}

}  // namespace liscount
