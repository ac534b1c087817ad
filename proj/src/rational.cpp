#include "liscount/rational.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace liscount {

BigInt factorial(unsigned long k) {
    static std::mutex mu;
    static std::vector<BigInt> table{BigInt(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k)
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    return table[k];
}

BigInt odd_double_factorial(unsigned long m) {
    BigInt p(1);
    for (unsigned long i = 1; i <= m; ++i)
        p *= 2 * i - 1;
    return p;
}

BigInt total_word_count(int r, int n) {
    if (r < 1 || n < 0)
        throw std::invalid_argument("total_word_count: need r >= 1, n >= 0");
    BigInt denom;
    mpz_pow_ui(denom.get_mpz_t(), factorial(static_cast<unsigned long>(r)).get_mpz_t(),
               static_cast<unsigned long>(n));
    BigInt result;
    mpz_divexact(result.get_mpz_t(),
                 factorial(static_cast<unsigned long>(r) * static_cast<unsigned long>(n)).get_mpz_t(),
                 denom.get_mpz_t());
    return result;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

BigInt to_integer(const Rational& value) {
    if (!is_integer(value))
        throw std::logic_error("expected an exact integer, got " + value.get_str());
    return value.get_num();
}

namespace {

BigInt pow10(unsigned long k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

Rational rational_pow10(long k) {
    if (k >= 0)
        return Rational(pow10(static_cast<unsigned long>(k)));
    Rational q(BigInt(1), pow10(static_cast<unsigned long>(-k)));
    q.canonicalize();
    return q;
}

}  // namespace

std::string to_decimal(const Rational& value, int digits) {
    if (digits < 1)
        digits = 1;
    if (value == 0)
        return "0";
    const bool negative = value < 0;
    Rational q = negative ? Rational(-value) : value;
    q.canonicalize();

    // Exponent e with 10^e <= q < 10^{e+1}; the size estimate is off by at
    // most one in each direction, fixed up by comparison.
    long e = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 10));
    while (cmp(q, rational_pow10(e + 1)) >= 0)
        ++e;
    while (cmp(q, rational_pow10(e)) < 0)
        --e;

    // mantissa = round(q * 10^{digits-1-e}), half away from zero.
    Rational scaled = q * rational_pow10(digits - 1 - e);
    BigInt mant;
    BigInt twice_num = 2 * scaled.get_num() + scaled.get_den();
    BigInt twice_den = 2 * scaled.get_den();
    mpz_fdiv_q(mant.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    if (mant >= pow10(static_cast<unsigned long>(digits))) {
        mant /= 10;  // rounding carried into a new leading digit
        ++e;
    }

    std::string m = mant.get_str();
    std::string out;
    if (e >= digits - 1 && e <= digits + 5) {
        out = m + std::string(static_cast<std::size_t>(e - digits + 1), '0');
    } else if (e >= 0 && e < digits - 1) {
        out = m.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              m.substr(static_cast<std::size_t>(e + 1));
    } else if (e < 0 && e >= -4) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + m;
    } else {
        std::string frac = m.substr(1);
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        out = m.substr(0, 1);
        if (!frac.empty())
            out += "." + frac;
        out += "e" + std::string(e >= 0 ? "+" : "-") + std::to_string(std::labs(e));
    }
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0')
            out.pop_back();
        if (out.back() == '.')
            out.pop_back();
    }
    return negative ? "-" + out : out;
}

Rational exp_approx(const Rational& x, int digits) {
    if (digits < 1)
        digits = 1;
    if (x < 0)
        return Rational(1) / exp_approx(Rational(-x), digits);
    const Rational tol = rational_pow10(-(digits + 2));
    Rational sum(1);
    Rational term(1);
    unsigned long k = 0;
    // Past k > 2x the terms at least halve, so the tail is bounded by the
    // last term retained.
    while (true) {
        ++k;
        term *= x;
        term /= static_cast<unsigned long>(k);
        sum += term;
        if (Rational(k) > 2 * x && term < tol * sum)
            break;
    }
    return sum;
}

}  // namespace liscount
