#pragma once

#include <gmpxx.h>

#include <string>

namespace liscount {

using BigInt = mpz_class;
using Rational = mpq_class;

// k!, backed by a process-wide memo table.
BigInt factorial(unsigned long k);

// (2m-1)!!, the 2m-th moment of the standard Gaussian; m = 0 gives 1.
BigInt odd_double_factorial(unsigned long m);

// (rn)!/(r!)^n, the number of words over n letters with each letter used r times.
BigInt total_word_count(int r, int n);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// Renders `value` rounded to `digits` significant digits. Display only;
// nothing downstream ever consumes the decimal form.
std::string to_decimal(const Rational& value, int digits);

// Taylor approximation of e^x accurate to at least `digits` significant
// digits. Display helper only.
Rational exp_approx(const Rational& x, int digits);

bool is_integer(const Rational& value);

// Throws std::logic_error when the value has a nontrivial denominator.
BigInt to_integer(const Rational& value);

}  // namespace liscount
