#pragma once

#include <map>
#include <string>
#include <vector>

#include "liscount/rational.hpp"

namespace liscount {

// Exponents of t_1..t_r; entry j-1 holds the exponent of t_j.
using ExponentVector = std::vector<unsigned>;

// Weighted degree under the grading deg(t_j) = j.
long weighted_degree(const ExponentVector& e);

// Graded-lexicographic term order: weighted degree first, then lex.
// Fixes the iteration order of term maps, so output is deterministic.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse polynomial in t_1..t_nvars over Rational. Zero coefficients are
// never stored, so two equal polynomials have identical term maps.
class TPoly {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

    explicit TPoly(int nvars);
    static TPoly constant(int nvars, const Rational& c);
    static TPoly variable(int nvars, int j);  // t_j, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const ExponentVector& e) const;

    // Accumulates c * t^e, erasing the term if the sum cancels.
    void add_term(const ExponentVector& e, const Rational& c);

    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly& operator*=(const Rational& scalar);
    TPoly operator-() const;

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const Rational& s) { return a *= s; }
    friend TPoly operator*(const Rational& s, TPoly a) { return a *= s; }
    TPoly operator*(const TPoly& other) const;

    bool operator==(const TPoly& other) const = default;

    TPoly pow(unsigned n) const;

    long max_weighted_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;       // vacuously true for zero

    // Drops every term of weighted degree above `limit`.
    void prune_above(long limit);

    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;  // diagnostics only

private:
    int nvars_;
    TermMap terms_;
};

// Macdonald pairing in normalized power-sum variables: distinct monomials
// are orthogonal and <t^k, t^k> = prod_j k_j!.
Rational gaussian_pairing(const TPoly& p, const TPoly& q);

}  // namespace liscount
