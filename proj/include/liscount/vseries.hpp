#pragma once

#include <map>

#include "liscount/tpoly.hpp"

namespace liscount {

// Formal series in the book-keeping variable v, truncated at a fixed order,
// with TPoly coefficients. Products discard v-degrees above the truncation
// order. An optional weighted-degree limit additionally discards t-monomials
// above the limit during arithmetic; see toeplitz_det_truncated for the
// argument that makes this sound inside the determinant expansion.
class VSeries {
public:
    VSeries(int nvars, int order);
    static VSeries one(int nvars, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }

    long degree_limit() const { return degree_limit_; }
    void set_degree_limit(long limit) { degree_limit_ = limit; }  // -1 disables

    void set_coefficient(int m, TPoly p);

    // Coefficient at v^m. Degrees beyond the truncation order were discarded
    // and are unknown, hence out_of_range rather than zero.
    const TPoly& coefficient(int m) const;

    const std::map<int, TPoly>& coefficients() const { return coeffs_; }

    VSeries operator+(const VSeries& other) const;
    VSeries operator-(const VSeries& other) const;
    VSeries operator-() const;
    VSeries operator*(const VSeries& other) const;

    bool operator==(const VSeries& other) const;

private:
    int nvars_;
    int order_;
    long degree_limit_ = -1;
    std::map<int, TPoly> coeffs_;  // zero coefficients never stored
    TPoly zero_;
};

VSeries vseries_mul(const VSeries& a, const VSeries& b, int order, long degree_limit = -1);

}  // namespace liscount
