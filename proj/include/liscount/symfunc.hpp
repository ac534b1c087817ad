#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liscount/tpoly.hpp"

namespace liscount {

// Weakly decreasing positive parts; the empty partition has weight 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);  // validates monotonicity

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const;
    std::size_t length() const { return parts_.size(); }
    Partition conjugate() const;

    bool operator==(const Partition& other) const = default;

    std::string str() const;  // "(3,1)"

private:
    std::vector<unsigned> parts_;
};

// All partitions of `weight` with at most `max_length` parts, in decreasing
// lexicographic order. Weight 0 yields the empty partition alone.
std::vector<Partition> partitions_of(unsigned weight, unsigned max_length);

struct CycleTypeData {
    Partition partition;
    BigInt z_mu;                  // prod_i i^{m_i} * m_i!
    BigInt conjugacy_class_size;  // |mu|! / z_mu
};

CycleTypeData cycle_type_data(const Partition& mu);

// h_k(t_1..t_r): coefficient of z^k in exp(sum_j t_j z^j). Zero for k < 0,
// one for k = 0.
TPoly complete_homogeneous(long k, int r);

// Cyc_r(t_1..t_r) = (1/r!) sum_{|mu|=r} |C_mu| prod t_{mu_i}
//                 = h_r(t_1, t_2/2, ..., t_r/r).
TPoly cycle_index(int r);

// Schur polynomial in t_1..t_r via Jacobi-Trudi; the empty partition gives 1.
TPoly schur(const Partition& lambda, int r);

// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt f_lambda(const Partition& lambda);

// Kostka number K_{lambda,(r^n)} via the pairing <s_lambda, Cyc_r^n>.
// Requires |lambda| = rn; the pairing must come out an exact integer.
BigInt kostka_g(const Partition& lambda, int r, int n);

// Independent oracle: counts semistandard tableaux of shape lambda with the
// given content by direct backtracking over column-strict fillings.
BigInt kostka_ssyt_oracle(const Partition& lambda, const std::vector<unsigned>& content);

}  // namespace liscount
