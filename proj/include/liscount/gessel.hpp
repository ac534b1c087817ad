#pragma once

#include <vector>

#include "liscount/symfunc.hpp"
#include "liscount/vseries.hpp"

namespace liscount {

enum class DetAlgorithm {
    automatic,      // laplace up to 4x4, division_free beyond
    laplace,        // cofactor expansion with memoized minors
    division_free,  // Bird's iteration
};

enum class CountMethod { gessel, gessel_tr, gessel_r2, rsk, brute };

const char* to_string(CountMethod method);

// One exact value A_{d+1,r}(n): words of length rn over n letters, each
// letter used r times, longest strictly increasing subsequence <= d.
struct CountResult {
    int d = 0;
    int r = 0;
    int n = 0;
    BigInt value;
    CountMethod method = CountMethod::gessel;
};

// Truncated Toeplitz symbol entry phi_m^{(N)}(v, t): coefficient at v^k is
// h_{k+m}(t_1..t_r)/k!, truncated at v-degree rN.
VSeries toeplitz_entry(int m, int r, int N);

// det of the d x d matrix with entry (i,j) = phi_{i-j}^{(N)}, over the
// order-rN truncated series ring with eager weighted-degree pruning.
VSeries toeplitz_det_truncated(int d, int r, int N,
                               DetAlgorithm alg = DetAlgorithm::automatic);

// A_{d+1,r}(n) = (rn)! * <F_rn, Cyc_r^n>, where F_rn is the v^{rn}
// coefficient of the truncated Toeplitz determinant.
CountResult count_via_gessel(int d, int r, int n, DetAlgorithm alg = DetAlgorithm::automatic);

// Same value, with the t_r pairing replaced by the direct evaluation
// t_r -> vbar^r / r.
CountResult count_via_gessel_tr_eliminated(int d, int r, int n);

// Coefficients of x^{2n}, n = 0..N, of det(I_{|i-j|}(2x)); entry n equals
// A_{d+1,1}(n)/(n!)^2.
std::vector<Rational> gessel_r1_series(int d, int N);

// r = 2 reduction: one-variable symbol exp(v/z + xz + z^2/2), determinant
// coefficient at v^{2n} integrated against exact Gaussian moments.
CountResult count_via_gessel_r2(int d, int n);

// Prob(L <= d) = A_{d+1,r}(n) / ((rn)!/(r!)^n), exact.
Rational prob_lis_le(int d, int r, int n);

// sum_{n=0}^{N} Prob(L <= d) * theta^n / n!, without the e^{-theta}
// prefactor (applied by the CLI at display time only).
Rational poissonized_partial_sum(int d, int r, const Rational& theta, int N);

}  // namespace liscount
