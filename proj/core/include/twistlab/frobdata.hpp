#ifndef TWISTLAB_FROBDATA_HPP
#define TWISTLAB_FROBDATA_HPP

// Residue-degree profiles I(p) = (f_L, f_K, f_M), the quadratic twist-kernel
// character, and fast good-prime Euler data for the twist family, validated
// against the brute-force oracle.

#include <vector>

#include "twistlab/ffcount.hpp"

namespace twistlab::frobdata {

struct FrobeniusProfile {
    int fL, fK, fM;
    bool operator==(const FrobeniusProfile& o) const = default;
};

enum class Source { FastTable, Oracle };

struct EulerData {
    i64 a1, a2;
    FrobeniusProfile profile;
    Source source;
};

// Quadratic character generating L/K on the primes where it matters:
// eps_d(p) = legendre(m, p).  m is squarefree; verified_primes lists the
// good primes used by the empirical inference.
struct TwistKernel {
    i64 m;
    std::vector<i64> verified_primes;
};

// a_p of the base curve y^2 = x^3 + 1; p >= 5.
i64 ap_e0(i64 p);

// (f_K, f_M) for the d-th twist at p.  f_M = 1 iff p = 1 mod 3; f_K is the
// lcm of the splitting-cubic Frobenius order and f_M.  Requires p >= 5 with
// p not dividing 3d(d+3); else InapplicableError.
std::pair<int, int> residue_degrees(i64 d, i64 p);

// Empirical inference of the kernel character.  Candidates are -1 and
// squarefree-part(-2(d^2-9)) times {1,-1,3,-3,d,-d,3d,-3d}; each is matched
// against oracle a1 values at `use_primes` good primes with f_K odd and
// a_p(E0) != 0.  Candidates that induce the same character on all such
// primes (they differ by the square classes of d and -3, both trivial
// there) are identified; exactly one class must survive, else
// InferenceAmbiguousError.
TwistKernel infer_twist_kernel(i64 d, int use_primes = 12);

// Fast Euler data for a good prime (p >= 5, p not dividing d(d+3)).
EulerData euler_factor_good(i64 d, i64 p, const TwistKernel& kernel);

// Brute-force Euler data for a good prime: counts over F_p and F_{p^2}.
EulerData oracle_euler(i64 d, i64 p);

// Re-assembles EulerData from previously computed oracle counts (cache
// replay): the profile is recomputed, the values are taken as given.
EulerData oracle_euler_from(i64 d, i64 p, i64 a1, i64 a2);

// Normalized Dirichlet coefficients: lambda_p = -a1/sqrt(p),
// lambda_{p^2} = (a1^2 - a2)/p.
double lambda_p(i64 d, i64 p, const TwistKernel& kernel);
double lambda_p2(i64 d, i64 p, const TwistKernel& kernel);

// Classification of bad-prime contributions to the density sums.
enum class BadPrimeClass { Zero, OmittedBounded };

struct BadPrimeInfo {
    BadPrimeClass cls;
    double lambda1_bound;  // valid cap on |lambda_p|
    double lambda2_bound;  // valid cap on |lambda_{p^2}|
    bool deep_power;       // p^6 | (d+3): vanishing argument unavailable
};

// p >= 5 dividing d(d+3), d squarefree.  p | (d+3) with p^6 not dividing
// (d+3) gives exact zeros; p | d (and the deep p^6 case) are omitted with
// recorded caps.
BadPrimeInfo bad_prime_lambda(i64 d, i64 p);

// True iff [the twist sextic splits into distinct linear factors mod p]
// <=> [the splitting cubic splits completely and 3 is a square mod p].
// Good p only; the degree-5 reduction at p | (d-3) counts as a full split
// when all roots of the reduction are rational.
bool verify_split_consistency(i64 d, i64 p);

}  // namespace twistlab::frobdata

#endif
