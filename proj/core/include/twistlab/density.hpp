#ifndef TWISTLAB_DENSITY_HPP
#define TWISTLAB_DENSITY_HPP

// 1-level-density machinery: the Fejer test-function pair, the prime sums
// S1 and S2 over the twist family, the auxiliary prime-sum asymptotics,
// and the average-analytic-rank bound report.
//
// Reproducibility contract: every sum is assembled from exact per-prime
// integer inner sums, merged in ascending prime order with compensated
// accumulation.  Identical inputs give bit-identical outputs, for any
// worker count.

#include "twistlab/aptables.hpp"
#include "twistlab/cache.hpp"
#include "twistlab/frobdata.hpp"
#include "twistlab/stats.hpp"

namespace twistlab::density {

struct TestFunction {
    double sigma;
    explicit TestFunction(double s);
    // phi(x) = sin^2(pi sigma x) / (2 pi x)^2, phi(0) = sigma^2/4
    double phi(double x) const;
    // phi_hat(u) = (sigma - |u|)/4 on [-sigma, sigma], 0 outside
    double phi_hat(double u) const;
};

struct SumResult {
    double value = 0;
    // Sum of the per-term caps of everything skipped (p in {2,3}, p | d,
    // and p^6 | d+3), in the same normalization as `value`.
    double budget = 0;
};

// S1: (2/(|S| log X)) sum_{d,p} lambda_p(C_d) (log p / sqrt p)
//     phi_hat(log p / log X), over good primes 5 <= p < X^sigma.
// Terms with p | (d+3), p^6 not dividing d+3, are exact zeros; p in {2,3}
// and p | d are skipped into the budget.
SumResult s1_sum(const stats::SquarefreeSet& S, double sigma, int workers = 1);
SumResult s1_sum(double X, double sigma, int workers = 1);

// S2: same shape with lambda_{p^2}, weight log p / p and
// phi_hat(2 log p / log X); prime range p < X^{sigma/2}.  The inner sums
// decompose over residue classes mod p, so no twist kernel is needed.
SumResult s2_sum(const stats::SquarefreeSet& S, double sigma, int workers = 1);
SumResult s2_sum(double X, double sigma, int workers = 1);

// (2/log X) sum_{p = 2 mod 3, p < X^{sigma/2}} (log p / p)
// phi_hat(2 log p / log X); converges to phi(0)/4 = sigma^2/16.
double prime_sum_2mod3(double X, double sigma);

struct RsDecayReport {
    double X, sigma;
    double e0e1, e0e2, e0c1;  // (1/logX) sum (log p/p^2) phihat(logp/logX) a_p a_p'
    double sq_1mod3;          // same with (a_p(E0)^2 - 2p), p = 1 mod 3, squared weight
    double sq_2mod3;          // contrast: p = 2 mod 3 branch (a_p(E0) = 0 there)
    double sq_2mod3_closed;   // its closed form -2 sum (log p/p) phihat(2 log p/log X)/log X
};
RsDecayReport rs_decay_checks(double X, double sigma, int workers,
                              const cache::CacheDir& cache);

struct DensityReport {
    double X = 0, sigma = 0;
    double S1 = 0, S2 = 0;
    double meanlogN_low = 0, meanlogN_high = 0;  // mean log conductor bracket
    double bound_low = 0, bound_high = 0;
    double skipped_budget = 0;
    bool sigma_above_theorem_range = false;  // sigma > 1/3
};

DensityReport density_report(double X, double sigma, int workers,
                             const cache::CacheDir& cache);

// (bound_low, bound_high) of the averaged-rank bound at finite X.
std::pair<double, double> rank_bound(double X, double sigma, int workers,
                                     const cache::CacheDir& cache);

// 1/4 + 6/sigma.
double asymptotic_bound(double sigma);
mpq_class asymptotic_bound_exact(const mpq_class& sigma);

}  // namespace twistlab::density

#endif
