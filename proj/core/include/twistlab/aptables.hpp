#ifndef TWISTLAB_APTABLES_HPP
#define TWISTLAB_APTABLES_HPP

// Shared trace tables for the four auxiliary curves.  Single primes go
// through the generic oracle; ranges use an additions-only character-sum
// sweep (finite differences plus an incremental square bitmap) and are
// persisted as CSV tables so density runs can reuse them.

#include "twistlab/cache.hpp"
#include "twistlab/ffcount.hpp"

namespace twistlab::aptables {

enum class AuxCurve { E0, E1, E2, C1 };

const char* curve_name(AuxCurve c);

// a_p for one prime p >= 5 (for C1 this is -a_{p,1}).
i64 ap_single(AuxCurve c, i64 p);

// (p, a_p) for every prime 5 <= p <= pmax, ascending.  CM vanishing is
// used to skip inert primes: a_p(E0) = 0 for p = 2 mod 3, and the odd
// models E1, E2, C1 have a_p = 0 for p = 3 mod 4 (both facts are
// regression-tested against ap_single).
std::vector<std::pair<i64, i64>> ap_range(AuxCurve c, i64 pmax, int workers,
                                          const cache::CacheDir& cache);

}  // namespace twistlab::aptables

#endif
