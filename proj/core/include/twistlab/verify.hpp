#ifndef TWISTLAB_VERIFY_HPP
#define TWISTLAB_VERIFY_HPP

// Invariant sweeps shared by the CLI `verify` subcommand and the
// acceptance suite.  Each sweep returns one row per check; a sweep passes
// iff every row does.

#include <string>
#include <vector>

#include "twistlab/numeric.hpp"

namespace twistlab::verify {

struct CheckResult {
    std::string suite;
    std::string check;
    std::string params;
    bool pass;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& rows);

// Exact class counts for every prime 5 <= p <= pmax.
std::vector<CheckResult> verify_tables(i64 pmax);

// Refined class counts against their main terms; deviations must stay
// within `bound` for every 5 <= p <= pmax.  The final row reports the
// maximum deviation seen.
std::vector<CheckResult> verify_table2(i64 pmax, double bound);

// Fast-table Euler data against the brute-force oracle for every
// squarefree d <= dmax (d != 3) and good prime p <= pmax; also checks
// a1 = 0 at p = 2 mod 3 and the (6,6,2) zeta numerator.
std::vector<CheckResult> verify_euler(i64 dmax, i64 pmax, int workers);

// Closed-form conductor exponents against the cluster-picture engine for
// every squarefree d <= dmax and p >= 5 dividing d(d+3).
std::vector<CheckResult> verify_conductor(i64 dmax);

// Exact identity suite: discriminants, family constants, cubic
// irreducibility, type-B rewriting and isogeny counts, the ring-class
// root check, and random factorization checks.
std::vector<CheckResult> verify_identities(u64 seed = 20250810);

}  // namespace twistlab::verify

#endif
