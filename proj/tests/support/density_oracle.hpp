#ifndef TWISTLAB_TESTS_DENSITY_ORACLE_HPP
#define TWISTLAB_TESTS_DENSITY_ORACLE_HPP

// Test-only reference implementation of the density sums: a direct double
// loop over (d, p) whose inner data comes exclusively from brute-force
// point counts (ffcount::genus2_a1a2 on the integral model).  It shares
// only the weight/skip conventions with the production path, never the
// residue-class tables or the twist kernel.

#include "twistlab/density.hpp"

namespace twistlab::testsupport {

density::SumResult s1_oracle(const stats::SquarefreeSet& S, double sigma);
density::SumResult s2_oracle(const stats::SquarefreeSet& S, double sigma);

}  // namespace twistlab::testsupport

#endif
