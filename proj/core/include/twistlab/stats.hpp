#ifndef TWISTLAB_STATS_HPP
#define TWISTLAB_STATS_HPP

// Squarefree enumeration and exact verification of the two counting
// tables over F_p, plus the squarefree sieve check in residue classes.

#include "twistlab/ffcount.hpp"

namespace twistlab::stats {

struct SquarefreeSet {
    double X = 0;
    std::vector<i64> members;  // squarefree 0 < d < X, ascending, d = 3 removed
    bool excluded_three = false;
};

// Exact sieve enumeration; d = 3 is excluded (the family is undefined
// there) and the exclusion recorded.
SquarefreeSet squarefree_enum(double X);

// Per-residue-class data from one O(p) pass: for every c in F_p \ {0,-3},
// the number of roots of the splitting cubic for parameter c (0, 1 or 3)
// and the Legendre symbol (c|p).  The excluded classes carry roots = 255.
struct ClassData {
    i64 p;
    std::vector<uint8_t> roots;
    std::vector<int8_t> chi;
};
ClassData class_pass(i64 p);

struct Table1Row {
    i64 p;
    int chi_d;                // legendre(d, p)
    ffcount::SplitType type;
    i64 measured;
    i64 predicted;
    i64 deviation;            // |measured - predicted|, exactly 0 expected
};
// The three classes applicable for p mod 3; counts are exact.
std::vector<Table1Row> table1(i64 p);

struct Table2Row {
    i64 p;
    int chi_d;
    int chi_w;                // legendre(-2(d^2-9), p); the symbol-0 class d = 3 counts as +1
    ffcount::SplitType type;
    i64 measured;
    double predicted;         // main term from a_p(E1), a_p(E2), a_p(C1)
    double deviation;
};
std::vector<Table2Row> table2(i64 p);

struct SieveCheck {
    i64 p;
    std::vector<i64> A;
    double X;
    i64 measured;
    double predicted_minus;   // with 1/(1 - p^-2)  (the proof's factor)
    double predicted_plus;    // with 1/(1 + p^-2)  (the statement's factor)
    double dev_minus, dev_plus;
    double const_minus, const_plus;  // deviation / ((1+|A|) sqrt(X))
};
// Count of members of S(X) in the classes A modulo p against both
// normalizations.  0 in A -> DomainError; X >= p required.
SieveCheck sieve_check(i64 p, std::vector<i64> A, const SquarefreeSet& S);
SieveCheck sieve_check(i64 p, std::vector<i64> A, double X);

}  // namespace twistlab::stats

#endif
