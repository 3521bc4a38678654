#ifndef TWISTLAB_FAMILY_HPP
#define TWISTLAB_FAMILY_HPP

// Exact constructors for the twist family of y^2 = x^6 + 1 along the
// one-parameter direction studied here, the auxiliary curves feeding the
// counting lemmas, and the symbolic identity verifiers (discriminants,
// mod-p factorizations, the type-B rewriting and the ring-class-polynomial
// root identity).

#include "twistlab/poly.hpp"

namespace twistlab::family {

enum class CurveTag { Cd, TypeB, E0, E1, E2, C1, Ed4, Ed5 };

struct CurveSpec {
    CurveTag tag;
    i64 d = 0;  // meaningful for Cd, TypeB, Ed4, Ed5

    static CurveSpec cd(i64 d);      // d not in {0, 3, -3}
    static CurveSpec type_b(i64 d);  // d != 0
    static CurveSpec e0() { return {CurveTag::E0, 0}; }
    static CurveSpec e1() { return {CurveTag::E1, 0}; }
    static CurveSpec e2() { return {CurveTag::E2, 0}; }
    static CurveSpec c1() { return {CurveTag::C1, 0}; }
    static CurveSpec ed4(i64 d);     // d != 0
    static CurveSpec ed5(i64 d);     // d != 0
};

// The exact rational parameters attached to the d-th twist; they satisfy
// 3 d s^2 + z^2 = 1.
struct FamilyConstants {
    mpq_class u, v, s, z;
    static FamilyConstants at(i64 d);  // d != -3
};

// The degree-6 rational polynomial defining the d-th twist (leading
// coefficient 27(d-3)/(d+3)).  d not in {0, 3, -3}.
ExactPoly twist_sextic(i64 d);

// (d+3)^2 * twist_sextic(d): an integral model, used for all mod-p work.
IntPoly twist_sextic_integral(i64 d);

// Monic cubic x^3 - (3/4)x - (d-3)/(4(d+3)) whose root generates the cubic
// subfield attached to the twist; its mod-p splitting type drives every
// residue-degree computation.  d != -3.
ExactPoly splitting_cubic(i64 d);

// Monic cubic whose roots are the linear coefficients of the three
// quadratic factors of the twist sextic; discriminant
// 2^8 d^3 (d+3)^4 / (d-3)^4.  d not in {3, -3}.
ExactPoly quadratic_factor_cubic(i64 d);

// Integral model of any curve in CurveSpec.  For Cd this is
// twist_sextic_integral (same point counts as the rational model whenever
// p does not divide d+3).
IntPoly curve_poly(const CurveSpec& spec);

// Checks, mod p, that the twist sextic factors into the three quadratics
// x^2 + r x - d/3 over the roots r of quadratic_factor_cubic(d), and that
// the cubic's discriminant equals its closed form exactly.
// InapplicableError when the cubic does not split completely mod p (or a
// denominator vanishes).
bool verify_quadratic_factorization(i64 d, i64 p);

// Checks, mod p, the factorization of the twist sextic into two conjugate
// cubics over F_p(sqrt(3d)).  Both square roots of 3d are exercised.
// InapplicableError when 3d is a nonsquare mod p or a denominator
// vanishes.
bool verify_two_cubic_factorization(i64 d, i64 p);

// The degree-6 integral polynomial of the second (type-B) family; equals
// (27d/2)((x-1)^6 + d(x+1)^6).
IntPoly type_b_sextic(i64 d);  // d != 0
bool type_b_identity(i64 d);

// Exact root check of H(x) = x^2 - 153542016 x - 1790957481984 at
// 76771008 +- 44330496 sqrt(3), carried out in Z[sqrt(3)].
bool verify_h_minus36();

// The two naive conductor bounds exposed for reference: log of
// 2^26 3^21 d^4 (d+3)^4 and of 2^26 3^21 d^2 (d+3)^4.  The exact known
// part lives in the conductor module.
double log_conductor_bound_quartic(i64 d);
double log_conductor_bound_quadratic(i64 d);

}  // namespace twistlab::family

#endif
