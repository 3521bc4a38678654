#ifndef TWISTLAB_FFCOUNT_HPP
#define TWISTLAB_FFCOUNT_HPP

// Finite-field arithmetic over F_p and F_{p^2}, Legendre symbols,
// character sums, and the direct point-counting oracle for hyperelliptic
// models y^2 = F(x).  Everything here is an O(q) enumeration by design:
// this module anchors the fast table paths, so it stays simple.

#include <utility>
#include <vector>

#include "twistlab/poly.hpp"

namespace twistlab::ffcount {

// --- F_p polynomial helpers (dense, index = degree, trimmed) -------------

using FpPoly = std::vector<u64>;

u64 fp_eval(const FpPoly& f, u64 x, i64 p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly fp_rem(FpPoly a, const FpPoly& b, i64 p);
FpPoly fp_gcd(FpPoly a, FpPoly b, i64 p);
FpPoly fp_derivative(const FpPoly& f, i64 p);
bool fp_separable(const FpPoly& f, i64 p);
// Number of distinct roots in F_p, via gcd(x^p - x, f).
int fp_distinct_roots(const FpPoly& f, i64 p);

// Smallest quadratic nonresidue mod p (p odd prime >= 3).
u64 smallest_nonresidue(i64 p);

// --- module surface -------------------------------------------------------

enum class SplitType { Split3, OneRoot, Irreducible };

struct PointCount {
    i64 q;      // p or p^2
    i64 count;  // points of the smooth projective model over F_q
};

// Legendre symbol (a|p) in {-1, 0, +1}.  Validates that p is an odd prime.
int legendre(i64 a, i64 p);

// Sum over t in F_p of legendre(f(t), p); p >= 5 prime.
i64 char_sum(const IntPoly& f, i64 p);

// Point count of the smooth projective hyperelliptic curve y^2 = F(x)
// over F_{p^ext}, ext in {1, 2}.  deg(F mod p) must be 3, 5 or 6 and the
// reduction squarefree, else DegenerateModelError.  Points at infinity:
// deg 6 contributes 1 + chi(lc), deg 5 contributes 1, deg 3 contributes 1.
PointCount count_points(const IntPoly& F, i64 p, int ext);

// Usual trace of Frobenius of the elliptic curve y^2 = cubic:
// a_p = p + 1 - |E(F_p)|.
i64 trace_ap(const IntPoly& cubic, i64 p);

// First two coefficients of the genus-2 zeta numerator
// P1(t) = 1 + a1 t + a2 t^2 + p a1 t^3 + p^2 t^4, from counts over F_p and
// F_{p^2}.  Throws InternalError if a2 fails to be integral.
std::pair<i64, i64> genus2_a1a2(const IntPoly& F, i64 p);

// Splitting type of a separable cubic mod p, by number of roots: 3 / 1 / 0.
SplitType cubic_split_type(const ExactPoly& g, i64 p);

}  // namespace twistlab::ffcount

#endif
