#include "twistlab/ffcount.hpp"

#include <algorithm>
#include <cmath>

#include "twistlab/errors.hpp"

namespace twistlab::ffcount {

namespace {

void check_odd_prime(i64 p) {
    if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<u64>(p)))
        throw UsageError("modulus must be an odd prime, got " + std::to_string(p));
}

void check_p5(i64 p) {
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw UsageError("p must be a prime >= 5, got " + std::to_string(p));
}

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Quadratic-residue bitmap for F_p; table[v] = 1 iff v is a nonzero square.
std::vector<uint8_t> square_table(i64 p) {
    std::vector<uint8_t> sq(static_cast<size_t>(p), 0);
    u64 v = 0;
    for (i64 x = 1; x <= (p - 1) / 2; ++x) {
        // (x)^2 = (x-1)^2 + 2x - 1, additions only
        v += static_cast<u64>(2 * x - 1);
        if (v >= static_cast<u64>(p)) v -= static_cast<u64>(p);
        if (v >= static_cast<u64>(p)) v -= static_cast<u64>(p);
        sq[v] = 1;
    }
    return sq;
}

inline int chi_from_table(const std::vector<uint8_t>& sq, u64 v) {
    if (v == 0) return 0;
    return sq[v] ? 1 : -1;
}

// Arithmetic in F_{p^2} = F_p(sqrt(nu)), elements (a, b) ~ a + b sqrt(nu).
struct Fp2 {
    u64 a, b;
};

inline Fp2 fp2_mul(Fp2 x, Fp2 y, u64 p, u64 nu) {
    u64 aa = mulmod(x.a, y.a, p);
    u64 bb = mulmod(x.b, y.b, p);
    u64 ab = mulmod(x.a, y.b, p);
    u64 ba = mulmod(x.b, y.a, p);
    u64 re = (aa + mulmod(nu, bb, p)) % p;
    u64 im = (ab + ba) % p;
    return {re, im};
}

}  // namespace

u64 fp_eval(const FpPoly& f, u64 x, i64 p) {
    u64 r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        r = (mulmod(r, x, static_cast<u64>(p)) + *it) % static_cast<u64>(p);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], static_cast<u64>(p))) % static_cast<u64>(p);
    trim(r);
    return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, i64 p) {
    if (b.empty()) throw UsageError("fp_rem: division by zero polynomial");
    u64 up = static_cast<u64>(p);
    u64 lcinv = invmod(b.back(), up);
    while (a.size() >= b.size()) {
        u64 q = mulmod(a.back(), lcinv, up);
        size_t shift = a.size() - b.size();
        if (q != 0) {
            for (size_t i = 0; i < b.size(); ++i) {
                u64 sub = mulmod(q, b[i], up);
                u64& t = a[shift + i];
                t = (t + up - sub) % up;
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, i64 p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), static_cast<u64>(p));
        for (auto& c : a) c = mulmod(c, inv, static_cast<u64>(p));
    }
    return a;
}

FpPoly fp_derivative(const FpPoly& f, i64 p) {
    FpPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(mulmod(f[i], static_cast<u64>(i % static_cast<size_t>(p)), static_cast<u64>(p)));
    trim(d);
    return d;
}

bool fp_separable(const FpPoly& f, i64 p) {
    FpPoly d = fp_derivative(f, p);
    if (d.empty()) return false;
    return fp_gcd(f, d, p).size() == 1;
}

int fp_distinct_roots(const FpPoly& f, i64 p) {
    // gcd(x^p - x, f): compute x^p mod f by binary exponentiation.
    if (f.size() <= 1) return 0;
    FpPoly x = {0, 1};
    FpPoly acc = {1};
    FpPoly base = fp_rem(x, f, p);
    u64 e = static_cast<u64>(p);
    while (e) {
        if (e & 1) acc = fp_rem(fp_mul(acc, base, p), f, p);
        base = fp_rem(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    // acc = x^p mod f; subtract x
    FpPoly diff = acc;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + static_cast<u64>(p) - 1) % static_cast<u64>(p);
    trim(diff);
    FpPoly g = fp_gcd(diff, f, p);
    return static_cast<int>(g.size()) - 1;
}

u64 smallest_nonresidue(i64 p) {
    for (u64 nu = 2;; ++nu)
        if (jacobi(static_cast<i64>(nu), p) == -1) return nu;
}

int legendre(i64 a, i64 p) {
    check_odd_prime(p);
    return jacobi(a, p);
}

i64 char_sum(const IntPoly& f, i64 p) {
    check_p5(p);
    FpPoly fp = reduce_mod(f, p);
    auto sq = square_table(p);
    i64 sum = 0;
    for (i64 t = 0; t < p; ++t)
        sum += chi_from_table(sq, fp_eval(fp, static_cast<u64>(t), p));
    return sum;
}

PointCount count_points(const IntPoly& F, i64 p, int ext) {
    check_p5(p);
    if (ext != 1 && ext != 2) throw UsageError("ext must be 1 or 2");
    FpPoly f = reduce_mod(F, p);
    int deg = static_cast<int>(f.size()) - 1;
    if (deg != 3 && deg != 5 && deg != 6)
        throw DegenerateModelError("deg(F mod p) = " + std::to_string(deg) +
                                   " not in {3,5,6} at p = " + std::to_string(p));
    if (!fp_separable(f, p))
        throw DegenerateModelError("F mod p has a repeated root at p = " + std::to_string(p));

    u64 up = static_cast<u64>(p);
    auto sq = square_table(p);

    if (ext == 1) {
        i64 count = 0;
        for (i64 x = 0; x < p; ++x)
            count += 1 + chi_from_table(sq, fp_eval(f, static_cast<u64>(x), p));
        if (deg == 6)
            count += 1 + chi_from_table(sq, f.back());
        else
            count += 1;  // single point at infinity for deg 3 and deg 5
        return {p, count};
    }

    // F_{p^2} enumeration.  chi_2(v) is decided via the norm to F_p:
    // v is a square in F_{p^2} iff N(v) = a^2 - nu b^2 is a square in F_p.
    u64 nu = smallest_nonresidue(p);
    i64 count = 0;
    for (u64 xa = 0; xa < up; ++xa) {
        for (u64 xb = 0; xb < up; ++xb) {
            Fp2 x{xa, xb};
            Fp2 v{0, 0};
            for (auto it = f.rbegin(); it != f.rend(); ++it) {
                v = fp2_mul(v, x, up, nu);
                v.a = (v.a + *it) % up;
            }
            if (v.a == 0 && v.b == 0) {
                count += 1;
            } else {
                u64 norm = (mulmod(v.a, v.a, up) + up -
                            mulmod(nu, mulmod(v.b, v.b, up), up) % up) % up;
                count += 1 + chi_from_table(sq, norm);
            }
        }
    }
    if (deg == 6)
        count += 2;  // lc is in F_p^x, hence a square in F_{p^2}: two points
    else
        count += 1;
    return {p * p, count};
}

i64 trace_ap(const IntPoly& cubic, i64 p) {
    check_p5(p);
    FpPoly f = reduce_mod(cubic, p);
    if (static_cast<int>(f.size()) - 1 != 3 || !fp_separable(f, p))
        throw DegenerateModelError("bad reduction of cubic at p = " + std::to_string(p));
    PointCount n = count_points(cubic, p, 1);
    i64 ap = p + 1 - n.count;
    if (static_cast<double>(ap) * ap > 4.0 * static_cast<double>(p))
        throw InternalError("trace out of Weil range");
    return ap;
}

std::pair<i64, i64> genus2_a1a2(const IntPoly& F, i64 p) {
    PointCount n1 = count_points(F, p, 1);
    PointCount n2 = count_points(F, p, 2);
    i64 a1 = n1.count - p - 1;
    i64 frob2 = p * p + 1 - n2.count;  // sum of squares of the Frobenius roots
    i64 num = a1 * a1 - frob2;
    if (num % 2 != 0)
        throw InternalError("non-integral a2 (counting bug) at p = " + std::to_string(p));
    return {a1, num / 2};
}

SplitType cubic_split_type(const ExactPoly& g, i64 p) {
    check_p5(p);
    FpPoly f = reduce_mod(g, p);  // throws NotReducibleError on denominators
    if (static_cast<int>(f.size()) - 1 != 3)
        throw NotReducibleError("reduction mod " + std::to_string(p) + " is not a cubic");
    if (!fp_separable(f, p))
        throw DegenerateModelError("cubic is inseparable mod " + std::to_string(p));
    int r = fp_distinct_roots(f, p);
    switch (r) {
        case 3: return SplitType::Split3;
        case 1: return SplitType::OneRoot;
        case 0: return SplitType::Irreducible;
        default: throw InternalError("separable cubic with " + std::to_string(r) + " roots");
    }
}

}  // namespace twistlab::ffcount
