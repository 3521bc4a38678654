#include "twistlab/family.hpp"

#include <cmath>

#include "twistlab/errors.hpp"
#include "twistlab/ffcount.hpp"

namespace twistlab::family {

namespace {

void check_cd_param(i64 d) {
    if (d == 0 || d == 3 || d == -3)
        throw DomainError("twist parameter d must avoid {0, 3, -3}, got " + std::to_string(d));
}

mpq_class q(i64 num, i64 den = 1) {
    mpq_class r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

}  // namespace

CurveSpec CurveSpec::cd(i64 d) {
    check_cd_param(d);
    return {CurveTag::Cd, d};
}

CurveSpec CurveSpec::type_b(i64 d) {
    if (d == 0) throw DomainError("type-B parameter d must be nonzero");
    return {CurveTag::TypeB, d};
}

CurveSpec CurveSpec::ed4(i64 d) {
    if (d == 0) throw DomainError("d must be nonzero");
    return {CurveTag::Ed4, d};
}

CurveSpec CurveSpec::ed5(i64 d) {
    if (d == 0) throw DomainError("d must be nonzero");
    return {CurveTag::Ed5, d};
}

FamilyConstants FamilyConstants::at(i64 d) {
    if (d == -3) throw DomainError("constants undefined at d = -3");
    FamilyConstants fc;
    fc.u = 1;
    fc.v = q(d);
    fc.s = q(2, d + 3);
    fc.z = q(d - 3, d + 3);
    return fc;
}

ExactPoly twist_sextic(i64 d) {
    check_cd_param(d);
    // 27(d-3)/(d+3) * (x^6 - 12d/(d-3) x^5 - 5d x^4 + 40d^2/(3(d-3)) x^3
    //                  + 5d^2/3 x^2 - 4d^3/(3(d-3)) x - d^3/27)
    mpz_class D = static_cast<long>(d);
    mpz_class dm = D - 3, dp = D + 3;
    auto frac = [&dp](const mpz_class& num) {
        mpq_class r(num, dp);
        r.canonicalize();
        return r;
    };
    std::vector<mpq_class> c(7);
    c[6] = frac(27 * dm);
    c[5] = frac(-324 * D);
    c[4] = frac(-135 * D * dm);
    c[3] = frac(360 * D * D);
    c[2] = frac(45 * D * D * dm);
    c[1] = frac(-36 * D * D * D);
    c[0] = frac(-D * D * D * dm);
    return ExactPoly(std::move(c));
}

IntPoly twist_sextic_integral(i64 d) {
    check_cd_param(d);
    mpz_class D = static_cast<long>(d);
    mpz_class dm = D - 3, dp = D + 3;
    std::vector<mpz_class> c(7);
    c[6] = 27 * dm * dp;
    c[5] = -324 * D * dp;
    c[4] = -135 * D * dm * dp;
    c[3] = 360 * D * D * dp;
    c[2] = 45 * D * D * dm * dp;
    c[1] = -36 * D * D * D * dp;
    c[0] = -D * D * D * dm * dp;
    return IntPoly(std::move(c));
}

ExactPoly splitting_cubic(i64 d) {
    if (d == -3) throw DomainError("splitting cubic undefined at d = -3");
    std::vector<mpq_class> c(4);
    c[3] = 1;
    c[2] = 0;
    c[1] = q(-3, 4);
    c[0] = q(-(d - 3), 4 * (d + 3));
    return ExactPoly(std::move(c));
}

ExactPoly quadratic_factor_cubic(i64 d) {
    if (d == 3 || d == -3) throw DomainError("cubic undefined at d = +-3");
    std::vector<mpq_class> c(4);
    c[3] = 1;
    c[2] = q(12 * d, d - 3);
    c[1] = q(-4 * d);
    c[0] = q(-16 * d * d, 3 * (d - 3));
    return ExactPoly(std::move(c));
}

IntPoly curve_poly(const CurveSpec& spec) {
    switch (spec.tag) {
        case CurveTag::Cd:
            return twist_sextic_integral(spec.d);
        case CurveTag::TypeB:
            return type_b_sextic(spec.d);
        case CurveTag::E0:
            return IntPoly::from_ints({1, 0, 0, 1});
        case CurveTag::E1:
            return IntPoly::from_ints({0, -3, 0, 1});
        case CurveTag::E2:
            return IntPoly::from_ints({0, 18, 0, -2});
        case CurveTag::C1:
            return IntPoly::from_ints({0, 18, 0, -42, 0, 24});
        case CurveTag::Ed4: {
            mpz_class D = static_cast<long>(spec.d);
            return IntPoly({216 * D * D * D * D, 0, 0, 1});
        }
        case CurveTag::Ed5: {
            mpz_class D = static_cast<long>(spec.d);
            return IntPoly({216 * D * D * D * D * D, 0, 0, 1});
        }
    }
    throw InternalError("unknown curve tag");
}

bool verify_quadratic_factorization(i64 d, i64 p) {
    check_cd_param(d);
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw UsageError("p must be a prime >= 5");
    if (d % p == 0 || (d + 3) % p == 0 || (d - 3) % p == 0)
        throw InapplicableError("denominator or discriminant vanishes mod p");

    // Exact discriminant identity of the factor cubic.
    ExactPoly res = quadratic_factor_cubic(d);
    mpq_class want(0);
    {
        mpz_class D = static_cast<long>(d);
        mpz_class num = 256 * D * D * D;
        mpz_class dp4 = (D + 3) * (D + 3) * (D + 3) * (D + 3);
        mpz_class dm4 = (D - 3) * (D - 3) * (D - 3) * (D - 3);
        want = mpq_class(num * dp4) / mpq_class(dm4);
        want.canonicalize();
    }
    if (discriminant(res) != want) return false;

    // The cubic must split completely mod p, else the quadratic
    // factorization lives in a bigger field.
    auto rbar = reduce_mod(res, p);
    if (!ffcount::fp_separable(rbar, p) || ffcount::fp_distinct_roots(rbar, p) != 3)
        throw InapplicableError("factor cubic does not split mod p");

    std::vector<u64> roots;
    for (i64 x = 0; x < p && roots.size() < 3; ++x)
        if (ffcount::fp_eval(rbar, static_cast<u64>(x), p) == 0)
            roots.push_back(static_cast<u64>(x));

    u64 up = static_cast<u64>(p);
    u64 md3 = mulmod(static_cast<u64>(((d % p) + p) % p), invmod(3 % up, up), up);
    u64 neg_d3 = (up - md3) % up;
    ffcount::FpPoly prod = {1};
    for (u64 r : roots)
        prod = ffcount::fp_mul(prod, {neg_d3, r, 1}, p);
    // scale by the leading coefficient 27(d-3)/(d+3) mod p
    u64 num = static_cast<u64>(((27 * (d - 3)) % p + p) % p);
    u64 den = static_cast<u64>(((d + 3) % p + p) % p);
    u64 lc = mulmod(num, invmod(den, up), up);
    for (auto& cc : prod) cc = mulmod(cc, lc, up);

    return prod == reduce_mod(twist_sextic(d), p);
}

bool verify_two_cubic_factorization(i64 d, i64 p) {
    check_cd_param(d);
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw UsageError("p must be a prime >= 5");
    if (d % p == 0 || (d + 3) % p == 0)
        throw InapplicableError("bad prime for the twist");
    if ((d - 3) % p == 0)
        throw InapplicableError("coefficient denominator vanishes mod p");
    if (jacobi(3 * d, p) != 1)
        throw InapplicableError("3d is a nonsquare mod p");

    u64 up = static_cast<u64>(p);
    u64 w = sqrt_mod(3 * d, p);
    auto fd = reduce_mod(twist_sextic(d), p);

    u64 dmod = static_cast<u64>(((d % p) + p) % p);
    u64 dm_inv = invmod(static_cast<u64>((((d - 3) % p) + p) % p), up);
    u64 six_d = mulmod(mulmod(6 % up, dmod, up), dm_inv, up);           // 6d/(d-3)
    u64 ratio = mulmod(static_cast<u64>(((d + 3) % p + p) % p), dm_inv, up);  // (d+3)/(d-3)
    u64 d9 = mulmod(dmod, invmod(9 % up, up), up);                      // d/9
    u64 lcn = static_cast<u64>(((27 * (d - 3)) % p + p) % p);
    u64 lc = mulmod(lcn, invmod(static_cast<u64>(((d + 3) % p + p) % p), up), up);

    for (u64 root : {w, (up - w) % up}) {
        u64 s1 = (six_d + mulmod(ratio, root, up)) % up;        // 6d/(d-3) + (d+3)/(d-3) sqrt(3d)
        u64 s2 = (six_d + up - mulmod(ratio, root, up)) % up;   // conjugate
        ffcount::FpPoly c1 = {mulmod(d9, s1, up), (up - dmod) % up, (up - s1) % up, 1};
        ffcount::FpPoly c2 = {mulmod(d9, s2, up), (up - dmod) % up, (up - s2) % up, 1};
        ffcount::FpPoly prod = ffcount::fp_mul(c1, c2, p);
        for (auto& cc : prod) cc = mulmod(cc, lc, up);
        if (prod != fd) return false;
    }
    return true;
}

IntPoly type_b_sextic(i64 d) {
    if (d == 0) throw DomainError("type-B parameter d must be nonzero");
    mpz_class D = static_cast<long>(d);
    mpz_class even = 27 * (D * D + D) / 2;   // d^2 + d is always even
    mpz_class odd = 81 * (D * D - D);
    std::vector<mpz_class> c(7);
    c[6] = even;
    c[5] = odd;
    c[4] = 15 * even;
    c[3] = mpz_class(10) * odd / 3;  // 270(d^2-d)
    c[2] = 15 * even;
    c[1] = odd;
    c[0] = even;
    return IntPoly(std::move(c));
}

bool type_b_identity(i64 d) {
    if (d == 0) throw DomainError("type-B parameter d must be nonzero");
    // (27d/2) ((x-1)^6 + d (x+1)^6)
    ExactPoly xm = ExactPoly::from_ints({-1, 1});
    ExactPoly xp = ExactPoly::from_ints({1, 1});
    ExactPoly m6 = xm, p6 = xp;
    for (int i = 1; i < 6; ++i) {
        m6 = m6 * xm;
        p6 = p6 * xp;
    }
    ExactPoly rhs = (m6 + p6 * mpq_class(static_cast<long>(d))) * mpq_class(static_cast<long>(27 * d), 2);
    return rhs == type_b_sextic(d).to_exact();
}

bool verify_h_minus36() {
    // elements a + b sqrt(3) of Z[sqrt(3)]
    const mpz_class h1("-153542016"), h0("-1790957481984");
    const mpz_class ra("76771008"), rb("44330496");
    for (int sign : {1, -1}) {
        mpz_class a = ra, b = sign * rb;
        mpz_class sq_a = a * a + 3 * b * b;
        mpz_class sq_b = 2 * a * b;
        mpz_class va = sq_a + h1 * a + h0;
        mpz_class vb = sq_b + h1 * b;
        if (va != 0 || vb != 0) return false;
    }
    return true;
}

double log_conductor_bound_quartic(i64 d) {
    return 26 * std::log(2.0) + 21 * std::log(3.0) +
           4 * std::log(std::abs(static_cast<double>(d))) +
           4 * std::log(std::abs(static_cast<double>(d + 3)));
}

double log_conductor_bound_quadratic(i64 d) {
    return 26 * std::log(2.0) + 21 * std::log(3.0) +
           2 * std::log(std::abs(static_cast<double>(d))) +
           4 * std::log(std::abs(static_cast<double>(d + 3)));
}

}  // namespace twistlab::family
