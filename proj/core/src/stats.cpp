#include "twistlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"

namespace twistlab::stats {

namespace {

void check_prime5(i64 p) {
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw UsageError("p must be a prime >= 5, got " + std::to_string(p));
}

std::vector<uint8_t> square_bitmap(i64 p) {
    std::vector<uint8_t> sq(static_cast<size_t>(p), 0);
    u64 v = 0;
    for (i64 x = 1; x <= (p - 1) / 2; ++x) {
        v += static_cast<u64>(2 * x - 1);
        while (v >= static_cast<u64>(p)) v -= static_cast<u64>(p);
        sq[v] = 1;
    }
    return sq;
}

}  // namespace

SquarefreeSet squarefree_enum(double X) {
    if (!(X >= 2)) throw UsageError("X must be >= 2");
    SquarefreeSet s;
    s.X = X;
    i64 top = static_cast<i64>(std::ceil(X)) - 1;
    while (static_cast<double>(top) >= X) --top;  // members are d < X strictly
    if (top < 1) return s;
    std::vector<uint8_t> sqfree(static_cast<size_t>(top + 1), 1);
    for (i64 q = 2; q * q <= top; ++q) {
        i64 qq = q * q;
        for (i64 m = qq; m <= top; m += qq) sqfree[static_cast<size_t>(m)] = 0;
    }
    for (i64 d = 1; d <= top; ++d) {
        if (!sqfree[static_cast<size_t>(d)]) continue;
        if (d == 3) {
            s.excluded_three = true;
            continue;
        }
        s.members.push_back(d);
    }
    return s;
}

ClassData class_pass(i64 p) {
    check_prime5(p);
    u64 up = static_cast<u64>(p);
    ClassData cd;
    cd.p = p;
    cd.roots.assign(static_cast<size_t>(p), 0);
    cd.chi.assign(static_cast<size_t>(p), 0);

    // d <-> w = (d-3)/(d+3) is a bijection F_p \ {0,-3} <-> F_p \ {+-1},
    // and t is a root of the splitting cubic for d iff 4t^3 - 3t = w.
    u64 inv_needed = 0;
    for (i64 t = 0; t < p; ++t) {
        u64 ut = static_cast<u64>(t);
        u64 t2 = mulmod(ut, ut, up);
        u64 w = (mulmod(4, mulmod(t2, ut, up), up) + 3 * up - mulmod(3, ut, up)) % up;
        if (w == 1 || w == up - 1) continue;
        // d = 3(1+w)/(1-w)
        inv_needed = invmod((1 + up - w) % up, up);
        u64 d = mulmod(mulmod(3, (1 + w) % up, up), inv_needed, up);
        ++cd.roots[d];
    }

    auto sq = square_bitmap(p);
    for (i64 c = 1; c < p; ++c)
        cd.chi[static_cast<size_t>(c)] = sq[static_cast<size_t>(c)] ? 1 : -1;

    cd.roots[0] = 255;
    cd.roots[static_cast<size_t>(p - 3)] = 255;  // class of d = -3
    return cd;
}

std::vector<Table1Row> table1(i64 p) {
    ClassData cd = class_pass(p);
    // measured[chi>0][roots]
    i64 meas[2][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}};
    for (i64 c = 1; c < p; ++c) {
        uint8_t r = cd.roots[static_cast<size_t>(c)];
        if (r == 255) continue;
        if (r > 3 || r == 2) throw InternalError("impossible root count");
        meas[cd.chi[static_cast<size_t>(c)] > 0 ? 1 : 0][r] += 1;
    }
    // The S3 structure forbids mixed classes.
    if (meas[0][0] || meas[0][3] || meas[1][1])
        throw InternalError("splitting type inconsistent with (d|p) at p = " + std::to_string(p));

    bool one = (p % 3 == 1);
    std::vector<Table1Row> rows;
    auto push = [&](int chi, ffcount::SplitType ty, i64 measured, i64 predicted) {
        rows.push_back({p, chi, ty, measured, predicted,
                        std::llabs(measured - predicted)});
    };
    push(+1, ffcount::SplitType::Split3, meas[1][3], one ? (p - 7) / 6 : (p - 5) / 6);
    push(+1, ffcount::SplitType::Irreducible, meas[1][0], one ? (p - 1) / 3 : (p + 1) / 3);
    push(-1, ffcount::SplitType::OneRoot, meas[0][1], one ? (p - 1) / 2 : (p - 3) / 2);
    return rows;
}

std::vector<Table2Row> table2(i64 p) {
    ClassData cd = class_pass(p);
    auto sq = square_bitmap(p);
    u64 up = static_cast<u64>(p);

    i64 ap1 = ffcount::trace_ap(family::curve_poly(family::CurveSpec::e1()), p);
    i64 ap2 = ffcount::trace_ap(family::curve_poly(family::CurveSpec::e2()), p);
    // a_p of the genus-2 auxiliary curve: minus the first zeta coefficient
    i64 apc1 = -(ffcount::count_points(family::curve_poly(family::CurveSpec::c1()), p, 1).count
                 - p - 1);

    // measured[chi_d>0][chi_w>0][roots]
    i64 meas[2][2][4] = {};
    for (i64 c = 1; c < p; ++c) {
        uint8_t r = cd.roots[static_cast<size_t>(c)];
        if (r == 255) continue;
        u64 uc = static_cast<u64>(c);
        u64 w = mulmod(uc, uc, up);
        w = (w + up - 9 % up) % up;           // c^2 - 9
        w = mulmod((2 * up - 2) % up, w, up);  // -2(c^2 - 9)
        int chiw = (w == 0) ? 1 : (sq[w] ? 1 : -1);  // symbol 0 counted as +1
        meas[cd.chi[static_cast<size_t>(c)] > 0 ? 1 : 0][chiw > 0 ? 1 : 0][r] += 1;
    }

    double P = static_cast<double>(p);
    double A1 = static_cast<double>(ap1), A2 = static_cast<double>(ap2),
           AC = static_cast<double>(apc1);
    std::vector<Table2Row> rows;
    auto push = [&](int chid, int chiw, ffcount::SplitType ty, i64 measured, double predicted) {
        rows.push_back({p, chid, chiw, ty, measured, predicted,
                        std::abs(static_cast<double>(measured) - predicted)});
    };
    push(+1, +1, ffcount::SplitType::Split3, meas[1][1][3], (P - A1 - AC) / 12);
    push(+1, -1, ffcount::SplitType::Split3, meas[1][0][3], (P + A1 + AC) / 12);
    push(+1, +1, ffcount::SplitType::Irreducible, meas[1][1][0],
         P / 6 - A2 / 4 + A1 / 12 + AC / 12);
    push(+1, -1, ffcount::SplitType::Irreducible, meas[1][0][0],
         P / 6 + A2 / 4 - A1 / 12 - AC / 12);
    push(-1, +1, ffcount::SplitType::OneRoot, meas[0][1][1], P / 4 + A2 / 4);
    push(-1, -1, ffcount::SplitType::OneRoot, meas[0][0][1], P / 4 - A2 / 4);
    return rows;
}

SieveCheck sieve_check(i64 p, std::vector<i64> A, const SquarefreeSet& S) {
    check_prime5(p);
    if (!(S.X >= static_cast<double>(p))) throw UsageError("X must be >= p");
    std::set<i64> classes;
    for (i64 a : A) {
        i64 r = ((a % p) + p) % p;
        if (r == 0) throw DomainError("sieve classes must avoid 0 mod p");
        classes.insert(r);
    }
    if (classes.empty()) throw UsageError("empty class set");

    i64 measured = 0;
    for (i64 d : S.members)
        if (classes.count(d % p)) ++measured;

    double card = static_cast<double>(S.members.size());
    double frac = static_cast<double>(classes.size()) / static_cast<double>(p);
    double pm2 = 1.0 / (static_cast<double>(p) * static_cast<double>(p));
    SieveCheck out;
    out.p = p;
    out.A.assign(classes.begin(), classes.end());
    out.X = S.X;
    out.measured = measured;
    out.predicted_minus = frac * card / (1.0 - pm2);
    out.predicted_plus = frac * card / (1.0 + pm2);
    out.dev_minus = std::abs(static_cast<double>(measured) - out.predicted_minus);
    out.dev_plus = std::abs(static_cast<double>(measured) - out.predicted_plus);
    double scale = (1.0 + static_cast<double>(classes.size())) * std::sqrt(S.X);
    out.const_minus = out.dev_minus / scale;
    out.const_plus = out.dev_plus / scale;
    return out;
}

SieveCheck sieve_check(i64 p, std::vector<i64> A, double X) {
    return sieve_check(p, std::move(A), squarefree_enum(X));
}

}  // namespace twistlab::stats
