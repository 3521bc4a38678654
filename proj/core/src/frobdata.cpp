#include "twistlab/frobdata.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <iostream>
#include <map>
#include <set>

#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"

namespace twistlab::frobdata {

namespace {

void check_prime5(i64 p) {
    if (p < 5 || !is_prime(static_cast<u64>(p)))
        throw UsageError("p must be a prime >= 5, got " + std::to_string(p));
}

void check_good(i64 d, i64 p) {
    check_prime5(p);
    if (d % p == 0 || (d + 3) % p == 0)
        throw BadPrimeError("p = " + std::to_string(p) + " is bad for d = " + std::to_string(d));
}

bool is_squarefree(i64 d) {
    if (d == 0) return false;
    return squarefree_part(d) == d;
}

// exponent-parity product: squarefree part of a*b without forming a*b
__int128 sqfree_product(i64 a, i64 b) {
    std::map<i64, int> par;
    for (i64 v : {a, b})
        for (auto& [pr, e] : factorize(v))
            par[pr] = (par[pr] + e) & 1;
    __int128 r = (a < 0) == (b < 0) ? 1 : -1;
    for (auto& [pr, e] : par)
        if (e) r *= pr;
    return r;
}

// canonical representative of m modulo the square classes of d and -3:
// smallest |.|, preferring the negative one on ties
i64 kernel_class_rep(i64 m, i64 d) {
    __int128 best = m;
    for (i64 t : {static_cast<i64>(1), d, static_cast<i64>(-3), -3 * d}) {
        __int128 cand = sqfree_product(m, squarefree_part(t));
        __int128 ab = cand < 0 ? -cand : cand;
        __int128 bb = best < 0 ? -best : best;
        if (ab < bb || (ab == bb && cand < best)) best = cand;
    }
    return static_cast<i64>(best);
}

}  // namespace

i64 ap_e0(i64 p) {
    check_prime5(p);
    static const IntPoly e0 = IntPoly::from_ints({1, 0, 0, 1});
    return ffcount::trace_ap(e0, p);
}

std::pair<int, int> residue_degrees(i64 d, i64 p) {
    check_prime5(p);
    if (d % p == 0 || (d + 3) % p == 0)
        throw InapplicableError("p ramifies in the twist fields");
    int fM = (p % 3 == 1) ? 1 : 2;
    int ord;
    switch (ffcount::cubic_split_type(family::splitting_cubic(d), p)) {
        case ffcount::SplitType::Split3: ord = 1; break;
        case ffcount::SplitType::OneRoot: ord = 2; break;
        case ffcount::SplitType::Irreducible: ord = 3; break;
        default: throw InternalError("unreachable");
    }
    int fK = std::lcm(ord, fM);
    return {fK, fM};
}

TwistKernel infer_twist_kernel(i64 d, int use_primes) {
    if (d == 0 || d == 3 || d == -3 || !is_squarefree(d))
        throw DomainError("kernel inference needs squarefree d outside {0, 3, -3}");
    if (use_primes < 8) throw UsageError("at least 8 verification primes required");

    // Candidate square classes for the quadratic generator of L/K, taken
    // modulo the classes of d and -3 (trivial on every prime used below):
    // -1, +-2(d^2-9), and +-2(d+3).  The last pair is what the family
    // actually realizes (empirically eps_d = (-2(d+3)|.)); the others are
    // foils that the oracle eliminates.
    std::set<i64> candidates;
    for (i64 raw : {static_cast<i64>(-1), 2 * (d * d - 9), -2 * (d * d - 9),
                    2 * (d + 3), -2 * (d + 3)}) {
        if (raw == 0) continue;
        candidates.insert(squarefree_part(raw));
    }

    IntPoly model = family::twist_sextic_integral(d);
    std::vector<i64> used;
    std::vector<i64> alive(candidates.begin(), candidates.end());
    std::set<i64> classes;
    const int max_primes = std::max(4 * use_primes, 48);
    for (i64 p = 5; static_cast<int>(used.size()) < max_primes; p += 2) {
        if (p > 1000000)
            throw InternalError("ran out of verification primes for d = " + std::to_string(d));
        if (!is_prime(static_cast<u64>(p))) continue;
        if (d % p == 0 || (d + 3) % p == 0 || (d - 3) % p == 0) continue;
        if (p % 3 != 1) continue;  // f_M must be 1 for odd f_K, and a_p(E0) != 0
        auto [fK, fM] = residue_degrees(d, p);
        if (fK % 2 == 0) continue;
        i64 ap = ap_e0(p);
        if (ap == 0) throw InternalError("supersingular prime = 1 mod 3");

        i64 n1 = ffcount::count_points(model, p, 1).count;
        i64 a1 = n1 - p - 1;
        i64 base = (fK == 1) ? -2 * ap : ap;  // predicted a1 when eps = +1
        if (a1 != base && a1 != -base)
            throw InternalError("oracle a1 magnitude contradicts the residue table at d = " +
                                std::to_string(d) + ", p = " + std::to_string(p));
        int sign = (a1 == base) ? 1 : -1;
        std::vector<i64> next;
        for (i64 m : alive)
            if (jacobi(m, p) == sign) next.push_back(m);
        alive = std::move(next);
        used.push_back(p);
        if (alive.empty()) break;
        if (static_cast<int>(used.size()) >= use_primes) {
            // distinct candidates may induce the same character; keep
            // adding primes only while several classes stay alive
            classes.clear();
            for (i64 m : alive) classes.insert(kernel_class_rep(m, d));
            if (classes.size() <= 1) break;
        }
    }

    classes.clear();
    for (i64 m : alive) classes.insert(kernel_class_rep(m, d));
    if (classes.empty())
        throw InferenceAmbiguousError("no kernel candidate survives for d = " + std::to_string(d));
    if (classes.size() > 1) {
        std::string list;
        for (i64 m : classes) list += std::to_string(m) + " ";
        throw InferenceAmbiguousError("several kernel classes survive for d = " +
                                      std::to_string(d) + ": " + list);
    }
    return {*classes.begin(), used};
}

EulerData euler_factor_good(i64 d, i64 p, const TwistKernel& kernel) {
    check_good(d, p);
    auto [fK, fM] = residue_degrees(d, p);
    i64 ap = ap_e0(p);
    int eps = (fK % 2 == 1) ? jacobi(kernel.m, p) : 1;
    int fL = fK * ((fK % 2 == 1 && eps == -1) ? 2 : 1);
    FrobeniusProfile prof{fL, fK, fM};

    i64 a1 = 0, a2 = 0;
    bool known = true;
    if (fM == 1) {
        if (fK == 1) {
            a1 = (fL == 1) ? -2 * ap : 2 * ap;
            a2 = ap * ap + 2 * p;
        } else if (fK == 2) {
            a1 = 0;
            a2 = -ap * ap + 2 * p;
        } else if (fK == 3) {
            a1 = (fL == 3) ? ap : -ap;
            a2 = ap * ap - p;
        } else {
            known = false;
        }
    } else {
        if (fK == 2) {
            a1 = 0;
            a2 = 2 * p;
        } else if (fK == 6) {
            a1 = 0;
            a2 = -p;
        } else {
            known = false;
        }
    }
    if (!known) {
        // Profile outside the seven rows this family can reach; fall back.
        std::cerr << "twistlab: unreachable profile (" << fL << "," << fK << "," << fM
                  << ") at d = " << d << ", p = " << p << "; using oracle\n";
        return oracle_euler(d, p);
    }
    return {a1, a2, prof, Source::FastTable};
}

EulerData oracle_euler(i64 d, i64 p) {
    check_good(d, p);
    auto [a1, a2] = ffcount::genus2_a1a2(family::twist_sextic_integral(d), p);
    return oracle_euler_from(d, p, a1, a2);
}

EulerData oracle_euler_from(i64 d, i64 p, i64 a1, i64 a2) {
    check_good(d, p);
    auto [fK, fM] = residue_degrees(d, p);
    // f_L is reported as implied by the measured a1 where the table
    // distinguishes it; ambiguity only arises for odd f_K.
    int fL = fK;
    if (fK % 2 == 1 && fM == 1) {
        i64 ap = ap_e0(p);
        i64 plus = (fK == 1) ? -2 * ap : ap;
        fL = (a1 == plus) ? fK : 2 * fK;
    }
    return {a1, a2, FrobeniusProfile{fL, fK, fM}, Source::Oracle};
}

double lambda_p(i64 d, i64 p, const TwistKernel& kernel) {
    EulerData e = euler_factor_good(d, p, kernel);
    return -static_cast<double>(e.a1) / std::sqrt(static_cast<double>(p));
}

double lambda_p2(i64 d, i64 p, const TwistKernel& kernel) {
    EulerData e = euler_factor_good(d, p, kernel);
    return static_cast<double>(e.a1 * e.a1 - e.a2) / static_cast<double>(p);
}

BadPrimeInfo bad_prime_lambda(i64 d, i64 p) {
    check_prime5(p);
    if (d % p != 0 && (d + 3) % p != 0)
        throw UsageError("p is a good prime for this d");
    if (d % p == 0) {
        if (valuation(d, p) > 1)  // the elliptic caps need p || d
            return {BadPrimeClass::OmittedBounded, 4.0, 10.0, false};
        // One-dimensional abelian part survives: elliptic Weil bounds.
        return {BadPrimeClass::OmittedBounded, 2.0, 2.0, false};
    }
    int v = valuation(d + 3, p);
    if (v >= 6) {
        // Good reduction of the Jacobian; genus-2 Weil caps, no vanishing.
        return {BadPrimeClass::OmittedBounded, 4.0, 10.0, true};
    }
    return {BadPrimeClass::Zero, 0.0, 0.0, false};
}

bool verify_split_consistency(i64 d, i64 p) {
    check_good(d, p);
    auto fbar = reduce_mod(family::twist_sextic_integral(d), p);
    int deg = static_cast<int>(fbar.size()) - 1;
    bool lhs = ffcount::fp_separable(fbar, p) &&
               ffcount::fp_distinct_roots(fbar, p) == deg;
    bool rhs = ffcount::cubic_split_type(family::splitting_cubic(d), p) ==
                   ffcount::SplitType::Split3 &&
               jacobi(3, p) == 1;
    return lhs == rhs;
}

}  // namespace twistlab::frobdata
