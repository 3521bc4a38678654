#include "twistlab/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "twistlab/conductor.hpp"
#include "twistlab/density.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"
#include "twistlab/frobdata.hpp"
#include "twistlab/parallel.hpp"
#include "twistlab/stats.hpp"

namespace twistlab::verify {

namespace {

std::vector<i64> squarefree_upto(i64 dmax) {
    std::vector<i64> ds;
    for (i64 d = 1; d <= dmax; ++d)
        if (d != 3 && squarefree_part(d) == d) ds.push_back(d);
    return ds;
}

mpz_class pow_z(i64 base, int e) {
    mpz_class r = 1, b = static_cast<long>(base);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_tables(i64 pmax) {
    std::vector<CheckResult> out;
    for (i64 p : primes_in(5, pmax)) {
        auto rows = stats::table1(p);
        i64 total = 0, maxdev = 0;
        for (auto& r : rows) {
            total += r.measured;
            maxdev = std::max(maxdev, r.deviation);
        }
        bool pass = (maxdev == 0) && (total == p - 2);
        out.push_back({"tables", "table1", "p=" + std::to_string(p), pass,
                       "maxdev=" + std::to_string(maxdev) +
                           " total=" + std::to_string(total)});
    }
    return out;
}

std::vector<CheckResult> verify_table2(i64 pmax, double bound) {
    std::vector<CheckResult> out;
    double global = 0;
    for (i64 p : primes_in(5, pmax)) {
        auto rows = stats::table2(p);
        double maxdev = 0;
        i64 total = 0;
        for (auto& r : rows) {
            maxdev = std::max(maxdev, r.deviation);
            total += r.measured;
        }
        global = std::max(global, maxdev);
        std::ostringstream det;
        det << "maxdev=" << maxdev << " total=" << total;
        out.push_back({"tables", "table2", "p=" + std::to_string(p),
                       maxdev <= bound && total == p - 2, det.str()});
    }
    std::ostringstream det;
    det << "global_maxdev=" << global << " bound=" << bound;
    out.push_back({"tables", "table2-envelope", "pmax=" + std::to_string(pmax),
                   global <= bound, det.str()});
    return out;
}

std::vector<CheckResult> verify_euler(i64 dmax, i64 pmax, int workers) {
    std::vector<i64> ds = squarefree_upto(dmax);
    std::vector<CheckResult> out(ds.size());
    parallel_for(static_cast<i64>(ds.size()), workers, [&](i64 idx) {
        i64 d = ds[static_cast<size_t>(idx)];
        std::string bad;
        i64 pairs = 0;
        try {
            frobdata::TwistKernel kernel = frobdata::infer_twist_kernel(d);
            for (i64 p : primes_in(5, pmax)) {
                if (d % p == 0 || (d + 3) % p == 0) continue;
                frobdata::EulerData fast = frobdata::euler_factor_good(d, p, kernel);
                frobdata::EulerData oracle = frobdata::oracle_euler(d, p);
                ++pairs;
                if (static_cast<double>(oracle.a1) * oracle.a1 > 16.0 * static_cast<double>(p) ||
                    std::llabs(oracle.a2) > 6 * p) {
                    bad = "Weil bound violated at p=" + std::to_string(p);
                    break;
                }
                if (fast.a1 != oracle.a1 || fast.a2 != oracle.a2) {
                    bad = "mismatch at p=" + std::to_string(p) + ": fast (" +
                          std::to_string(fast.a1) + "," + std::to_string(fast.a2) +
                          ") oracle (" + std::to_string(oracle.a1) + "," +
                          std::to_string(oracle.a2) + ")";
                    break;
                }
                if (p % 3 == 2 && oracle.a1 != 0) {
                    bad = "a1 != 0 at p=" + std::to_string(p) + " = 2 mod 3";
                    break;
                }
                if (fast.profile.fL == 6 && fast.profile.fK == 6 && fast.profile.fM == 2 &&
                    (fast.a1 != 0 || fast.a2 != -p)) {
                    bad = "(6,6,2) zeta numerator wrong at p=" + std::to_string(p);
                    break;
                }
            }
        } catch (const Error& e) {
            bad = e.what();
        }
        out[static_cast<size_t>(idx)] = {"euler", "fast-vs-oracle", "d=" + std::to_string(d),
                                         bad.empty(),
                                         bad.empty() ? std::to_string(pairs) + " primes" : bad};
    });
    return out;
}

std::vector<CheckResult> verify_conductor(i64 dmax) {
    std::vector<CheckResult> out;
    for (i64 d : squarefree_upto(dmax)) {
        std::string bad;
        std::vector<i64> ps;
        for (auto& [p, e] : factorize(d))
            if (p >= 5) ps.push_back(p);
        for (auto& [p, e] : factorize(d + 3))
            if (p >= 5) ps.push_back(p);
        std::sort(ps.begin(), ps.end());
        for (i64 p : ps) {
            int closed = conductor::exponent_at_prime(d, p);
            auto [pic, act] = conductor::build_family_picture(d, p);
            conductor::TameResult tr = conductor::tame_exponent(pic, act);
            if (tr.n_tame != closed) {
                bad = "p=" + std::to_string(p) + ": engine " + std::to_string(tr.n_tame) +
                      " vs closed form " + std::to_string(closed);
                break;
            }
        }
        if (!ps.empty() || !bad.empty())
            out.push_back({"conductor", "engine-vs-closed", "d=" + std::to_string(d),
                           bad.empty(), bad.empty() ? std::to_string(ps.size()) + " primes" : bad});
    }
    return out;
}

std::vector<CheckResult> verify_identities(u64 seed) {
    std::vector<CheckResult> out;
    const mpz_class c2326 = pow_z(2, 26) * pow_z(3, 21);

    {  // disc(f_d) = 2^26 3^21 d^15 and the integral-model variant
        std::string bad;
        for (i64 d = -200; d <= 200 && bad.empty(); ++d) {
            if (d == 0 || d == 3 || d == -3) continue;
            mpq_class disc = discriminant(family::twist_sextic(d));
            mpz_class dd = static_cast<long>(d);
            mpz_class want = c2326;
            for (int i = 0; i < 15; ++i) want *= dd;
            if (disc != mpq_class(want)) bad = "disc(f_d) wrong at d=" + std::to_string(d);
            mpq_class disc2 = discriminant(family::twist_sextic_integral(d).to_exact());
            mpz_class want2 = want;
            mpz_class dp = dd + 3;
            for (int i = 0; i < 20; ++i) want2 *= dp;
            if (disc2 != mpq_class(want2))
                bad = "disc((d+3)^2 f_d) wrong at d=" + std::to_string(d);
        }
        out.push_back({"identities", "twist-discriminants", "|d|<=200", bad.empty(), bad});
    }

    {  // family constants relation 3 d s^2 + z^2 = 1
        std::string bad;
        for (i64 d = -200; d <= 200 && bad.empty(); ++d) {
            if (d == -3) continue;
            auto fc = family::FamilyConstants::at(d);
            if (3 * fc.v * fc.s * fc.s + fc.z * fc.z != 1)
                bad = "relation fails at d=" + std::to_string(d);
        }
        out.push_back({"identities", "family-constants", "|d|<=200", bad.empty(), bad});
    }

    {  // disc of the splitting cubic = 81 d / (4 (d+3)^2)
        std::string bad;
        for (i64 d = -100; d <= 100 && bad.empty(); ++d) {
            if (d == -3) continue;
            mpq_class want(static_cast<long>(81 * d), static_cast<long>(4 * (d + 3) * (d + 3)));
            want.canonicalize();
            if (discriminant(family::splitting_cubic(d)) != want)
                bad = "cubic disc wrong at d=" + std::to_string(d);
        }
        out.push_back({"identities", "splitting-cubic-disc", "|d|<=100", bad.empty(), bad});
    }

    {  // no rational root for squarefree 1 <= d <= 100
        std::string bad;
        for (i64 d : squarefree_upto(100)) {
            // rational root a/b of 4(d+3)x^3 - 3(d+3)x - (d-3) has
            // a | d-3 and b | 4(d+3)
            ExactPoly g = family::splitting_cubic(d);
            bool root = false;
            i64 A = std::abs(d - 3), B = std::abs(4 * (d + 3));
            for (i64 a = (A == 0 ? 0 : -A); a <= A && !root; ++a) {
                if (A != 0 && (a == 0 || A % std::abs(a) != 0)) continue;
                for (i64 b = 1; b <= B && !root; ++b) {
                    if (B % b != 0) continue;
                    mpq_class x(static_cast<long>(a), static_cast<long>(b));
                    x.canonicalize();
                    if (g.eval(x) == 0) root = true;
                }
            }
            if (root) { bad = "rational root at d=" + std::to_string(d); break; }
        }
        out.push_back({"identities", "splitting-cubic-irreducible", "squarefree d<=100",
                       bad.empty(), bad});
    }

    {  // type-B rewriting
        std::string bad;
        for (i64 d = -100; d <= 100 && bad.empty(); ++d) {
            if (d == 0) continue;
            if (!family::type_b_identity(d)) bad = "type-B identity fails at d=" + std::to_string(d);
        }
        out.push_back({"identities", "type-b-identity", "|d|<=100", bad.empty(), bad});
    }

    {  // type-B point counts against the two elliptic factors
        std::string bad;
        for (i64 d : squarefree_upto(30)) {
            for (i64 p : primes_in(5, 199)) {
                if (d % p == 0) continue;  // elliptic factors degenerate
                i64 nb;
                try {
                    nb = ffcount::count_points(family::type_b_sextic(d), p, 1).count;
                } catch (const DegenerateModelError&) {
                    continue;
                }
                i64 a4 = ffcount::trace_ap(family::curve_poly(family::CurveSpec::ed4(d)), p);
                i64 a5 = ffcount::trace_ap(family::curve_poly(family::CurveSpec::ed5(d)), p);
                if (nb != p + 1 - a4 - a5) {
                    bad = "count mismatch at d=" + std::to_string(d) + ", p=" + std::to_string(p);
                    break;
                }
            }
            if (!bad.empty()) break;
        }
        out.push_back({"identities", "type-b-isogeny-counts", "squarefree d<=30, p<=199",
                       bad.empty(), bad});
    }

    {  // ring class polynomial root identity (plus Vieta on the root sum)
        bool ok = family::verify_h_minus36() &&
                  mpz_class("76771008") * 2 == mpz_class("153542016");
        out.push_back({"identities", "h-minus-36", "", ok, ""});
    }

    {  // random factorization spot checks
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<i64> dd(1, 400), dp(0, 93);
        std::vector<i64> ps = primes_in(5, 499);
        int quad = 0, cubic = 0, tries = 0;
        std::string bad;
        while ((quad < 100 || cubic < 100) && tries < 200000 && bad.empty()) {
            ++tries;
            i64 d = dd(rng);
            i64 p = ps[static_cast<size_t>(dp(rng)) % ps.size()];
            if (d == 3) continue;
            if (quad < 100) {
                try {
                    if (!family::verify_quadratic_factorization(d, p))
                        bad = "quadratic factorization fails at d=" + std::to_string(d) +
                              ", p=" + std::to_string(p);
                    ++quad;
                } catch (const InapplicableError&) {
                }
            }
            if (cubic < 100 && bad.empty()) {
                try {
                    if (!family::verify_two_cubic_factorization(d, p))
                        bad = "two-cubic factorization fails at d=" + std::to_string(d) +
                              ", p=" + std::to_string(p);
                    ++cubic;
                } catch (const InapplicableError&) {
                }
            }
        }
        if (bad.empty() && (quad < 100 || cubic < 100)) bad = "not enough applicable samples";
        out.push_back({"identities", "factorization-random", "100+100 samples", bad.empty(), bad});
    }

    return out;
}

}  // namespace twistlab::verify
