#include "twistlab/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"
#include "twistlab/parallel.hpp"

namespace twistlab::density {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_x(double X) {
    if (!(X >= 10)) throw UsageError("X must be >= 10");
}

struct PrimePartial {
    double value = 0;
    double budget = 0;
};

// members with p^6 | (d+3), by scanning d = k p^6 - 3
i64 deep_power_count(const stats::SquarefreeSet& S, i64 p) {
    double p6 = std::pow(static_cast<double>(p), 6.0);
    if (p6 > S.X + 3) return 0;
    i64 step = p * p * p;
    step = step * step;
    i64 count = 0;
    for (i64 d = step - 3; static_cast<double>(d) < S.X; d += step) {
        if (d < 1) continue;
        if (std::binary_search(S.members.begin(), S.members.end(), d)) ++count;
    }
    return count;
}

// Caps on |lambda_p| / |lambda_{p^2}| used for skipped terms:
// p | d (d squarefree): elliptic part only, both caps 2;
// p in {2,3} and the deep p^6 | (d+3) case: genus-2 Weil caps 4 and 10.
constexpr double kCapBadD1 = 2.0, kCapBadD2 = 2.0;
constexpr double kCapWeil1 = 4.0, kCapWeil2 = 10.0;

std::vector<i64> twist_kernels(const stats::SquarefreeSet& S, int workers) {
    std::vector<i64> m(S.members.size());
    parallel_for(static_cast<i64>(S.members.size()), workers, [&](i64 i) {
        m[static_cast<size_t>(i)] =
            frobdata::infer_twist_kernel(S.members[static_cast<size_t>(i)]).m;
    });
    return m;
}

}  // namespace

TestFunction::TestFunction(double s) : sigma(s) {
    if (!(s > 0)) throw DomainError("sigma must be positive");
}

double TestFunction::phi(double x) const {
    if (x == 0) return sigma * sigma / 4.0;
    double n = std::sin(kPi * sigma * x);
    double d = 2.0 * kPi * x;
    return n * n / (d * d);
}

double TestFunction::phi_hat(double u) const {
    double a = std::abs(u);
    if (a >= sigma) return 0.0;
    return (sigma - a) / 4.0;
}

SumResult s1_sum(const stats::SquarefreeSet& S, double sigma, int workers) {
    check_x(S.X);
    TestFunction tf(sigma);
    SumResult out;
    if (S.members.empty()) return out;
    double logX = std::log(S.X);
    i64 pmax = static_cast<i64>(std::floor(std::exp(sigma * logX)));
    if (pmax < 2) return out;

    auto weight = [&](i64 p) {
        double lp = std::log(static_cast<double>(p));
        return lp / std::sqrt(static_cast<double>(p)) * tf.phi_hat(lp / logX);
    };

    KahanSum value, budget;
    for (i64 p : {static_cast<i64>(2), static_cast<i64>(3)})
        if (p <= pmax) budget.add(kCapWeil1 * weight(p) * static_cast<double>(S.members.size()));

    std::vector<i64> ps = primes_in(5, pmax);
    bool need_kernels = false;
    for (i64 p : ps)
        if (p % 3 == 1 && weight(p) > 0) { need_kernels = true; break; }
    std::vector<i64> kernels;
    if (need_kernels) kernels = twist_kernels(S, workers);

    std::vector<PrimePartial> parts(ps.size());
    parallel_for(static_cast<i64>(ps.size()), workers, [&](i64 idx) {
        i64 p = ps[static_cast<size_t>(idx)];
        double w = weight(p);
        PrimePartial part;
        if (w == 0.0) { parts[static_cast<size_t>(idx)] = part; return; }

        i64 n_bad_d = 0;
        i64 n_deep = deep_power_count(S, p);
        i64 inner_a1 = 0;  // sum over d of a_{p,1}(C_d)

        if (p % 3 == 1) {
            stats::ClassData cd = stats::class_pass(p);
            i64 ap = frobdata::ap_e0(p);
            for (size_t i = 0; i < S.members.size(); ++i) {
                i64 d = S.members[i];
                i64 c = d % p;
                if (c == 0) { ++n_bad_d; continue; }
                if (c == p - 3) continue;  // zero contribution (or deep, budgeted once)
                uint8_t r = cd.roots[static_cast<size_t>(c)];
                if (r == 1) continue;  // f_K = 2, a1 = 0
                int eps = jacobi(kernels[i], p);
                inner_a1 += (r == 3) ? -2 * ap * eps : ap * eps;
            }
        } else {
            // f_M = 2: a1 = 0 identically; only the skip budget remains
            for (i64 d : S.members)
                if (d % p == 0) ++n_bad_d;
        }
        // lambda_p (log p/sqrt p) = -a1 (log p / p); fold 1/sqrt(p) in
        part.value = -static_cast<double>(inner_a1) / std::sqrt(static_cast<double>(p)) * w;
        part.budget = (kCapBadD1 * static_cast<double>(n_bad_d) +
                       kCapWeil1 * static_cast<double>(n_deep)) * w;
        parts[static_cast<size_t>(idx)] = part;
    });

    for (const auto& part : parts) {
        value.add(part.value);
        budget.add(part.budget);
    }
    double scale = 2.0 / (static_cast<double>(S.members.size()) * logX);
    out.value = scale * value.value();
    out.budget = scale * budget.value();
    return out;
}

SumResult s1_sum(double X, double sigma, int workers) {
    return s1_sum(stats::squarefree_enum(X), sigma, workers);
}

SumResult s2_sum(const stats::SquarefreeSet& S, double sigma, int workers) {
    check_x(S.X);
    TestFunction tf(sigma);
    SumResult out;
    if (S.members.empty()) return out;
    double logX = std::log(S.X);
    i64 pmax = static_cast<i64>(std::floor(std::exp(sigma / 2.0 * logX)));
    if (pmax < 2) return out;

    auto weight = [&](i64 p) {
        double lp = std::log(static_cast<double>(p));
        return lp / static_cast<double>(p) * tf.phi_hat(2.0 * lp / logX);
    };

    KahanSum value, budget;
    for (i64 p : {static_cast<i64>(2), static_cast<i64>(3)})
        if (p <= pmax) budget.add(kCapWeil2 * weight(p) * static_cast<double>(S.members.size()));

    std::vector<i64> ps = primes_in(5, pmax);
    std::vector<PrimePartial> parts(ps.size());
    parallel_for(static_cast<i64>(ps.size()), workers, [&](i64 idx) {
        i64 p = ps[static_cast<size_t>(idx)];
        double w = weight(p);
        PrimePartial part;
        if (w == 0.0) { parts[static_cast<size_t>(idx)] = part; return; }

        stats::ClassData cd = stats::class_pass(p);
        i64 ap = frobdata::ap_e0(p);
        bool one = (p % 3 == 1);
        // a_{p^2} = a1^2 - a2 by residue class of d
        std::array<i64, 4> by_roots{};  // index = root count of the class
        if (one) {
            by_roots[3] = 3 * ap * ap - 2 * p;
            by_roots[1] = ap * ap - 2 * p;
            by_roots[0] = p;
        } else {
            by_roots[3] = -2 * p;
            by_roots[1] = -2 * p;
            by_roots[0] = p;
        }

        std::vector<i64> class_count(static_cast<size_t>(p), 0);
        i64 n_bad_d = 0;
        for (i64 d : S.members) {
            i64 c = d % p;
            if (c == 0) { ++n_bad_d; continue; }
            ++class_count[static_cast<size_t>(c)];
        }
        i64 n_deep = deep_power_count(S, p);

        i64 inner = 0;  // sum over d of a_{p^2}(C_d)
        for (i64 c = 1; c < p; ++c) {
            if (c == p - 3) continue;
            uint8_t r = cd.roots[static_cast<size_t>(c)];
            inner += class_count[static_cast<size_t>(c)] * by_roots[r];
        }
        // lambda_{p^2} = a_{p^2}/p
        part.value = static_cast<double>(inner) / static_cast<double>(p) * w;
        part.budget = (kCapBadD2 * static_cast<double>(n_bad_d) +
                       kCapWeil2 * static_cast<double>(n_deep)) * w;
        parts[static_cast<size_t>(idx)] = part;
    });

    for (const auto& part : parts) {
        value.add(part.value);
        budget.add(part.budget);
    }
    double scale = 2.0 / (static_cast<double>(S.members.size()) * logX);
    out.value = scale * value.value();
    out.budget = scale * budget.value();
    return out;
}

SumResult s2_sum(double X, double sigma, int workers) {
    return s2_sum(stats::squarefree_enum(X), sigma, workers);
}

double prime_sum_2mod3(double X, double sigma) {
    check_x(X);
    TestFunction tf(sigma);
    double logX = std::log(X);
    i64 pmax = static_cast<i64>(std::floor(std::exp(sigma / 2.0 * logX)));
    KahanSum sum;
    for (i64 p : primes_in(2, pmax)) {
        if (p % 3 != 2) continue;
        double lp = std::log(static_cast<double>(p));
        sum.add(lp / static_cast<double>(p) * tf.phi_hat(2.0 * lp / logX));
    }
    return 2.0 / logX * sum.value();
}

RsDecayReport rs_decay_checks(double X, double sigma, int workers,
                              const cache::CacheDir& cache) {
    check_x(X);
    TestFunction tf(sigma);
    double logX = std::log(X);
    RsDecayReport rep{};
    rep.X = X;
    rep.sigma = sigma;

    i64 pmax_lin = static_cast<i64>(std::floor(std::exp(sigma * logX)));
    i64 pmax_sq = static_cast<i64>(std::floor(std::exp(sigma / 2.0 * logX)));

    if (pmax_lin >= 5) {
        auto t0 = aptables::ap_range(aptables::AuxCurve::E0, pmax_lin, workers, cache);
        auto t1 = aptables::ap_range(aptables::AuxCurve::E1, pmax_lin, workers, cache);
        auto t2 = aptables::ap_range(aptables::AuxCurve::E2, pmax_lin, workers, cache);
        auto tc = aptables::ap_range(aptables::AuxCurve::C1, pmax_lin, workers, cache);
        KahanSum s01, s02, s0c;
        for (size_t i = 0; i < t0.size(); ++i) {
            i64 p = t0[i].first;
            double lp = std::log(static_cast<double>(p));
            double w = lp / (static_cast<double>(p) * static_cast<double>(p)) *
                       tf.phi_hat(lp / logX);
            if (w == 0.0) continue;
            double a0 = static_cast<double>(t0[i].second);
            s01.add(w * a0 * static_cast<double>(t1[i].second));
            s02.add(w * a0 * static_cast<double>(t2[i].second));
            s0c.add(w * a0 * static_cast<double>(tc[i].second));
        }
        rep.e0e1 = s01.value() / logX;
        rep.e0e2 = s02.value() / logX;
        rep.e0c1 = s0c.value() / logX;
    }

    if (pmax_sq >= 5) {
        auto t0 = aptables::ap_range(aptables::AuxCurve::E0, pmax_sq, workers, cache);
        KahanSum s1m, s2m, s2closed;
        for (auto& [p, a0] : t0) {
            double lp = std::log(static_cast<double>(p));
            double w = lp / (static_cast<double>(p) * static_cast<double>(p)) *
                       tf.phi_hat(2.0 * lp / logX);
            if (w == 0.0) continue;
            double term = static_cast<double>(a0) * static_cast<double>(a0) -
                          2.0 * static_cast<double>(p);
            if (p % 3 == 1)
                s1m.add(w * term);
            else {
                s2m.add(w * term);
                // same reals in the same shape, so the equality is exact
                s2closed.add(w * (-2.0 * static_cast<double>(p)));
            }
        }
        rep.sq_1mod3 = s1m.value() / logX;
        rep.sq_2mod3 = s2m.value() / logX;
        rep.sq_2mod3_closed = s2closed.value() / logX;
    }
    return rep;
}

DensityReport density_report(double X, double sigma, int workers,
                             const cache::CacheDir& cache) {
    (void)cache;
    check_x(X);
    TestFunction tf(sigma);
    DensityReport rep;
    rep.X = X;
    rep.sigma = sigma;
    rep.sigma_above_theorem_range = sigma > 1.0 / 3.0;

    stats::SquarefreeSet S = stats::squarefree_enum(X);
    SumResult s1 = s1_sum(S, sigma, workers);
    SumResult s2 = s2_sum(S, sigma, workers);
    rep.S1 = s1.value;
    rep.S2 = s2.value;

    // mean log of the known conductor part, via one spf sieve
    double logX = std::log(X);
    i64 top = S.members.empty() ? 1 : S.members.back() + 3;
    std::vector<int32_t> spf = spf_sieve(top);
    KahanSum mean;
    for (i64 d : S.members) {
        double logN = 0;
        i64 n = d;
        while (n > 1) {
            i64 p = spf[static_cast<size_t>(n)];
            while (n % p == 0) n /= p;
            if (p >= 5) logN += 2.0 * std::log(static_cast<double>(p));
        }
        n = d + 3;
        while (n > 1) {
            i64 p = spf[static_cast<size_t>(n)];
            int v = 0;
            while (n % p == 0) { n /= p; ++v; }
            if (p >= 5 && v % 6 != 0) logN += 4.0 * std::log(static_cast<double>(p));
        }
        mean.add(logN);
    }
    double count = std::max<double>(1.0, static_cast<double>(S.members.size()));
    rep.meanlogN_low = mean.value() / count;
    rep.meanlogN_high = rep.meanlogN_low + 26.0 * std::log(2.0) + 21.0 * std::log(3.0);

    // gamma-factor allowance, absorbed into the reported budget
    double gamma_term = std::log(logX) / logX;
    rep.skipped_budget = s1.budget + s2.budget + gamma_term;

    double phi0 = tf.phi(0.0);
    double phihat0 = tf.phi_hat(0.0);
    double base_lo = phihat0 * rep.meanlogN_low / logX - rep.S1 - rep.S2;
    double base_hi = phihat0 * rep.meanlogN_high / logX - rep.S1 - rep.S2;
    rep.bound_low = (base_lo - s1.budget - s2.budget - gamma_term) / phi0;
    rep.bound_high = (base_hi + s1.budget + s2.budget + gamma_term) / phi0;
    return rep;
}

std::pair<double, double> rank_bound(double X, double sigma, int workers,
                                     const cache::CacheDir& cache) {
    DensityReport rep = density_report(X, sigma, workers, cache);
    return {rep.bound_low, rep.bound_high};
}

double asymptotic_bound(double sigma) {
    if (!(sigma > 0)) throw DomainError("sigma must be positive");
    return 0.25 + 6.0 / sigma;
}

mpq_class asymptotic_bound_exact(const mpq_class& sigma) {
    if (sigma <= 0) throw DomainError("sigma must be positive");
    mpq_class r = mpq_class(1, 4) + mpq_class(6) / sigma;
    r.canonicalize();
    return r;
}

}  // namespace twistlab::density
