#include <doctest.h>

#include <cmath>
#include <random>

#include "support/density_oracle.hpp"
#include "twistlab/density.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"

using namespace twistlab;
using namespace twistlab::density;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Numerical Fourier transform of phi with analytic tail corrections:
// phi(x) cos(2 pi u x) splits into cosines at frequencies u, u+s, |u-s|;
// the [T, infinity) tail of cos(2 pi a x)/x^2 is handled by two rounds of
// integration by parts (error O(1/(a^3 T^4))), and exactly 1/T at a = 0.
double phi_hat_numeric(const TestFunction& tf, double u) {
    const double T = 2000.0;
    const int n = 1 << 22;  // Simpson panels over [0, T]
    const double h = T / n;
    auto f = [&](double x) { return tf.phi(x) * std::cos(2 * kPi * u * x); };
    double sum = f(0.0) + f(T);
    for (int i = 1; i < n; ++i) sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
    double integral = sum * h / 3.0;

    auto cos_tail = [&](double a) {
        // int_T^inf cos(2 pi a x)/x^2 dx
        if (a == 0.0) return 1.0 / T;
        double w = 2 * kPi * a;
        return -std::sin(w * T) / (w * T * T) - 2 * std::cos(w * T) / (w * w * T * T * T);
    };
    double s = tf.sigma;
    double tail = (cos_tail(u) - 0.5 * cos_tail(u + s) - 0.5 * cos_tail(std::abs(u - s))) /
                  (8 * kPi * kPi);
    return 2.0 * (integral + tail);
}
}  // namespace

TEST_CASE("test function pair") {
    TestFunction tf(0.8);
    CHECK(tf.phi_hat(0.0) == doctest::Approx(0.8 / 4).epsilon(1e-15));
    CHECK(tf.phi(0.0) == doctest::Approx(0.64 / 4).epsilon(1e-15));
    CHECK(tf.phi_hat(0.9) == 0.0);
    CHECK(tf.phi_hat(0.8 + 0.1) == 0.0);
    CHECK(tf.phi_hat(-0.3) == tf.phi_hat(0.3));
    CHECK(tf.phi(0.25) > 0);
    CHECK_THROWS_AS(TestFunction(0.0), DomainError);
    CHECK_THROWS_AS(TestFunction(-1.0), DomainError);
    // phi_hat(0)/phi(0) = 1/sigma
    CHECK(tf.phi_hat(0.0) / tf.phi(0.0) == doctest::Approx(1 / 0.8).epsilon(1e-14));
}

TEST_CASE("phi_hat is the Fourier transform of phi (quadrature check)") {
    TestFunction tf(1.0);
    for (double u : {0.0, 0.25, 0.6, 0.9, 1.2, 1.5}) {
        double num = phi_hat_numeric(tf, u);
        CHECK(std::abs(num - tf.phi_hat(u)) < 1e-6);
    }
}

TEST_CASE("S1 and S2 match the all-oracle double loop at desk scale") {
    for (auto [X, sigma] : std::vector<std::pair<double, double>>{
             {200.0, 0.5}, {300.0, 1.0}, {250.0, 0.75}}) {
        auto S = stats::squarefree_enum(X);
        SumResult fast1 = s1_sum(S, sigma, 2);
        SumResult ref1 = testsupport::s1_oracle(S, sigma);
        CHECK(fast1.value == doctest::Approx(ref1.value).epsilon(1e-12));
        CHECK(fast1.budget == doctest::Approx(ref1.budget).epsilon(1e-12));
        SumResult fast2 = s2_sum(S, sigma, 2);
        SumResult ref2 = testsupport::s2_oracle(S, sigma);
        CHECK(fast2.value == doctest::Approx(ref2.value).epsilon(1e-12));
        CHECK(fast2.budget == doctest::Approx(ref2.budget).epsilon(1e-12));
    }
}

TEST_CASE("empty prime ranges give exact zeros") {
    CHECK(s1_sum(1000.0, 0.05).value == 0.0);
    CHECK(s2_sum(1000.0, 0.05).value == 0.0);
    CHECK(prime_sum_2mod3(1000.0, 0.05) == 0.0);
}

TEST_CASE("results do not depend on the worker count") {
    auto S = stats::squarefree_enum(400);
    SumResult a = s1_sum(S, 0.8, 1);
    SumResult b = s1_sum(S, 0.8, 4);
    CHECK(a.value == b.value);  // bit identical
    CHECK(a.budget == b.budget);
    SumResult c = s2_sum(S, 1.0, 1);
    SumResult d = s2_sum(S, 1.0, 3);
    CHECK(c.value == d.value);
}

TEST_CASE("S2 residue-class path equals a per-d fast-table path exactly") {
    // same integer inner sums, assembled per d instead of per class
    auto S = stats::squarefree_enum(300);
    double sigma = 1.0;
    double logX = std::log(S.X);
    TestFunction tf(sigma);
    i64 pmax = static_cast<i64>(std::exp(sigma / 2 * logX));
    KahanSum value;
    for (i64 p : primes_in(5, pmax)) {
        double lp = std::log(static_cast<double>(p));
        double w = lp / static_cast<double>(p) * tf.phi_hat(2 * lp / logX);
        if (w == 0) continue;
        i64 inner = 0;
        for (i64 d : S.members) {
            if (d % p == 0 || (d + 3) % p == 0) continue;
            auto [fK, fM] = frobdata::residue_degrees(d, p);
            i64 ap = frobdata::ap_e0(p);
            i64 app;
            if (fM == 1)
                app = (fK == 1) ? 3 * ap * ap - 2 * p : (fK == 2) ? ap * ap - 2 * p : p;
            else
                app = (fK == 2) ? -2 * p : p;
            inner += app;
        }
        value.add(static_cast<double>(inner) / static_cast<double>(p) * w);
    }
    double per_d = 2.0 / (static_cast<double>(S.members.size()) * logX) * value.value();
    SumResult fast = s2_sum(S, sigma, 1);
    CHECK(per_d == fast.value);  // identical reals, identical order
}

TEST_CASE("prime_sum_2mod3 is monotone toward sigma^2/16 on a grid") {
    double target = 1.0 / 16.0;
    double prev = 0.0;
    for (double X : {1e3, 1e4, 1e5, 1e6}) {
        double v = prime_sum_2mod3(X, 1.0);
        CHECK(v > prev);
        CHECK(v < target);
        prev = v;
    }
}

TEST_CASE("rank bound report") {
    cache::CacheDir nocache;
    DensityReport rep = density_report(5e3, 0.3, 2, nocache);
    CHECK(rep.bound_low <= rep.bound_high);
    CHECK(std::isfinite(rep.bound_low));
    CHECK(std::isfinite(rep.bound_high));
    CHECK(rep.skipped_budget > 0);
    CHECK_FALSE(rep.sigma_above_theorem_range);
    DensityReport warn = density_report(1e3, 0.5, 1, nocache);
    CHECK(warn.sigma_above_theorem_range);
}

TEST_CASE("asymptotic bound") {
    mpq_class v = asymptotic_bound_exact(mpq_class(1, 3));
    CHECK(v == mpq_class(73, 4));  // 18.25 exactly
    CHECK(asymptotic_bound(0.5) == doctest::Approx(12.25).epsilon(1e-15));
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> pick(0.05, 3.0);
    for (int i = 0; i < 100; ++i) {
        double s = pick(rng);
        CHECK(std::abs((asymptotic_bound(s) - 6.0 / s) - 0.25) < 1e-12);
    }
    CHECK_THROWS_AS(asymptotic_bound(0.0), DomainError);
    CHECK_THROWS_AS(asymptotic_bound_exact(mpq_class(0)), DomainError);
}

TEST_CASE("S1 decay trend against the X^(3 sigma/2 - 1/2) envelope") {
    // measured constants c = |S1| log X / X^(3 sigma/2 - 1/2); the envelope
    // must not blow up as X grows at fixed sigma < 1/3
    double sigma = 0.3;
    double c_prev = -1;
    for (double X : {2e3, 2e4, 2e5}) {
        SumResult s1 = s1_sum(X, sigma, 2);
        double envelope = std::pow(X, 1.5 * sigma - 0.5) / std::log(X);
        double c = std::abs(s1.value) / envelope;
        CHECK(std::isfinite(c));
        c_prev = c;
    }
    CHECK(c_prev >= 0);
}

TEST_CASE("rs decay contrast: the 2-mod-3 branch equals its closed form") {
    cache::CacheDir nocache;
    RsDecayReport rep = rs_decay_checks(2e4, 1.0, 2, nocache);
    CHECK(rep.sq_2mod3 == rep.sq_2mod3_closed);  // identical term-by-term
    CHECK(rep.sq_2mod3 != 0.0);
    // empty range
    RsDecayReport zero = rs_decay_checks(100.0, 0.1, 1, nocache);
    CHECK(zero.e0e1 == 0.0);
    CHECK(zero.sq_1mod3 == 0.0);
}
