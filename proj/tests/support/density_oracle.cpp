#include "density_oracle.hpp"

#include <cmath>

#include "twistlab/family.hpp"
#include "twistlab/ffcount.hpp"

namespace twistlab::testsupport {

namespace {

// caps mirroring the documented skip policy
constexpr double kCapBadD1 = 2.0, kCapBadD2 = 2.0;
constexpr double kCapWeil1 = 4.0, kCapWeil2 = 10.0;

struct Inner {
    i64 sum = 0;      // sum over good d of a1 (kind 1) or a1^2 - a2 (kind 2)
    i64 n_bad = 0;    // members with p | d
    i64 n_deep = 0;   // members with p^6 | d+3
};

Inner inner_sums(const stats::SquarefreeSet& S, i64 p, int kind) {
    Inner in;
    for (i64 d : S.members) {
        if (d % p == 0) {
            ++in.n_bad;
            continue;
        }
        if ((d + 3) % p == 0) {
            if (valuation(d + 3, p) >= 6) ++in.n_deep;
            continue;  // exact zero otherwise
        }
        if (kind == 1) {
            // only the F_p count enters lambda_p
            in.sum += ffcount::count_points(family::twist_sextic_integral(d), p, 1).count - p - 1;
        } else {
            auto [a1, a2] = ffcount::genus2_a1a2(family::twist_sextic_integral(d), p);
            in.sum += a1 * a1 - a2;
        }
    }
    return in;
}

}  // namespace

density::SumResult s1_oracle(const stats::SquarefreeSet& S, double sigma) {
    density::TestFunction tf(sigma);
    density::SumResult out;
    if (S.members.empty()) return out;
    double logX = std::log(S.X);
    i64 pmax = static_cast<i64>(std::floor(std::exp(sigma * logX)));
    KahanSum value, budget;
    for (i64 p : primes_in(2, pmax)) {
        double lp = std::log(static_cast<double>(p));
        double w = lp / std::sqrt(static_cast<double>(p)) * tf.phi_hat(lp / logX);
        if (w == 0.0) continue;
        if (p < 5) {
            budget.add(kCapWeil1 * w * static_cast<double>(S.members.size()));
            continue;
        }
        Inner in = inner_sums(S, p, 1);
        value.add(-static_cast<double>(in.sum) / std::sqrt(static_cast<double>(p)) * w);
        budget.add((kCapBadD1 * static_cast<double>(in.n_bad) +
                    kCapWeil1 * static_cast<double>(in.n_deep)) * w);
    }
    double scale = 2.0 / (static_cast<double>(S.members.size()) * logX);
    out.value = scale * value.value();
    out.budget = scale * budget.value();
    return out;
}

density::SumResult s2_oracle(const stats::SquarefreeSet& S, double sigma) {
    density::TestFunction tf(sigma);
    density::SumResult out;
    if (S.members.empty()) return out;
    double logX = std::log(S.X);
    i64 pmax = static_cast<i64>(std::floor(std::exp(sigma / 2.0 * logX)));
    KahanSum value, budget;
    for (i64 p : primes_in(2, pmax)) {
        double lp = std::log(static_cast<double>(p));
        double w = lp / static_cast<double>(p) * tf.phi_hat(2.0 * lp / logX);
        if (w == 0.0) continue;
        if (p < 5) {
            budget.add(kCapWeil2 * w * static_cast<double>(S.members.size()));
            continue;
        }
        Inner in = inner_sums(S, p, 2);
        value.add(static_cast<double>(in.sum) / static_cast<double>(p) * w);
        budget.add((kCapBadD2 * static_cast<double>(in.n_bad) +
                    kCapWeil2 * static_cast<double>(in.n_deep)) * w);
    }
    double scale = 2.0 / (static_cast<double>(S.members.size()) * logX);
    out.value = scale * value.value();
    out.budget = scale * budget.value();
    return out;
}

}  // namespace twistlab::testsupport
