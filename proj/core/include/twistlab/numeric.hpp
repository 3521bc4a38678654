#ifndef TWISTLAB_NUMERIC_HPP
#define TWISTLAB_NUMERIC_HPP

// Scalar modular arithmetic, primality, Jacobi symbols and the small
// sieves shared by every module.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace twistlab {

using i64 = long long;
using u64 = unsigned long long;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a mod m, gcd(a, m) = 1 required.
u64 invmod(u64 a, u64 m);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

// Jacobi symbol (a|n) for odd n > 0; equals the Legendre symbol when n is
// an odd prime.  No primality validation here.
int jacobi(i64 a, i64 n);

// All primes in [lo, hi], ascending.
std::vector<i64> primes_in(i64 lo, i64 hi);

// Smallest-prime-factor sieve for 2..n.
std::vector<int32_t> spf_sieve(i64 n);

// Factorization of |n| as prime -> multiplicity (n != 0).  Trial division;
// fine for the |n| <= ~10^12 values this project meets.
std::map<i64, int> factorize(i64 n);

// Squarefree part of n (same sign as n), n != 0.
i64 squarefree_part(i64 n);

int valuation(i64 n, i64 p);

// Square root of a mod odd prime p (Tonelli-Shanks); UsageError if a is a
// nonresidue.  Returns r with r^2 = a (mod p).
u64 sqrt_mod(i64 a, i64 p);

// Neumaier compensated accumulator.  Summation order is part of every
// reproducibility contract in this project; callers merge partials in a
// fixed order.
class KahanSum {
 public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

 private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace twistlab

#endif
