#include "twistlab/numeric.hpp"

#include <algorithm>
#include <cstdlib>

#include "twistlab/errors.hpp"

namespace twistlab {

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw UsageError("invmod: argument not invertible");
    return static_cast<u64>(t < 0 ? t + static_cast<long long>(m) : t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is deterministic for all n < 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || (n & 1) == 0) throw UsageError("jacobi: modulus must be odd positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            int r = n & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
    std::vector<i64> out;
    if (hi < 2) return out;
    lo = std::max<i64>(lo, 2);
    std::vector<bool> comp(static_cast<size_t>(hi + 1), false);
    for (i64 i = 2; i * i <= hi; ++i)
        if (!comp[static_cast<size_t>(i)])
            for (i64 j = i * i; j <= hi; j += i) comp[static_cast<size_t>(j)] = true;
    for (i64 i = lo; i <= hi; ++i)
        if (!comp[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<int32_t> spf_sieve(i64 n) {
    std::vector<int32_t> spf(static_cast<size_t>(n + 1), 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[static_cast<size_t>(i)] == 0) {
            for (i64 j = i; j <= n; j += i)
                if (spf[static_cast<size_t>(j)] == 0)
                    spf[static_cast<size_t>(j)] = static_cast<int32_t>(i);
        }
    }
    return spf;
}

std::map<i64, int> factorize(i64 n) {
    if (n == 0) throw UsageError("factorize: zero");
    std::map<i64, int> f;
    u64 m = static_cast<u64>(n < 0 ? -n : n);
    for (u64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) { ++f[static_cast<i64>(p)]; m /= p; }
    }
    if (m > 1) ++f[static_cast<i64>(m)];
    return f;
}

i64 squarefree_part(i64 n) {
    auto f = factorize(n);
    i64 r = n < 0 ? -1 : 1;
    for (auto& [p, e] : f)
        if (e & 1) r *= p;
    return r;
}

int valuation(i64 n, i64 p) {
    if (n == 0) throw UsageError("valuation: zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

u64 sqrt_mod(i64 a, i64 p) {
    u64 up = static_cast<u64>(p);
    a %= p;
    if (a < 0) a += p;
    u64 ua = static_cast<u64>(a);
    if (ua == 0) return 0;
    if (jacobi(a, p) != 1) throw UsageError("sqrt_mod: nonresidue");
    if ((p & 3) == 3) return powmod(ua, (up + 1) / 4, up);
    // Tonelli-Shanks
    u64 q = up - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 z = 2;
    while (jacobi(static_cast<i64>(z), p) != -1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, q, up);
    u64 t = powmod(ua, q, up);
    u64 r = powmod(ua, (q + 1) / 2, up);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) { t2 = mulmod(t2, t2, up); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, up);
        m = i;
        c = mulmod(b, b, up);
        t = mulmod(t, c, up);
        r = mulmod(r, b, up);
    }
    return r;
}

}  // namespace twistlab
