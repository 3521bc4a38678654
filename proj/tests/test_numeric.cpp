#include <doctest.h>

#include <random>

#include "twistlab/errors.hpp"
#include "twistlab/numeric.hpp"

using namespace twistlab;

TEST_CASE("primality and sieves agree") {
    auto ps = primes_in(2, 2000);
    size_t k = 0;
    for (i64 n = 2; n <= 2000; ++n) {
        bool p = (k < ps.size() && ps[k] == n);
        CHECK(is_prime(static_cast<u64>(n)) == p);
        if (p) ++k;
    }
    CHECK(ps.size() == 303);
}

TEST_CASE("jacobi basics") {
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(0, 5) == 0);
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(-1, 13) == 1);
    CHECK(jacobi(-1, 19) == -1);
    CHECK_THROWS_AS(jacobi(3, 10), UsageError);
}

TEST_CASE("jacobi is multiplicative and periodic mod p") {
    std::mt19937_64 rng(7);
    for (i64 p : {5, 13, 101, 997}) {
        std::uniform_int_distribution<i64> pick(-5000, 5000);
        for (int i = 0; i < 200; ++i) {
            i64 a = pick(rng), b = pick(rng);
            CHECK(jacobi(a * b % p, p) == jacobi(a, p) * jacobi(b, p));
            CHECK(jacobi(a + p, p) == jacobi(a, p));
        }
    }
}

TEST_CASE("sqrt_mod returns square roots") {
    std::mt19937_64 rng(11);
    for (i64 p : {5, 13, 17, 97, 193, 769}) {  // includes p = 1 mod 8 cases
        std::uniform_int_distribution<i64> pick(1, p - 1);
        for (int i = 0; i < 50; ++i) {
            i64 a = pick(rng);
            if (jacobi(a, p) != 1) continue;
            u64 r = sqrt_mod(a, p);
            CHECK(static_cast<i64>(mulmod(r, r, static_cast<u64>(p))) == a);
        }
        CHECK_THROWS_AS(sqrt_mod([&] {
            i64 a = 2;
            while (jacobi(a, p) != -1) ++a;
            return a;
        }(), p), UsageError);
    }
}

TEST_CASE("squarefree part and valuation") {
    CHECK(squarefree_part(16) == 1);
    CHECK(squarefree_part(-16) == -1);
    CHECK(squarefree_part(10) == 10);
    CHECK(squarefree_part(-2 * (2 * 2 - 9)) == 10);
    CHECK(squarefree_part(720) == 5);
    CHECK(valuation(15625, 5) == 6);
    CHECK(valuation(15622 + 3, 5) == 6);
}

TEST_CASE("compensated accumulator beats naive summation") {
    KahanSum s;
    double naive = 0.0;
    // 1 + many tiny terms whose naive sum loses them all
    s.add(1.0);
    naive += 1.0;
    for (int i = 0; i < 1000000; ++i) {
        s.add(1e-18);
        naive += 1e-18;
    }
    CHECK(naive == 1.0);
    CHECK(s.value() == doctest::Approx(1.0 + 1e-12).epsilon(1e-15));
}
