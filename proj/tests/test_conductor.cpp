#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "twistlab/conductor.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/family.hpp"
#include "twistlab/stats.hpp"

using namespace twistlab;
using namespace twistlab::conductor;

TEST_CASE("lambda_tilde on the family pictures") {
    // p | d: depth 1/2, lc valuation 0 -> 3/2
    auto [pic1, act1] = build_family_picture(5, 5);
    CHECK(lambda_tilde(pic1, pic1.root) == mpq_class(3, 2));
    // p | d+3, ord 1: depth 1/3, lc valuation -1 -> 1/2
    auto [pic2, act2] = build_family_picture(2, 5);
    CHECK(lambda_tilde(pic2, pic2.root) == mpq_class(1, 2));
    // singletons are rejected
    CHECK_THROWS_AS(lambda_tilde(pic1, 1), DomainError);
}

TEST_CASE("tame exponent on the three lemma configurations") {
    {  // p | d: U has 3 orbits, V empty, parity bonus
        auto [pic, act] = build_family_picture(5, 5);
        TameResult r = tame_exponent(pic, act);
        CHECK(r.u_orbits == 3);
        CHECK(r.v_orbits == 0);
        CHECK(r.bonus == 1);
        CHECK(r.n_tame == 2);
    }
    {  // p | d+3 with odd valuation: U and V empty, no bonus
        auto [pic, act] = build_family_picture(2, 5);
        TameResult r = tame_exponent(pic, act);
        CHECK(r.u_orbits == 0);
        CHECK(r.v_orbits == 0);
        CHECK(r.bonus == 0);
        CHECK(r.n_tame == 4);
    }
    {  // p | d+3 with valuation 6: trivial orbits, U of size 6, V = {R}
        auto [pic, act] = build_family_picture(15622, 5);
        TameResult r = tame_exponent(pic, act);
        CHECK(r.u_orbits == 6);
        CHECK(r.v_orbits == 1);
        CHECK(r.bonus == 1);
        CHECK(r.n_tame == 0);
    }
}

TEST_CASE("closed-form exponents") {
    CHECK(exponent_at_prime(5, 5) == 2);
    CHECK(exponent_at_prime(2, 5) == 4);
    CHECK(exponent_at_prime(15622, 5) == 0);
    CHECK(exponent_at_prime(22, 5) == 4);   // 25 | d+3, ord 2
    CHECK(exponent_at_prime(122, 5) == 4);  // 125 | d+3, ord 3
    CHECK(exponent_at_prime(1, 7) == 0);    // good prime
    CHECK_THROWS_AS(exponent_at_prime(5, 3), UsageError);
    CHECK_THROWS_AS(exponent_at_prime(12, 5), DomainError);  // not squarefree
}

TEST_CASE("engine agrees with the closed form for every bad prime, d <= 500") {
    for (i64 d = 1; d <= 500; ++d) {
        if (d == 3 || squarefree_part(d) != d) continue;
        for (auto& [p, e] : factorize(d * (d + 3))) {
            if (p < 5) continue;
            auto [pic, act] = build_family_picture(d, p);
            CHECK(tame_exponent(pic, act).n_tame == exponent_at_prime(d, p));
        }
    }
}

TEST_CASE("known conductor part") {
    auto k2 = conductor_known_part(2);
    CHECK(k2.size() == 1);
    CHECK(k2.at(5) == 4);  // 5^4 = 625
    auto k5 = conductor_known_part(5);
    CHECK(k5.at(5) == 2);
    CHECK(k5.size() == 1);  // d+3 = 8 has no prime >= 5
    // the known part always divides disc((d+3)^2 f_d)
    for (i64 d : {2, 5, 7, 10, 46}) {
        mpq_class disc = discriminant(family::twist_sextic_integral(d).to_exact());
        mpz_class num = disc.get_num();
        for (auto& [p, e] : conductor_known_part(d)) {
            mpz_class pe = 1;
            for (int i = 0; i < e; ++i) pe *= static_cast<long>(p);
            CHECK(num % pe == 0);
        }
    }
}

TEST_CASE("radical of the known part divides d(d+3)") {
    for (i64 d = 1; d <= 300; ++d) {
        if (d == 3 || squarefree_part(d) != d) continue;
        for (auto& [p, e] : conductor_known_part(d))
            CHECK((d * (d + 3)) % p == 0);
    }
}

TEST_CASE("log conductor bracket") {
    auto [lo, hi] = log_conductor_bracket(2);
    CHECK(lo == doctest::Approx(4 * std::log(5.0)));
    CHECK(hi == doctest::Approx(lo + 26 * std::log(2.0) + 21 * std::log(3.0)));
    CHECK(lo <= hi);
}

TEST_CASE("mean log known conductor stays below the 6 log X envelope") {
    // trend check at modest scales: mean_d log N_known <= 6 (1 + eps) log X
    for (double X : {1e3, 1e4, 1e5}) {
        auto S = stats::squarefree_enum(X);
        double sum = 0;
        for (i64 d : S.members) sum += log_conductor_bracket(d).first;
        double mean = sum / static_cast<double>(S.members.size());
        CHECK(mean <= 6.0 * std::log(X));
    }
}

TEST_CASE("generic engine edge: nested picture with a twin") {
    // two roots much closer to each other than to the other four:
    // R = {6 leaves, depth 1/3} with a twin child at depth 3/2.
    ClusterPicture pic = ClusterPicture::single_cluster(6, mpq_class(1, 3), 0);
    // attach leaves 0,1 to a twin
    Cluster twin;
    twin.leaves = {0, 1};
    twin.depth = mpq_class(3, 2);
    twin.parent = pic.root;
    pic.nodes.push_back(twin);
    int tw = static_cast<int>(pic.nodes.size()) - 1;
    // rewire: twin replaces the two singletons as a child of the root
    auto& rc = pic.nodes[0].children;
    rc.erase(std::remove(rc.begin(), rc.end(), 1), rc.end());
    rc.erase(std::remove(rc.begin(), rc.end(), 2), rc.end());
    rc.push_back(tw);
    pic.nodes[1].parent = tw;
    pic.nodes[2].parent = tw;
    pic.nodes[tw].children = {1, 2};

    InertiaAction act = InertiaAction::from_leaf_orbits(pic, {0, 1, 2, 3, 4, 5});
    TameResult r = tame_exponent(pic, act);
    CHECK(lambda_tilde(pic, pic.root) == mpq_class(2, 3));
    CHECK(lambda_tilde(pic, tw) == mpq_class(13, 6));
    // root-level singletons: xi_R(2/3) = 0 <= xi_R(1/3) = 0, in U;
    // twin leaves: xi_tw(13/6) = 1 <= xi_tw(3/2) = 1, in U.  So |U/I| = 6.
    // V: xi_R(2/3) = 0 puts R in; the twin has xi = 1 and stays out.
    CHECK(r.u_orbits == 6);
    CHECK(r.v_orbits == 1);
    CHECK(r.bonus == 1);
    CHECK(r.n_tame == 0);
}
