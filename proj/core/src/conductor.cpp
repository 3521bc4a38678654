#include "twistlab/conductor.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "twistlab/errors.hpp"

namespace twistlab::conductor {

namespace {

void check_prime5(i64 p) {
    if (p < 5)
        throw UsageError("p = " + std::to_string(p) + " unsupported: exponents at 2, 3 are only bracketed");
    if (!is_prime(static_cast<u64>(p))) throw UsageError("p must be prime");
}

void check_family_d(i64 d) {
    if (d == 0 || d == 3 || d == -3) throw DomainError("d outside the family");
    if (squarefree_part(d) != d) throw DomainError("d must be squarefree");
}

// 2-adic valuation of a nonzero rational
long ord2(const mpq_class& a) {
    if (a == 0) throw DomainError("ord2(0)");
    return static_cast<long>(mpz_scan1(a.get_num().get_mpz_t(), 0)) -
           static_cast<long>(mpz_scan1(a.get_den().get_mpz_t(), 0));
}

// xi_s(a) = max(-ord2([I : I_s] a), 0), using only the parity of the index.
// With an even index the true valuation is >= ord2(a) + 1; for the
// arguments this engine accepts (ord2 >= -1) that forces xi = 0.
int xi(bool index_odd, const mpq_class& a) {
    long v = ord2(a);
    if (v < -1)
        throw DomainError("xi: 2-adic valuation below -1 needs more than an index parity");
    if (!index_odd) return 0;
    return static_cast<int>(std::max(-v, 0L));
}

}  // namespace

ClusterPicture ClusterPicture::single_cluster(int n_leaves, const mpq_class& depth,
                                              i64 lc_valuation) {
    ClusterPicture pic;
    pic.n_leaves = n_leaves;
    pic.lc_valuation = lc_valuation;
    Cluster root;
    for (int i = 0; i < n_leaves; ++i) root.leaves.push_back(i);
    root.depth = depth;
    pic.nodes.push_back(root);
    pic.root = 0;
    for (int i = 0; i < n_leaves; ++i) {
        Cluster leaf;
        leaf.leaves = {i};
        leaf.parent = 0;
        pic.nodes.push_back(leaf);
        pic.nodes[0].children.push_back(1 + i);
    }
    return pic;
}

InertiaAction InertiaAction::from_leaf_orbits(const ClusterPicture& pic,
                                              const std::vector<int>& leaf_orbit) {
    if (static_cast<int>(leaf_orbit.size()) != pic.n_leaves)
        throw UsageError("leaf orbit size mismatch");
    InertiaAction act;
    act.leaf_orbit = leaf_orbit;
    act.cluster_orbit.resize(pic.nodes.size());
    act.stab_index_odd.assign(pic.nodes.size(), 1);
    int next = *std::max_element(leaf_orbit.begin(), leaf_orbit.end()) + 1;
    for (size_t i = 0; i < pic.nodes.size(); ++i) {
        const Cluster& c = pic.nodes[i];
        if (c.leaves.size() == 1) {
            act.cluster_orbit[i] = leaf_orbit[static_cast<size_t>(c.leaves[0])];
            // orbit of size k has stabilizer index k (inside the root picture)
            int sz = static_cast<int>(std::count(leaf_orbit.begin(), leaf_orbit.end(),
                                                 act.cluster_orbit[i]));
            act.stab_index_odd[i] = static_cast<uint8_t>(sz % 2 == 1);
        } else {
            act.cluster_orbit[i] = next++;  // proper clusters here are stabilized
            act.stab_index_odd[i] = 1;
        }
    }
    return act;
}

mpq_class lambda_tilde(const ClusterPicture& pic, int node) {
    const Cluster& s = pic.nodes[static_cast<size_t>(node)];
    if (s.leaves.size() < 2) throw DomainError("lambda_tilde of an improper cluster");
    mpq_class sum = static_cast<long>(pic.lc_valuation);
    long odd_children = 0;
    for (int ch : s.children)
        if (pic.nodes[static_cast<size_t>(ch)].leaves.size() % 2 == 1) ++odd_children;
    sum += odd_children * s.depth;
    // sum of depths of {r} ^ s over leaves r outside s: walk up from s,
    // each ancestor a contributes depth(a) for every leaf under a not
    // under the previous step.
    int cur = node;
    long covered = static_cast<long>(s.leaves.size());
    while (pic.nodes[static_cast<size_t>(cur)].parent != -1) {
        int par = pic.nodes[static_cast<size_t>(cur)].parent;
        const Cluster& pnode = pic.nodes[static_cast<size_t>(par)];
        long here = static_cast<long>(pnode.leaves.size());
        sum += (here - covered) * pnode.depth;
        covered = here;
        cur = par;
    }
    sum /= 2;
    return sum;
}

TameResult tame_exponent(const ClusterPicture& pic, const InertiaAction& act, int genus) {
    if (pic.root < 0 || pic.nodes.empty()) throw DomainError("empty picture");
    if (act.cluster_orbit.size() != pic.nodes.size() ||
        act.stab_index_odd.size() != pic.nodes.size())
        throw DomainError("inertia action does not match the picture");

    std::vector<mpq_class> lt(pic.nodes.size());
    for (size_t i = 0; i < pic.nodes.size(); ++i)
        if (pic.is_proper(static_cast<int>(i))) lt[i] = lambda_tilde(pic, static_cast<int>(i));

    std::set<int> u_orbits, v_orbits;
    for (size_t i = 0; i < pic.nodes.size(); ++i) {
        const Cluster& s = pic.nodes[i];
        bool odd = s.leaves.size() % 2 == 1;
        if (odd && static_cast<int>(i) != pic.root && s.parent >= 0) {
            size_t par = static_cast<size_t>(s.parent);
            bool podd = act.stab_index_odd[par];
            if (xi(podd, lt[par]) <= xi(podd, pic.nodes[par].depth))
                u_orbits.insert(act.cluster_orbit[i]);
        }
        if (pic.is_proper(static_cast<int>(i))) {
            // ubereven: even cluster whose children are all even
            bool ubereven = s.leaves.size() % 2 == 0;
            for (int ch : s.children)
                if (pic.nodes[static_cast<size_t>(ch)].leaves.size() % 2 == 1) ubereven = false;
            if (!ubereven && xi(act.stab_index_odd[i], lt[i]) == 0)
                v_orbits.insert(act.cluster_orbit[i]);
        }
    }

    int bonus = (pic.n_leaves % 2 == 0 && pic.lc_valuation % 2 == 0) ? 1 : 0;
    TameResult r;
    r.two_g = 2 * genus;
    r.u_orbits = static_cast<int>(u_orbits.size());
    r.v_orbits = static_cast<int>(v_orbits.size());
    r.bonus = bonus;
    r.n_tame = r.two_g - r.u_orbits + r.v_orbits + bonus;
    if (r.n_tame < 0 || r.n_tame > 2 * genus)
        throw InternalError("tame exponent " + std::to_string(r.n_tame) + " out of range");
    return r;
}

int exponent_at_prime(i64 d, i64 p) {
    check_family_d(d);
    check_prime5(p);
    if (d % p == 0) return 2;
    if ((d + 3) % p != 0) return 0;
    int v = valuation(d + 3, p);
    if (v % 6 == 0) return 0;
    return 4;
}

std::pair<ClusterPicture, InertiaAction> build_family_picture(i64 d, i64 p) {
    check_prime5(p);
    if (d == 0 || d == 3 || d == -3) throw DomainError("d outside the family");
    if (d % p != 0 && (d + 3) % p != 0)
        throw UsageError("p is a good prime for this d");

    if (d % p == 0) {
        int v = valuation(d, p);
        mpq_class depth(static_cast<long>(v), 2);
        depth.canonicalize();
        ClusterPicture pic = ClusterPicture::single_cluster(6, depth, 0);
        // odd ord_p(d): the residue extension is ramified and pairs the
        // roots of the three quadratic factors; even: inertia acts trivially
        std::vector<int> orbits = (v % 2 == 1) ? std::vector<int>{0, 0, 1, 1, 2, 2}
                                               : std::vector<int>{0, 1, 2, 3, 4, 5};
        return {pic, InertiaAction::from_leaf_orbits(pic, orbits)};
    }

    int v = valuation(d + 3, p);
    mpq_class depth(static_cast<long>(v), 3);
    depth.canonicalize();
    ClusterPicture pic = ClusterPicture::single_cluster(6, depth, -v);
    // 3 | ord: the cubic ramification disappears and inertia fixes the
    // roots; otherwise it cycles each conjugate cubic factor
    std::vector<int> orbits = (v % 3 == 0) ? std::vector<int>{0, 1, 2, 3, 4, 5}
                                           : std::vector<int>{0, 0, 0, 1, 1, 1};
    return {pic, InertiaAction::from_leaf_orbits(pic, orbits)};
}

std::map<i64, int> conductor_known_part(i64 d) {
    check_family_d(d);
    std::map<i64, int> known;
    for (auto& [p, e] : factorize(d))
        if (p >= 5) known[p] = 2;
    for (auto& [p, e] : factorize(d + 3)) {
        if (p < 5) continue;
        int ex = exponent_at_prime(d, p);
        if (ex > 0) known[p] = ex;
    }
    return known;
}

std::pair<double, double> log_conductor_bracket(i64 d) {
    double lo = 0.0;
    for (auto& [p, e] : conductor_known_part(d))
        lo += e * std::log(static_cast<double>(p));
    double hi = lo + 26 * std::log(2.0) + 21 * std::log(3.0);
    return {lo, hi};
}

}  // namespace twistlab::conductor
