#ifndef TWISTLAB_CONDUCTOR_HPP
#define TWISTLAB_CONDUCTOR_HPP

// Tame conductor exponents from cluster pictures: a small generic engine
// for the formula n_tame = 2g - #(U/I) + #(V/I) + parity bonus, plus the
// closed-form exponents and the global conductor assembly for the twist
// family.

#include <map>
#include <utility>

#include "twistlab/poly.hpp"

namespace twistlab::conductor {

// One node of a laminar cluster tree.  Leaves are modeled as singleton
// nodes; `depth` is meaningful for proper clusters only.
struct Cluster {
    std::vector<int> leaves;    // sorted leaf ids
    mpq_class depth;            // d_s, proper clusters only
    int parent = -1;            // index into ClusterPicture::nodes, -1 for root
    std::vector<int> children;  // node indices
};

struct ClusterPicture {
    int n_leaves = 0;
    i64 lc_valuation = 0;  // ord_p of the leading coefficient
    std::vector<Cluster> nodes;
    int root = -1;

    // Single proper cluster containing all leaves, at the given depth.
    static ClusterPicture single_cluster(int n_leaves, const mpq_class& depth,
                                         i64 lc_valuation);

    bool is_proper(int node) const { return nodes[static_cast<size_t>(node)].leaves.size() >= 2; }
};

struct InertiaAction {
    std::vector<int> leaf_orbit;          // orbit id per leaf
    std::vector<int> cluster_orbit;       // orbit id per node
    std::vector<uint8_t> stab_index_odd;  // parity of [I : I_s] per node

    // Inertia acting through the given leaf partition on a single-cluster
    // picture; the root is stabilized with odd index.
    static InertiaAction from_leaf_orbits(const ClusterPicture& pic,
                                          const std::vector<int>& leaf_orbit);
};

struct TameResult {
    int n_tame;
    int two_g;
    int u_orbits;
    int v_orbits;
    int bonus;
};

// lambda~_s = (ord_p(c) + #{odd children} d_s + sum_{r not in s} d_{r^s})/2.
// DomainError on singletons.
mpq_class lambda_tilde(const ClusterPicture& pic, int node);

// The tame exponent of y^2 = f(x) from its cluster picture and inertia
// data.  Depth 2-adic valuations below -1 are outside the parity-bit
// contract of InertiaAction and raise DomainError.
TameResult tame_exponent(const ClusterPicture& pic, const InertiaAction& act, int genus = 2);

// Closed-form conductor exponent of the d-th twist at p >= 5, d squarefree:
// 0 at good p; 2 when p | d; at p | (d+3): 4 unless ord_p(d+3) is divisible
// by 6, in which case 0.
int exponent_at_prime(i64 d, i64 p);

// The lemma-driven cluster picture and inertia action at a bad prime.
std::pair<ClusterPicture, InertiaAction> build_family_picture(i64 d, i64 p);

// prod_{p >= 5} p^{exponent_at_prime(d, p)} as factored data.
std::map<i64, int> conductor_known_part(i64 d);

// [log(known part), log(known part) + 26 log 2 + 21 log 3]: the wild
// exponents at 2 and 3 are never computed, only capped.
std::pair<double, double> log_conductor_bracket(i64 d);

}  // namespace twistlab::conductor

#endif
