#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/element_set.hpp"
#include "loops/loop_table.hpp"
#include "loops/perm_group.hpp"

namespace loops {

// Bruck's generating set for the inner mapping group:
//   L_{x,y}(z) = (yx) \ (y(xz)),  R_{x,y}(z) = ((zx)y) / (xy),
//   T_x(y)     = x \ (yx).
// All three families fix 1.
class InnerGenerators {
public:
    explicit InnerGenerators(const LoopTable& q) : q_(&q) {}

    Perm left(int x, int y) const;   // L_{x,y}
    Perm right(int x, int y) const;  // R_{x,y}
    Perm middle(int x) const;        // T_x

    // All inner generators with duplicates removed, in a deterministic order.
    std::vector<Perm> all_distinct() const;

private:
    const LoopTable* q_;
};

inline constexpr long long default_aut_budget = 10'000'000;

PermGroup mlt(const LoopTable& q, std::size_t cap = default_group_cap);
PermGroup lmlt(const LoopTable& q, std::size_t cap = default_group_cap);

// Stabilizer of 1 in Mlt(Q). inn_from_generators materializes the closure
// of Bruck's generators instead; the two agree and tests cross-check them.
PermGroup inn(const LoopTable& q, std::size_t cap = default_group_cap);
PermGroup inn_from_generators(const LoopTable& q, std::size_t cap = default_group_cap);

// f(x*y) = f(x)*f(y) for all x, y (which forces f(1) = 1).
bool is_automorphism(const LoopTable& q, const Perm& f);

// Full automorphism group by backtracking over images of a generating
// set, pruned by element invariants. Throws budget_exceeded_error when
// the node budget runs out.
PermGroup automorphism_group(const LoopTable& q,
                             long long node_budget = default_aut_budget);

struct AutomorphicFlags {
    bool left = false;   // every L_{x,y} is an automorphism
    bool right = false;  // every R_{x,y} is an automorphism
    bool middle = false; // every T_x is an automorphism
    bool full = false;   // all of the above
};

// Also cross-checks that full == (left && middle) == (right && middle);
// a mismatch would contradict loop theory and raises internal_error.
AutomorphicFlags automorphic_class(const LoopTable& q);

struct NucleiReport {
    ElementSet n_left, n_middle, n_right, nucleus, center;
    bool n_left_normal = false, n_middle_normal = false, n_right_normal = false;
    bool nucleus_normal = false, center_normal = false;
};

// Brute-force membership scans; center = nuclear elements commuting with
// everything.
NucleiReport nuclei(const LoopTable& q);

// Invariance of a subloop under all inner generators.
bool is_normal(const LoopTable& q, const ElementSet& s);

// Least normal subloop containing s.
ElementSet normal_closure(const LoopTable& q, const ElementSet& s);

// Factor loop by a normal subloop; cosets are relabeled with the coset of
// 1 first (sorted by minimal member). Verifies well-definedness.
LoopTable quotient(const LoopTable& q, const ElementSet& n);
// Coset id of each element, matching the labeling used by quotient().
std::vector<int> coset_labels(const LoopTable& q, const ElementSet& n);

// Normal closure of all associator and commutator elements; the factor by
// it is verified to be an abelian group.
ElementSet derived_subloop(const LoopTable& q);
bool is_solvable_loop(const LoopTable& q);

// Z_0 = {1}, Z_{i+1} = preimage of the center of Q/Z_i; the list ends at
// the first repeated term or at the full loop.
std::vector<ElementSet> upper_central_series(const LoopTable& q);
// Least i with Z_i = Q, or nullopt when the series stalls below Q.
std::optional<int> nilpotency_class(const LoopTable& q);

// No proper nontrivial normal subloop, via normal closures of singletons.
// Order 1 reports false by convention. For orders >= 2, when Mlt fits the
// cap the result is cross-checked against primitivity of Mlt(Q).
bool is_simple(const LoopTable& q, std::size_t cap = default_group_cap);

// Isomorphism witness mapping 1 to 1, or nullopt. Backtracking pruned by
// invariant fingerprints.
std::optional<Perm> are_isomorphic(const LoopTable& a, const LoopTable& b,
                                   long long node_budget = default_aut_budget);

// (x,y,z) with (xy)z = (x(yz)) * (x,y,z).
int associator(const LoopTable& q, int x, int y, int z);

// f(x)g(y) = h(xy) for all x, y.
bool is_autotopism(const LoopTable& q, const Perm& f, const Perm& g, const Perm& h);

// All c with f(x) * (f(y)c) = f(xy)c for all x, y.
std::vector<int> pseudo_automorphism_companions(const LoopTable& q, const Perm& f);

// Splits a finite commutative automorphic loop into its 2-power-order and
// odd-order parts A and B; verifies both are subloops, |A| is a power of
// two, |B| is odd, and Q is isomorphic to A x B.
struct TorsionDecomposition {
    ElementSet two_part;
    ElementSet odd_part;
};
TorsionDecomposition decompose_torsion(const LoopTable& q);

// Every subloop, found by closing each known subloop with one extra
// generator until no new subloops appear. Sorted by size then members.
std::vector<ElementSet> all_subloops(const LoopTable& q);

// Isomorphism-invariant summary used for census bucketing and as a cheap
// pre-filter in are_isomorphic.
struct Fingerprint {
    int order = 0;
    // (nominal element order, multiplicity), sorted.
    std::vector<std::pair<int, int>> order_profile;
    int n_left = 0, n_middle = 0, n_right = 0, nucleus = 0, center = 0;
    bool commutative = false;
    bool associative = false;
    auto operator<=>(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const LoopTable& q);

// Least k >= 1 with x^[k] = 1; always defined, no cyclic-closure check.
int nominal_order(const LoopTable& q, int x);

} // namespace loops
