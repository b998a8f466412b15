#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "loops/perm.hpp"

namespace loops {

inline constexpr std::size_t default_group_cap = 2'000'000;

// Finitely generated permutation group, fully materialized by
// breadth-first closure over the generators. Immutable once built.
class PermGroup {
public:
    PermGroup() = default;

    // Materializes <gens>; throws cap_exceeded_error if more than cap
    // elements appear. An empty generator list with degree d gives the
    // trivial group.
    static PermGroup closure(const std::vector<Perm>& gens, std::size_t cap,
                             int degree_if_empty = 0);

    // Wraps an already-closed element set (e.g. a filtered subgroup).
    // The elements double as the generating set.
    static PermGroup from_elements(std::vector<Perm> elems);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return gens_; }
    bool contains(const Perm& p) const { return set_.count(p) != 0; }
    bool is_trivial() const { return order() == 1; }

    bool is_subgroup_of(const PermGroup& other) const;

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_; // BFS order, elements_[0] = identity
    std::unordered_set<Perm, PermHash> set_;
};

// All elements of g fixing pt.
PermGroup stabilizer(const PermGroup& g, int pt);

// Sorted orbit of pt under g.
std::vector<int> orbit(const PermGroup& g, int pt);

// Transitivity on ordered k-tuples of distinct points, 1 <= k <= 4.
bool is_transitive(const PermGroup& g, int k = 1);

// Transitive group with no nontrivial invariant partition. Computes, for
// each pair of points, the finest block system merging them and checks
// all are trivial. Throws not_transitive_error on intransitive input.
bool is_primitive(const PermGroup& g);

// Derived series via iterated normal closure of generator commutators.
bool is_solvable_group(const PermGroup& g, std::size_t cap = default_group_cap);

// Subgroup generated by commutators of generators, normally closed in g.
PermGroup derived_subgroup(const PermGroup& g, std::size_t cap = default_group_cap);

// {h g h^-1 : h in group}, sorted and deduplicated.
std::vector<Perm> conj_class(const PermGroup& group, const Perm& g);

// All elements of g commuting with every member of s.
PermGroup centralizer(const PermGroup& g, const std::vector<Perm>& s);

// Contains the identity, closed under inverses and under (x,y) -> xyx.
// Requires s to be a subset of the ambient group's elements.
bool is_twisted_subgroup(const PermGroup& ambient, const std::vector<Perm>& s);

// K(tau) = {x in g : tau(x) = x^-1} for tau = conjugation by t; throws
// not_an_automorphism_error when t g t^-1 does not preserve g.
std::vector<Perm> k_tau(const PermGroup& g, const Perm& t);

// g^((m+1)/2) for g of odd order m; its square is g.
Perm group_sqrt(const PermGroup& group, const Perm& g);

} // namespace loops
