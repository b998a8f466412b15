#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loops/analysis.hpp"
#include "loops/loop_table.hpp"
#include "loops/perm_group.hpp"

namespace loops {

inline constexpr int default_naive_max = 6;

using LoopFilter = std::function<bool(const LoopTable&)>;

// Every Cayley table on 1..n with identity 1 that satisfies the filter,
// by row-wise backtracking with column-availability pruning. Exhaustive.
// Throws bound_exceeded_error when n exceeds the bound.
std::vector<LoopTable> naive_enumerate(int n, const LoopFilter& filter = nullptr,
                                       int bound = default_naive_max);

// Streaming variant; the callback sees every table passing the filter.
void naive_enumerate_visit(int n, const LoopFilter& filter,
                           const std::function<void(const LoopTable&)>& visit,
                           int bound = default_naive_max);

// Number of tables with identity 1 and no filter (reduced Latin squares).
long long naive_count(int n, int bound = default_naive_max);

// One candidate conjugacy class of left translations for a single anchor
// point: a vertex of the compatibility graph.
struct TranslationClass {
    Perm base;                 // representative translation l_x
    std::vector<Perm> members; // its H-conjugacy class, sorted
    int anchor = 0;            // x = base(1)
    int weight() const { return static_cast<int>(members.size()); }
};

struct CompatibilityGraph {
    std::vector<TranslationClass> vertices;
    std::vector<std::vector<char>> adjacent;
};

// Candidates for the left translation moving 1 to x: elements of g that
// map 1 to x, are fixed-point free and centralize the stabilizer of x in
// h. The fast variant translates the centralizer's own stabilizer of 1 by
// one found candidate instead of scanning all of g; both agree.
std::vector<Perm> translation_candidates(const PermGroup& g, const PermGroup& h, int x);
std::vector<Perm> translation_candidates_fast(const PermGroup& g, const PermGroup& h, int x);

// Conjugacy classes of candidates surviving the class-size and
// fixed-point-freeness filters for anchor x.
std::vector<TranslationClass> translation_classes(const PermGroup& h,
                                                  const std::vector<Perm>& candidates, int x);

// Graph on all surviving classes over the h-orbit representatives; two
// classes are adjacent when all pairwise quotients are fixed-point free
// (checked one-sided against the base, which suffices).
CompatibilityGraph build_compatibility_graph(const PermGroup& g, const PermGroup& h);

// All cliques of total weight exactly target, by branch and bound on
// vertices sorted by descending weight. Exhaustive.
std::vector<std::vector<int>> clique_search(const CompatibilityGraph& graph, int target_weight);

// All loops on 1..d with identity 1 whose left translations lie in g and
// that admit every element of h as an automorphism; g must be transitive
// and h contained in the stabilizer of 1. Every output is left
// automorphic with LMlt inside g and h inside Aut.
std::vector<LoopTable> algorithm_basic(const PermGroup& g, const PermGroup& h);

struct CensusRecord {
    LoopTable representative;
    Fingerprint fp;
    std::string provenance;
    int multiplicity = 0;
};

// Buckets by fingerprint, then splits buckets with pairwise isomorphism
// tests. Representatives keep first-seen order within the deterministic
// fingerprint ordering.
std::vector<CensusRecord> classify(const std::vector<LoopTable>& loops);

struct SimpleHuntResult {
    std::vector<CensusRecord> catalog;
    std::vector<std::string> skipped; // groups skipped, with reasons
};

// Simple-loop hunt at even degree d: keeps the supplied groups that are
// transitive, primitive, not solvable and not 4-transitive, runs
// algorithm_basic(G, G_1) on each, discards outputs whose multiplication
// group is not all of G, verifies simplicity and automorphicity of the
// rest and stores them up to isomorphism. Odd degrees are rejected
// outright: odd-order automorphic loops are solvable, hence never simple.
SimpleHuntResult simple_hunt(int d, const std::vector<PermGroup>& groups,
                             std::size_t cap = default_group_cap);

} // namespace loops
