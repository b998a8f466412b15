#include "doctest.h"

#include <set>

#include "loops/analysis.hpp"
#include "loops/constructions.hpp"
#include "loops/properties.hpp"
#include "loops/search.hpp"

#include "test_util.hpp"

using namespace loops;
using testutil::q6;

TEST_CASE("naive enumeration counts") {
    // The backtracker is its own oracle: tables with identity 1 are the
    // reduced Latin squares, whose counts are classical.
    CHECK(naive_count(1) == 1);
    CHECK(naive_count(2) == 1);
    CHECK(naive_count(3) == 1);
    CHECK(naive_count(4) == 4);
    CHECK(naive_count(5) == 56);
    CHECK(naive_count(6) == 9408);
    CHECK_THROWS_AS(naive_count(7), bound_exceeded_error);
}

TEST_CASE("naive enumeration with filters") {
    // Order 4 with the associativity filter: the two groups Z4 and Z2^2,
    // and nothing else, appear among the outputs up to isomorphism.
    auto assoc = naive_enumerate(4, [](const LoopTable& t) {
        return has_property(t, PropertyId::associative);
    });
    auto classes = classify(assoc);
    CHECK(classes.size() == 2);
    bool saw_z4 = false, saw_klein = false;
    for (const auto& rec : classes) {
        if (are_isomorphic(rec.representative, cyclic(4))) saw_z4 = true;
        if (are_isomorphic(rec.representative, abelian({2, 2}))) saw_klein = true;
    }
    CHECK(saw_z4);
    CHECK(saw_klein);

    // Orders up to 5: every automorphic loop is associative.
    for (int n = 1; n <= 5; ++n)
        for (const LoopTable& t :
             naive_enumerate(n, [](const LoopTable& q) { return automorphic_class(q).full; }))
            CHECK(has_property(t, PropertyId::associative));
}

TEST_CASE("translation candidate steps") {
    PermGroup g = mlt(q6());
    PermGroup h = stabilizer(g, 1);
    // Direct filter and the one-candidate fast path agree on every orbit
    // representative.
    for (int x = 2; x <= 6; ++x)
        CHECK(translation_candidates(g, h, x) == translation_candidates_fast(g, h, x));

    // Candidates for x are nonempty (the loop's own translation qualifies).
    auto c2 = translation_candidates(g, h, 2);
    CHECK(std::find(c2.begin(), c2.end(), q6().left_translation(2)) != c2.end());

    // The centralizer of the stabilizer contains every candidate.
    PermGroup cent = centralizer(g, stabilizer(h, 2).elements());
    for (const Perm& p : c2) CHECK(cent.contains(p));

    // Every candidate centralizes the stabilizer, maps 1 to the anchor
    // and is fixed-point free.
    PermGroup h2 = stabilizer(h, 2);
    for (const Perm& p : c2) {
        CHECK(p(1) == 2);
        CHECK(is_fixed_point_free(p));
        for (const Perm& s : h2.elements()) CHECK(p * s == s * p);
    }
}

TEST_CASE("compatibility graph structure") {
    PermGroup g = mlt(q6());
    PermGroup h = stabilizer(g, 1);
    CompatibilityGraph graph = build_compatibility_graph(g, h);
    REQUIRE(!graph.vertices.empty());

    // Class members map 1 into the orbit of the anchor, and the weight
    // matches the orbit size.
    for (const auto& v : graph.vertices) {
        auto orb = orbit(h, v.anchor);
        CHECK(v.weight() == static_cast<int>(orb.size()));
        for (const Perm& m : v.members)
            CHECK(std::binary_search(orb.begin(), orb.end(), m(1)));
    }

    // Distinct classes with the same anchor are never adjacent: their
    // quotients fix 1.
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < graph.vertices.size(); ++j)
            if (graph.vertices[i].anchor == graph.vertices[j].anchor)
                CHECK_FALSE(graph.adjacent[i][j]);
}

TEST_CASE("clique search") {
    CompatibilityGraph empty;
    CHECK(clique_search(empty, 0) == std::vector<std::vector<int>>{{}});
    CHECK(clique_search(empty, 3).empty());

    // Two incompatible vertices cannot reach the target together.
    CompatibilityGraph g2;
    TranslationClass a, b;
    a.base = Perm(2);
    a.members = {Perm(2)};
    b.base = Perm(2);
    b.members = {Perm(2)};
    g2.vertices = {a, b};
    g2.adjacent = {{0, 0}, {0, 0}};
    CHECK(clique_search(g2, 2).empty());
    CHECK(clique_search(g2, 1).size() == 2);

    // Pipeline consistency: the clique count equals the loop count.
    PermGroup g = mlt(q6());
    PermGroup h = stabilizer(g, 1);
    CompatibilityGraph graph = build_compatibility_graph(g, h);
    CHECK(clique_search(graph, 5).size() == algorithm_basic(g, h).size());
}

TEST_CASE("group enumeration pipeline") {
    // Regular cyclic groups force the unique loop Z_n.
    for (int n = 2; n <= 8; ++n) {
        PermGroup g = testutil::regular_cyclic(n);
        PermGroup h = PermGroup::closure({}, 10, n);
        auto out = algorithm_basic(g, h);
        REQUIRE(out.size() == 1);
        CHECK(out.front() == cyclic(n));
    }

    // The multiplication group of the smallest nonassociative automorphic
    // loop recovers it.
    PermGroup g = mlt(q6());
    PermGroup h = stabilizer(g, 1);
    auto out = algorithm_basic(g, h);
    REQUIRE(!out.empty());
    bool found = false;
    for (const LoopTable& t : out)
        if (are_isomorphic(t, q6())) found = true;
    CHECK(found);

    // Every output is left automorphic with left translations inside g
    // and h inside the automorphism group.
    for (const LoopTable& t : out) {
        CHECK(automorphic_class(t).left);
        CHECK(lmlt(t).is_subgroup_of(g));
        for (const Perm& a : h.elements()) CHECK(is_automorphism(t, a));
    }

    CHECK_THROWS_AS(algorithm_basic(PermGroup::closure({}, 10, 3), PermGroup::closure({}, 10, 3)),
                    not_transitive_error);
}

TEST_CASE("classification") {
    LoopTable z4 = cyclic(4);
    Perm relab = Perm::from_images({1, 3, 4, 2});
    auto records = classify({z4, z4.relabel(relab)});
    REQUIRE(records.size() == 1);
    CHECK(records.front().multiplicity == 2);

    // Nine overflow loops at p=3 collapse to four classes.
    std::vector<LoopTable> nine;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) nine.push_back(q_ab(3, a, b));
    CHECK(classify(nine).size() == 4);

    // The dihedral-like family plus the cyclic group at p=5: five classes.
    std::vector<LoopTable> family{cyclic(10)};
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> img(5);
        for (int x = 0; x < 5; ++x) img[static_cast<std::size_t>(x)] = k * x % 5 + 1;
        family.push_back(dih(2, cyclic(5), Perm::from_images(img)));
    }
    CHECK(classify(family).size() == 5);

    // classify is a congruence: representatives pairwise nonisomorphic,
    // and every input matches exactly one representative.
    auto recs = classify(nine);
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t j = i + 1; j < recs.size(); ++j)
            CHECK_FALSE(
                are_isomorphic(recs[i].representative, recs[j].representative).has_value());
    for (const LoopTable& t : nine) {
        int matches = 0;
        for (const auto& r : recs)
            if (are_isomorphic(t, r.representative)) ++matches;
        CHECK(matches == 1);
    }
}

TEST_CASE("simple hunt") {
    // Degree 6 with the classical primitive groups: nothing is stored.
    std::vector<PermGroup> groups;
    groups.push_back(PermGroup::closure(testutil::s6_gens(), default_group_cap));
    groups.push_back(PermGroup::closure(testutil::a6_gens(), default_group_cap));
    groups.push_back(PermGroup::closure(testutil::pgl25_gens(), default_group_cap));
    groups.push_back(PermGroup::closure(testutil::psl25_gens(), default_group_cap));
    CHECK(groups[0].order() == 720);
    CHECK(groups[1].order() == 360);
    CHECK(groups[2].order() == 120);
    CHECK(groups[3].order() == 60);

    SimpleHuntResult result = simple_hunt(6, groups);
    CHECK(result.catalog.empty());
    // The 4-transitive groups are filtered before any search.
    CHECK(result.skipped.size() == 2);

    CHECK_THROWS_AS(simple_hunt(5, {}), precondition_error);
    CHECK_THROWS_AS(simple_hunt(6, {testutil::regular_cyclic(5)}), degree_mismatch_error);
}
