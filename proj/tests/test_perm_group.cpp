#include "doctest.h"

#include <algorithm>

#include "loops/analysis.hpp"
#include "loops/constructions.hpp"
#include "loops/perm_group.hpp"
#include "loops/transforms.hpp"

#include "test_util.hpp"

using namespace loops;
using testutil::q6;

namespace {

Perm cycle(int degree, std::vector<int> pts) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 1; i <= degree; ++i) img[static_cast<std::size_t>(i) - 1] = i;
    for (std::size_t i = 0; i < pts.size(); ++i)
        img[static_cast<std::size_t>(pts[i]) - 1] = pts[(i + 1) % pts.size()];
    return Perm::from_images(img);
}

PermGroup sym(int n, std::size_t cap = default_group_cap) {
    std::vector<int> long_cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) long_cycle[static_cast<std::size_t>(i)] = i + 1;
    return PermGroup::closure({cycle(n, {1, 2}), cycle(n, long_cycle)}, cap);
}

PermGroup alt(int n, std::size_t cap = default_group_cap) {
    std::vector<Perm> gens{cycle(n, {1, 2, 3})};
    if (n % 2 == 1) {
        std::vector<int> long_cycle(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) long_cycle[static_cast<std::size_t>(i)] = i + 1;
        gens.push_back(cycle(n, long_cycle));
    } else {
        std::vector<int> c(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i) c[static_cast<std::size_t>(i)] = i + 2;
        gens.push_back(cycle(n, c));
    }
    return PermGroup::closure(gens, cap);
}

} // namespace

TEST_CASE("permutation basics") {
    Perm p = Perm::from_images({2, 3, 1});
    CHECK(p.order() == 3);
    CHECK(p.inverse() * p == Perm(3));
    CHECK((p * p * p).is_identity());
    CHECK(p.pow(2) == p * p);
    CHECK_THROWS_AS(Perm::from_images({1, 1, 3}), validation_error);

    CHECK(is_fixed_point_free(Perm::from_images({2, 1, 4, 3})));
    CHECK_FALSE(is_fixed_point_free(Perm(4)));
}

TEST_CASE("closure") {
    PermGroup g3 = PermGroup::closure({cycle(3, {1, 2, 3})}, 100);
    CHECK(g3.order() == 3);

    PermGroup triv = PermGroup::closure({}, 10, 5);
    CHECK(triv.order() == 1);
    CHECK(triv.degree() == 5);

    CHECK(sym(4).order() == 24);
    CHECK(alt(4).order() == 12);
    CHECK(alt(5).order() == 60);
    CHECK_THROWS_AS(sym(6, 100), cap_exceeded_error);

    // Closure is closed: products and inverses of members are members.
    PermGroup g = sym(4);
    for (std::size_t i = 0; i < g.order(); i += 5)
        for (std::size_t j = 1; j < g.order(); j += 7) {
            CHECK(g.contains(g.elements()[i] * g.elements()[j]));
            CHECK(g.contains(g.elements()[i].inverse()));
        }
}

TEST_CASE("orbit and stabilizer") {
    PermGroup g3 = PermGroup::closure({cycle(3, {1, 2, 3})}, 100);
    CHECK(stabilizer(g3, 1).order() == 1);

    PermGroup s3 = sym(3);
    CHECK(orbit(s3, 1) == std::vector<int>{1, 2, 3});

    // Orbit-stabilizer over several groups and points.
    for (const PermGroup& g : {sym(4), alt(5), mlt(q6())})
        for (int pt = 1; pt <= g.degree(); ++pt)
            CHECK(orbit(g, pt).size() * stabilizer(g, pt).order() == g.order());

    // Inn(Q6) both ways: stabilizer of 1 in Mlt vs closure of the inner
    // generator family.
    PermGroup inner = inn(q6());
    PermGroup inner2 = inn_from_generators(q6());
    CHECK(inner.order() == inner2.order());
    CHECK(inner.is_subgroup_of(inner2));
    CHECK(inner2.is_subgroup_of(inner));
}

TEST_CASE("transitivity") {
    CHECK(is_transitive(sym(4), 4));
    CHECK_FALSE(is_transitive(PermGroup::closure({cycle(4, {1, 2, 3, 4})}, 100), 2));
    CHECK(is_transitive(alt(4), 2));
    CHECK(is_transitive(alt(6), 4));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(sym(4)));
    CHECK_FALSE(is_primitive(PermGroup::closure({cycle(4, {1, 2, 3, 4})}, 100)));
    // Regular representation of Z6 preserves coset blocks.
    CHECK_FALSE(is_primitive(mlt(cyclic(6))));
    CHECK(is_primitive(mlt(cyclic(5))));
    // Intransitive input is rejected.
    PermGroup fix = PermGroup::closure({cycle(4, {1, 2})}, 100);
    CHECK_THROWS_AS(is_primitive(fix), not_transitive_error);
    // 2-transitive implies primitive on the corpus of small groups.
    for (auto g : {alt(4), alt(5), sym(5)}) {
        if (is_transitive(g, 2)) CHECK(is_primitive(g));
    }
}

TEST_CASE("solvability of groups") {
    CHECK(is_solvable_group(sym(3)));
    CHECK(is_solvable_group(sym(4)));
    CHECK_FALSE(is_solvable_group(alt(5)));
    CHECK_FALSE(is_solvable_group(sym(5)));
    CHECK(is_solvable_group(PermGroup::closure({}, 10, 3)));
    CHECK(is_solvable_group(mlt(q6())));
}

TEST_CASE("conjugacy classes") {
    PermGroup triv = PermGroup::closure({}, 10, 3);
    Perm g = cycle(3, {1, 2});
    CHECK(conj_class(triv, g) == std::vector<Perm>{g});

    auto transpositions = conj_class(sym(3), cycle(3, {1, 2}));
    CHECK(transpositions.size() == 3);

    // Class size divides the group order.
    PermGroup s4 = sym(4);
    for (std::size_t i = 0; i < s4.order(); i += 3)
        CHECK(s4.order() % conj_class(s4, s4.elements()[i]).size() == 0);

    // In an automorphic loop, conjugating L_x by inner mappings lands on
    // L over the orbit of x, so the class size equals the orbit size.
    PermGroup inner = inn(q6());
    auto cls = conj_class(inner, q6().left_translation(2));
    CHECK(cls.size() == orbit(inner, 2).size());
}

TEST_CASE("centralizer") {
    PermGroup s3 = sym(3);
    CHECK(centralizer(s3, {}).order() == 6);
    PermGroup c = centralizer(s3, {cycle(3, {1, 2, 3})});
    CHECK(c.order() == 3);
    CHECK(c.contains(cycle(3, {1, 2, 3})));
}

TEST_CASE("twisted subgroups") {
    PermGroup s3 = sym(3);
    CHECK(is_twisted_subgroup(s3, s3.elements()));

    // The left translations of a group form a twisted subgroup of LMlt.
    LoopTable g21 = testutil::metacyclic21();
    PermGroup lm = lmlt(g21);
    std::vector<Perm> lq;
    for (int x = 1; x <= g21.order(); ++x) lq.push_back(g21.left_translation(x));
    CHECK(is_twisted_subgroup(lm, lq));

    // Not closed under inverses: the identity plus a single 3-cycle.
    std::vector<Perm> bad{Perm(3), cycle(3, {1, 2, 3})};
    CHECK_FALSE(is_twisted_subgroup(s3, bad));
}

TEST_CASE("k_tau fixed sets") {
    PermGroup s3 = sym(3);
    auto k = k_tau(s3, Perm(3)); // identity tau: involutions plus identity
    CHECK(k.size() == 4);
    CHECK(is_twisted_subgroup(s3, k));

    // Abelian group of odd order, identity tau: only the identity inverts
    // to itself.
    PermGroup z5 = mlt(cyclic(5));
    auto k5 = k_tau(z5, Perm(5));
    CHECK(k5.size() == 1);

    // Conjugation must preserve the group.
    PermGroup z4 = PermGroup::closure({cycle(4, {1, 2, 3, 4})}, 100);
    CHECK_THROWS_AS(k_tau(z4, cycle(4, {1, 2})), not_an_automorphism_error);

    // k_tau output is always a twisted subgroup.
    PermGroup s4 = sym(4);
    for (const Perm& t : {Perm(4), cycle(4, {1, 2}), cycle(4, {1, 2, 3, 4})})
        CHECK(is_twisted_subgroup(s4, k_tau(s4, t)));
}

TEST_CASE("k_tau on a Bruck loop's left multiplication group") {
    // For an odd-order left Bruck loop, conjugation by the inversion map
    // sends each left translation to its inverse, so the translations sit
    // inside the fixed set of that conjugation.
    LoopTable b = bruck_from_automorphic(q_ab(3, 0, 0));
    PermGroup g = lmlt(b);
    std::vector<int> inv_img(static_cast<std::size_t>(b.order()));
    for (int x = 1; x <= b.order(); ++x)
        inv_img[static_cast<std::size_t>(x) - 1] = b.inverse(x);
    Perm j = Perm::from_images(inv_img);
    auto k = k_tau(g, j);
    std::unordered_set<Perm, PermHash> kset(k.begin(), k.end());
    for (int x = 1; x <= b.order(); ++x) CHECK(kset.count(b.left_translation(x)) == 1);
    CHECK(is_twisted_subgroup(g, k));
}

TEST_CASE("group square roots") {
    PermGroup s5 = sym(5);
    CHECK(group_sqrt(s5, Perm(5)) == Perm(5));

    Perm c3 = cycle(5, {1, 2, 3});
    Perm r = group_sqrt(s5, c3);
    CHECK(r * r == c3);
    CHECK(r == c3.pow(2));

    Perm c5 = cycle(5, {1, 2, 3, 4, 5});
    CHECK(group_sqrt(s5, c5) == c5.pow(3));
    CHECK(group_sqrt(s5, c5) * group_sqrt(s5, c5) == c5);

    CHECK_THROWS_AS(group_sqrt(s5, cycle(5, {1, 2})), even_order_error);

    // sqrt(g)^2 == g for every odd-order element of a sample group.
    PermGroup a5 = alt(5);
    for (const Perm& g : a5.elements())
        if (g.order() % 2 == 1) {
            Perm s = group_sqrt(a5, g);
            CHECK(s * s == g);
        }
}
