#include "loops/transforms.hpp"

#include <algorithm>

#include "loops/analysis.hpp"
#include "loops/properties.hpp"

namespace loops {

namespace {

void assert_powers_coincide(const LoopTable& a, const LoopTable& b) {
    for (int x = 1; x <= a.order(); ++x)
        for (int k = 0; k <= a.order(); ++k)
            if (a.power(x, k) != b.power(x, k))
                throw internal_error("powers changed under the associated operation");
}

std::vector<int> sqrt_or_throw(const LoopTable& q) {
    auto tbl = q.sqrt_table();
    if (!tbl) throw not_uniquely_2_divisible_error("loop is not uniquely 2-divisible");
    return *tbl;
}

// Shared tail of the three Bruck-loop constructions: x o y = sqrt of a
// term computed per variant, followed by the verification that the result
// is a left Bruck loop with unchanged powers.
LoopTable finish_bruck(const LoopTable& q, const std::vector<std::vector<int>>& rows,
                       const char* tag) {
    LoopTable b = LoopTable::from_rows(rows, q.label().empty() ? "" : q.label() + tag);
    if (!has_property(b, PropertyId::left_bruck))
        throw internal_error("associated operation is not a left Bruck loop");
    assert_powers_coincide(q, b);
    return b;
}

} // namespace

LoopTable bruck_from_bol(const LoopTable& q) {
    if (!has_property(q, PropertyId::left_bol))
        throw precondition_error("input is not a left Bol loop");
    auto root = sqrt_or_throw(q);
    const int n = q.order();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            int t = q.mul(x, q.mul(q.mul(y, y), x)); // x(y^2 x)
            rows[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1] =
                root[static_cast<std::size_t>(t)];
        }
    return finish_bruck(q, rows, "|bruck");
}

namespace {

LoopTable associated_bruck_of(const LoopTable& q) {
    auto root = sqrt_or_throw(q);
    const int n = q.order();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 1; x <= n; ++x) {
        int xi = q.inverse(x);
        for (int y = 1; y <= n; ++y) {
            int t = q.mul(q.ldiv(xi, q.mul(y, y)), x); // (x^-1 \ y^2) x
            // The flattened reading x^-1 \ (y^2 x) must agree.
            if (t != q.ldiv(xi, q.mul(q.mul(y, y), x)))
                throw internal_error("the two readings of the Bruck operation disagree");
            rows[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1] =
                root[static_cast<std::size_t>(t)];
        }
    }
    return finish_bruck(q, rows, "|bruck");
}

} // namespace

LoopTable bruck_from_automorphic(const LoopTable& q) {
    if (!automorphic_class(q).full)
        throw precondition_error("input is not an automorphic loop");
    LoopTable b = associated_bruck_of(q);

    // Subloop preservation: S closed in (Q,.) stays closed under o, which
    // for 2-generated subloops amounts to x o y landing in <x,y>.
    for (int x = 1; x <= q.order(); ++x)
        for (int y = x; y <= q.order(); ++y) {
            ElementSet seed(q.order());
            seed.insert(x);
            seed.insert(y);
            ElementSet sub = q.subloop_generated(seed);
            if (!sub.contains(b.mul(x, y)) || !sub.contains(b.mul(y, x)))
                throw internal_error("a subloop of the input is not closed under o");
        }
    return b;
}

LoopTable bruck_from_gamma(const LoopTable& q) {
    if (!has_property(q, PropertyId::gamma))
        throw precondition_error("input is not a Gamma loop");
    return associated_bruck_of(q);
}

LoopTable gamma_from_bruck(const LoopTable& q, std::size_t cap) {
    if (!has_property(q, PropertyId::left_bruck))
        throw precondition_error("input is not a left Bruck loop");
    if (q.order() % 2 == 0)
        throw even_order_error("the Gamma transform needs odd order");
    PermGroup g = lmlt(q, cap);
    if (g.order() % 2 == 0)
        throw internal_error("left multiplication group of an odd-order Bruck loop has even order");

    const int n = q.order();
    std::vector<Perm> l(static_cast<std::size_t>(n) + 1, Perm(n));
    for (int x = 1; x <= n; ++x) l[static_cast<std::size_t>(x)] = q.left_translation(x);

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            const Perm& lx = l[static_cast<std::size_t>(x)];
            const Perm& ly = l[static_cast<std::size_t>(y)];
            Perm comm = ly.inverse() * lx.inverse() * ly * lx; // [L_y, L_x]
            Perm half = group_sqrt(g, comm);
            rows[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1] =
                lx(ly(half(1)));
        }
    LoopTable out = LoopTable::from_rows(rows, q.label().empty() ? "" : q.label() + "|gamma");
    if (!has_property(out, PropertyId::gamma))
        throw internal_error("Gamma transform did not produce a Gamma loop");
    assert_powers_coincide(q, out);
    return out;
}

Algebra lie_from_automorphic(const LoopTable& q) {
    LoopTable b = bruck_from_automorphic(q);
    if (!has_property(b, PropertyId::associative) ||
        !has_property(b, PropertyId::commutative))
        throw precondition_error("associated left Bruck loop is not an abelian group");

    const int n = q.order();
    std::vector<std::vector<int>> bracket(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            bracket[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1] =
                b.mul(b.mul(x, y), q.inverse(q.mul(x, y))); // x o y o (xy)^-1

    Algebra a(b, std::move(bracket), q.label().empty() ? "" : q.label() + "|lie");
    AlgebraChecks c = algebra_checks(a);
    if (!c.lie_ring() || !c.wright1 || !c.wright2)
        throw internal_error("bracket of an eligible automorphic loop is not a Lie ring");
    return a;
}

LoopTable linear_loop(const Algebra& a) {
    const int n = a.order();
    // Both translation-shape maps must biject for x + y - [x,y] to be a loop.
    std::vector<char> hit(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) {
        std::fill(hit.begin(), hit.end(), 0);
        for (int y = 1; y <= n; ++y) hit[static_cast<std::size_t>(a.sub(y, a.bracket(x, y)))] = 1;
        for (int v = 1; v <= n; ++v)
            if (!hit[static_cast<std::size_t>(v)]) throw wright1_error(x);
        std::fill(hit.begin(), hit.end(), 0);
        for (int y = 1; y <= n; ++y) hit[static_cast<std::size_t>(a.sub(y, a.bracket(y, x)))] = 1;
        for (int v = 1; v <= n; ++v)
            if (!hit[static_cast<std::size_t>(v)]) throw wright1_error(x);
    }

    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            rows[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1] =
                a.sub(a.add(x, y), a.bracket(x, y));
    LoopTable out = LoopTable::from_rows(rows, a.label().empty() ? "" : a.label() + "|loop");

    AlgebraChecks c = algebra_checks(a);
    if (c.lie_ring() && c.wright2 && !automorphic_class(out).full)
        throw internal_error("linear loop of an eligible Lie ring is not automorphic");
    return out;
}

} // namespace loops
