#include "loops/algebra.hpp"

#include <algorithm>

namespace loops {

Algebra::Algebra(LoopTable add, std::vector<std::vector<int>> bracket, std::string label)
    : add_(std::move(add)), bracket_(std::move(bracket)), label_(std::move(label)) {
    const int n = add_.order();
    if (static_cast<int>(bracket_.size()) != n)
        throw validation_error("bracket table size does not match the addition table");
    for (const auto& row : bracket_) {
        if (static_cast<int>(row.size()) != n)
            throw validation_error("bracket table is not square");
        for (int v : row)
            if (v < 1 || v > n) throw validation_error("bracket entry out of range");
    }
}

AlgebraChecks algebra_checks(const Algebra& a) {
    const int n = a.order();
    AlgebraChecks c;

    c.abelian_add = true;
    for (int x = 1; x <= n && c.abelian_add; ++x)
        for (int y = 1; y <= n && c.abelian_add; ++y) {
            if (a.add(x, y) != a.add(y, x)) c.abelian_add = false;
            for (int z = 1; z <= n; ++z)
                if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z))) {
                    c.abelian_add = false;
                    break;
                }
        }

    c.biadditive = true;
    for (int x = 1; x <= n && c.biadditive; ++x)
        for (int y = 1; y <= n && c.biadditive; ++y)
            for (int z = 1; z <= n; ++z) {
                if (a.bracket(a.add(x, y), z) != a.add(a.bracket(x, z), a.bracket(y, z)) ||
                    a.bracket(x, a.add(y, z)) != a.add(a.bracket(x, y), a.bracket(x, z))) {
                    c.biadditive = false;
                    break;
                }
            }

    c.alternating = true;
    for (int x = 1; x <= n; ++x)
        if (a.bracket(x, x) != a.zero()) {
            c.alternating = false;
            break;
        }

    c.jacobi = true;
    for (int x = 1; x <= n && c.jacobi; ++x)
        for (int y = 1; y <= n && c.jacobi; ++y)
            for (int z = 1; z <= n; ++z) {
                int s = a.add(a.bracket(x, a.bracket(y, z)),
                              a.add(a.bracket(y, a.bracket(z, x)),
                                    a.bracket(z, a.bracket(x, y))));
                if (s != a.zero()) {
                    c.jacobi = false;
                    break;
                }
            }

    c.wright1 = true;
    {
        std::vector<char> hit(static_cast<std::size_t>(n) + 1);
        for (int x = 1; x <= n && c.wright1; ++x) {
            std::fill(hit.begin(), hit.end(), 0);
            for (int y = 1; y <= n; ++y) hit[static_cast<std::size_t>(a.sub(y, a.bracket(x, y)))] = 1;
            for (int v = 1; v <= n; ++v)
                if (!hit[static_cast<std::size_t>(v)]) {
                    c.wright1 = false;
                    break;
                }
            if (!c.wright1) break;
            std::fill(hit.begin(), hit.end(), 0);
            for (int y = 1; y <= n; ++y) hit[static_cast<std::size_t>(a.sub(y, a.bracket(y, x)))] = 1;
            for (int v = 1; v <= n; ++v)
                if (!hit[static_cast<std::size_t>(v)]) {
                    c.wright1 = false;
                    break;
                }
        }
    }

    // [[x,Q],[x,Q]] = 0 reduces to brackets of generators by biadditivity.
    c.wright2 = true;
    for (int x = 1; x <= n && c.wright2; ++x)
        for (int y = 1; y <= n && c.wright2; ++y) {
            int xy = a.bracket(x, y);
            for (int z = 1; z <= n; ++z)
                if (a.bracket(xy, a.bracket(x, z)) != a.zero()) {
                    c.wright2 = false;
                    break;
                }
        }

    c.solvable_length_2 = true;
    for (int x = 1; x <= n && c.solvable_length_2; ++x)
        for (int y = 1; y <= n && c.solvable_length_2; ++y) {
            int xy = a.bracket(x, y);
            for (int u = 1; u <= n && c.solvable_length_2; ++u)
                for (int v = 1; v <= n; ++v)
                    if (a.bracket(xy, a.bracket(u, v)) != a.zero()) {
                        c.solvable_length_2 = false;
                        break;
                    }
        }

    return c;
}

} // namespace loops
