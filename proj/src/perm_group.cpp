#include "loops/perm_group.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace loops {

PermGroup PermGroup::closure(const std::vector<Perm>& gens, std::size_t cap,
                             int degree_if_empty) {
    PermGroup g;
    if (gens.empty()) {
        g.degree_ = degree_if_empty;
        g.elements_.push_back(Perm(degree_if_empty));
        g.set_.insert(g.elements_.front());
        return g;
    }
    g.degree_ = gens.front().degree();
    for (const Perm& p : gens)
        if (p.degree() != g.degree_)
            throw validation_error("generators have mixed degrees");
    g.gens_ = gens;

    g.elements_.push_back(Perm(g.degree_));
    g.set_.insert(g.elements_.front());
    // In a finite group the subsemigroup generated by a set containing the
    // identity is already the subgroup, so right-multiplying by generators
    // suffices.
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        for (const Perm& gen : g.gens_) {
            Perm next = g.elements_[i] * gen;
            if (g.set_.insert(next).second) {
                g.elements_.push_back(std::move(next));
                if (g.elements_.size() > cap) throw cap_exceeded_error(cap);
            }
        }
    }
    return g;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elems) {
    PermGroup g;
    if (elems.empty()) throw validation_error("element set must contain the identity");
    g.degree_ = elems.front().degree();
    g.set_.insert(elems.begin(), elems.end());
    // Keep identity first, remaining elements in the given order.
    Perm id(g.degree_);
    g.elements_.push_back(id);
    for (Perm& p : elems)
        if (!p.is_identity()) g.elements_.push_back(std::move(p));
    if (g.set_.count(id) == 0) throw validation_error("element set must contain the identity");
    g.gens_ = g.elements_;
    return g;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    for (const Perm& p : elements_)
        if (!other.contains(p)) return false;
    return true;
}

PermGroup stabilizer(const PermGroup& g, int pt) {
    std::vector<Perm> fixed;
    for (const Perm& p : g.elements())
        if (p(pt) == pt) fixed.push_back(p);
    return PermGroup::from_elements(std::move(fixed));
}

std::vector<int> orbit(const PermGroup& g, int pt) {
    std::vector<char> seen(static_cast<std::size_t>(g.degree()) + 1, 0);
    std::vector<int> out;
    std::vector<int> stack{pt};
    seen[static_cast<std::size_t>(pt)] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (const Perm& gen : g.generators()) {
            int y = gen(x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_transitive(const PermGroup& g, int k) {
    const int d = g.degree();
    if (k < 1 || k > 4) throw validation_error("k-transitivity supported for 1 <= k <= 4");
    if (k > d) throw validation_error("k exceeds the degree");

    // Orbit of the base tuple (1,...,k) under the generators; transitive on
    // k-tuples iff this single orbit has size d(d-1)...(d-k+1).
    std::uint64_t target = 1;
    for (int i = 0; i < k; ++i) target *= static_cast<std::uint64_t>(d - i);

    auto encode = [&](const std::array<int, 4>& t) {
        std::uint64_t code = 0;
        for (int i = 0; i < k; ++i)
            code = code * static_cast<std::uint64_t>(d + 1) + static_cast<std::uint64_t>(t[static_cast<std::size_t>(i)]);
        return code;
    };

    std::array<int, 4> base{};
    for (int i = 0; i < k; ++i) base[static_cast<std::size_t>(i)] = i + 1;

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::array<int, 4>> stack{base};
    seen.insert(encode(base));
    while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        for (const Perm& gen : g.generators()) {
            std::array<int, 4> u{};
            for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = gen(t[static_cast<std::size_t>(i)]);
            if (seen.insert(encode(u)).second) {
                if (seen.size() == target) return true;
                stack.push_back(u);
            }
        }
    }
    return seen.size() == target;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // Returns true when two distinct classes were merged.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace

bool is_primitive(const PermGroup& g) {
    if (!is_transitive(g, 1)) throw not_transitive_error("group is not transitive");
    const int d = g.degree();
    if (d <= 2) return true;

    for (int beta = 2; beta <= d; ++beta) {
        // Finest g-invariant partition in which 1 and beta share a block.
        UnionFind uf(d);
        std::queue<std::pair<int, int>> merged;
        uf.unite(1, beta);
        merged.emplace(1, beta);
        while (!merged.empty()) {
            auto [a, b] = merged.front();
            merged.pop();
            for (const Perm& gen : g.generators()) {
                int ga = gen(a), gb = gen(b);
                if (uf.unite(ga, gb)) merged.emplace(ga, gb);
            }
        }
        int block_size = 0;
        int root = uf.find(1);
        for (int x = 1; x <= d; ++x)
            if (uf.find(x) == root) ++block_size;
        if (block_size < d) return false; // proper nontrivial block system
    }
    return true;
}

PermGroup derived_subgroup(const PermGroup& g, std::size_t cap) {
    std::unordered_set<Perm, PermHash> seed;
    for (const Perm& a : g.generators())
        for (const Perm& b : g.generators()) {
            Perm c = a.inverse() * b.inverse() * a * b;
            if (!c.is_identity()) seed.insert(std::move(c));
        }
    std::vector<Perm> gens(seed.begin(), seed.end());
    std::sort(gens.begin(), gens.end());
    PermGroup h = PermGroup::closure(gens, cap, g.degree());

    // Normal closure: conjugating the generating set by the generators of g
    // must stay inside; extend and re-materialize until stable.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Perm& c : g.generators()) {
            Perm ci = c.inverse();
            for (std::size_t i = 0, m = gens.size(); i < m; ++i) {
                Perm x = c * gens[i] * ci;
                if (!h.contains(x)) {
                    gens.push_back(std::move(x));
                    grew = true;
                }
            }
        }
        if (grew) h = PermGroup::closure(gens, cap, g.degree());
    }
    return h;
}

bool is_solvable_group(const PermGroup& g, std::size_t cap) {
    PermGroup current = g;
    while (current.order() > 1) {
        PermGroup next = derived_subgroup(current, cap);
        if (next.order() == current.order()) return false; // perfect, nontrivial
        current = std::move(next);
    }
    return true;
}

std::vector<Perm> conj_class(const PermGroup& group, const Perm& g) {
    if (g.degree() != group.degree())
        throw degree_mismatch_error("conjugating element has wrong degree");
    std::unordered_set<Perm, PermHash> out;
    for (const Perm& h : group.elements()) out.insert(h * g * h.inverse());
    std::vector<Perm> v(out.begin(), out.end());
    std::sort(v.begin(), v.end());
    return v;
}

PermGroup centralizer(const PermGroup& g, const std::vector<Perm>& s) {
    std::vector<Perm> out;
    for (const Perm& e : g.elements()) {
        bool commutes = true;
        for (const Perm& x : s)
            if (!(e * x == x * e)) {
                commutes = false;
                break;
            }
        if (commutes) out.push_back(e);
    }
    return PermGroup::from_elements(std::move(out));
}

bool is_twisted_subgroup(const PermGroup& ambient, const std::vector<Perm>& s) {
    std::unordered_set<Perm, PermHash> set(s.begin(), s.end());
    for (const Perm& x : s)
        if (!ambient.contains(x))
            throw validation_error("subset is not contained in the ambient group");
    if (set.count(Perm(ambient.degree())) == 0) return false;
    for (const Perm& x : s)
        if (set.count(x.inverse()) == 0) return false;
    for (const Perm& x : s)
        for (const Perm& y : s)
            if (set.count(x * y * x) == 0) return false;
    return true;
}

std::vector<Perm> k_tau(const PermGroup& g, const Perm& t) {
    Perm ti = t.inverse();
    for (const Perm& gen : g.generators())
        if (!g.contains(t * gen * ti))
            throw not_an_automorphism_error("conjugation does not preserve the group");
    std::vector<Perm> out;
    for (const Perm& x : g.elements())
        if (t * x * ti == x.inverse()) out.push_back(x);
    return out;
}

Perm group_sqrt(const PermGroup& group, const Perm& g) {
    if (!group.contains(g))
        throw validation_error("element does not belong to the group");
    long long m = g.order();
    if (m % 2 == 0) throw even_order_error("element has even order " + std::to_string(m));
    return g.pow((m + 1) / 2);
}

} // namespace loops
