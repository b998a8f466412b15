#include "loops/analysis.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace loops {

namespace {

bool is_commutative_table(const LoopTable& q) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = x + 1; y <= q.order(); ++y)
            if (q.mul(x, y) != q.mul(y, x)) return false;
    return true;
}

bool is_associative_table(const LoopTable& q) {
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            for (int z = 1; z <= q.order(); ++z)
                if (q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z))) return false;
    return true;
}

} // namespace

int nominal_order(const LoopTable& q, int x) {
    int p = q.mul(x, 1);
    int k = 1;
    while (p != 1) {
        p = q.mul(x, p);
        ++k;
    }
    return k;
}

Perm InnerGenerators::left(int x, int y) const {
    const LoopTable& q = *q_;
    int yx = q.mul(y, x);
    std::vector<int> img(static_cast<std::size_t>(q.order()));
    for (int z = 1; z <= q.order(); ++z)
        img[static_cast<std::size_t>(z) - 1] = q.ldiv(yx, q.mul(y, q.mul(x, z)));
    return Perm::from_images(std::move(img));
}

Perm InnerGenerators::right(int x, int y) const {
    const LoopTable& q = *q_;
    int xy = q.mul(x, y);
    std::vector<int> img(static_cast<std::size_t>(q.order()));
    for (int z = 1; z <= q.order(); ++z)
        img[static_cast<std::size_t>(z) - 1] = q.rdiv(q.mul(q.mul(z, x), y), xy);
    return Perm::from_images(std::move(img));
}

Perm InnerGenerators::middle(int x) const {
    const LoopTable& q = *q_;
    std::vector<int> img(static_cast<std::size_t>(q.order()));
    for (int y = 1; y <= q.order(); ++y)
        img[static_cast<std::size_t>(y) - 1] = q.ldiv(x, q.mul(y, x));
    return Perm::from_images(std::move(img));
}

std::vector<Perm> InnerGenerators::all_distinct() const {
    const int n = q_->order();
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> out;
    auto add = [&](Perm p) {
        if (seen.insert(p).second) out.push_back(std::move(p));
    };
    for (int x = 1; x <= n; ++x) add(middle(x));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            add(left(x, y));
            add(right(x, y));
        }
    return out;
}

PermGroup mlt(const LoopTable& q, std::size_t cap) {
    std::vector<Perm> gens;
    gens.reserve(static_cast<std::size_t>(2 * q.order()));
    for (int x = 1; x <= q.order(); ++x) {
        gens.push_back(q.left_translation(x));
        gens.push_back(q.right_translation(x));
    }
    return PermGroup::closure(gens, cap, q.order());
}

PermGroup lmlt(const LoopTable& q, std::size_t cap) {
    std::vector<Perm> gens;
    gens.reserve(static_cast<std::size_t>(q.order()));
    for (int x = 1; x <= q.order(); ++x) gens.push_back(q.left_translation(x));
    return PermGroup::closure(gens, cap, q.order());
}

PermGroup inn(const LoopTable& q, std::size_t cap) { return stabilizer(mlt(q, cap), 1); }

PermGroup inn_from_generators(const LoopTable& q, std::size_t cap) {
    return PermGroup::closure(InnerGenerators(q).all_distinct(), cap, q.order());
}

bool is_automorphism(const LoopTable& q, const Perm& f) {
    if (f.degree() != q.order()) return false;
    if (f(1) != 1) return false;
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (f(q.mul(x, y)) != q.mul(f(x), f(y))) return false;
    return true;
}

AutomorphicFlags automorphic_class(const LoopTable& q) {
    const int n = q.order();
    InnerGenerators ig(q);

    // Deduplicate before testing; the number of distinct inner mappings is
    // usually far below n^2.
    auto family_ok = [&](auto&& produce) {
        std::unordered_set<Perm, PermHash> seen;
        return produce([&](Perm p) {
            if (!seen.insert(p).second) return true;
            return is_automorphism(q, p);
        });
    };

    AutomorphicFlags flags;
    flags.middle = family_ok([&](auto&& test) {
        for (int x = 1; x <= n; ++x)
            if (!test(ig.middle(x))) return false;
        return true;
    });
    flags.left = family_ok([&](auto&& test) {
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (!test(ig.left(x, y))) return false;
        return true;
    });
    flags.right = family_ok([&](auto&& test) {
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (!test(ig.right(x, y))) return false;
        return true;
    });
    flags.full = flags.left && flags.right && flags.middle;

    // Left+middle forces right and right+middle forces left; a mismatch
    // here means a bug in the checks above.
    if ((flags.left && flags.middle) != flags.full ||
        (flags.right && flags.middle) != flags.full)
        throw internal_error("automorphic axiom interdependence violated");
    return flags;
}

NucleiReport nuclei(const LoopTable& q) {
    const int n = q.order();
    NucleiReport rep;
    rep.n_left = ElementSet(n);
    rep.n_middle = ElementSet(n);
    rep.n_right = ElementSet(n);
    rep.nucleus = ElementSet(n);
    rep.center = ElementSet(n);

    for (int a = 1; a <= n; ++a) {
        bool nl = true, nm = true, nr = true;
        for (int x = 1; x <= n && (nl || nm || nr); ++x)
            for (int y = 1; y <= n && (nl || nm || nr); ++y) {
                if (nl && q.mul(a, q.mul(x, y)) != q.mul(q.mul(a, x), y)) nl = false;
                if (nm && q.mul(x, q.mul(a, y)) != q.mul(q.mul(x, a), y)) nm = false;
                if (nr && q.mul(x, q.mul(y, a)) != q.mul(q.mul(x, y), a)) nr = false;
            }
        if (nl) rep.n_left.insert(a);
        if (nm) rep.n_middle.insert(a);
        if (nr) rep.n_right.insert(a);
        if (nl && nm && nr) {
            rep.nucleus.insert(a);
            bool central = true;
            for (int x = 1; x <= n && central; ++x)
                if (q.mul(a, x) != q.mul(x, a)) central = false;
            if (central) rep.center.insert(a);
        }
    }

    rep.n_left_normal = is_normal(q, rep.n_left);
    rep.n_middle_normal = is_normal(q, rep.n_middle);
    rep.n_right_normal = is_normal(q, rep.n_right);
    rep.nucleus_normal = is_normal(q, rep.nucleus);
    rep.center_normal = is_normal(q, rep.center);
    return rep;
}

bool is_normal(const LoopTable& q, const ElementSet& s) {
    if (!q.is_subloop(s))
        throw not_a_subloop_error("normality is only defined for subloops");
    const int n = q.order();
    auto mem = s.members();
    // Invariance under the generators of Inn(Q); images are injective, so
    // containment suffices.
    for (int x = 1; x <= n; ++x)
        for (int m : mem)
            if (!s.contains(q.ldiv(x, q.mul(m, x)))) return false; // T_x
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            int yx = q.mul(y, x), xy = q.mul(x, y);
            for (int m : mem) {
                if (!s.contains(q.ldiv(yx, q.mul(y, q.mul(x, m))))) return false; // L_{x,y}
                if (!s.contains(q.rdiv(q.mul(q.mul(m, x), y), xy))) return false; // R_{x,y}
            }
        }
    return true;
}

ElementSet normal_closure(const LoopTable& q, const ElementSet& s) {
    const int n = q.order();
    ElementSet t = q.subloop_generated(s);
    bool grew = true;
    while (grew) {
        grew = false;
        ElementSet imgs(n);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                int yx = q.mul(y, x), xy = q.mul(x, y);
                for (int m : t.members()) {
                    imgs.insert(q.ldiv(yx, q.mul(y, q.mul(x, m))));
                    imgs.insert(q.rdiv(q.mul(q.mul(m, x), y), xy));
                    if (y == 1) imgs.insert(q.ldiv(x, q.mul(m, x)));
                }
            }
        for (int e : imgs.members())
            if (!t.contains(e)) {
                t.insert(e);
                grew = true;
            }
        if (grew) t = q.subloop_generated(t);
    }
    return t;
}

std::vector<int> coset_labels(const LoopTable& q, const ElementSet& n) {
    if (!is_normal(q, n)) throw not_normal_error("subloop is not normal");
    const int ord = q.order();
    auto mem = n.members();
    std::vector<int> label(static_cast<std::size_t>(ord) + 1, 0);
    int next = 0;
    for (int x = 1; x <= ord; ++x) {
        if (label[static_cast<std::size_t>(x)] != 0) continue;
        ++next;
        for (int s : mem) {
            int y = q.mul(x, s);
            if (label[static_cast<std::size_t>(y)] != 0)
                throw internal_error("cosets of a normal subloop failed to partition");
            label[static_cast<std::size_t>(y)] = next;
        }
    }
    return label;
}

LoopTable quotient(const LoopTable& q, const ElementSet& n) {
    auto label = coset_labels(q, n);
    const int ord = q.order();
    const int m = ord / n.size();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int x = 1; x <= ord; ++x)
        for (int y = 1; y <= ord; ++y) {
            int a = label[static_cast<std::size_t>(x)];
            int b = label[static_cast<std::size_t>(y)];
            int c = label[static_cast<std::size_t>(q.mul(x, y))];
            int& cell = rows[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1];
            if (cell == 0)
                cell = c;
            else if (cell != c)
                throw internal_error("coset product is ill-defined");
        }
    std::string lab = q.label().empty() ? "" : q.label() + "/N" + std::to_string(n.size());
    return LoopTable::from_rows(rows, lab);
}

int associator(const LoopTable& q, int x, int y, int z) {
    return q.ldiv(q.mul(x, q.mul(y, z)), q.mul(q.mul(x, y), z));
}

ElementSet derived_subloop(const LoopTable& q) {
    const int n = q.order();
    ElementSet seed(n);
    seed.insert(1);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            seed.insert(q.ldiv(q.mul(x, y), q.mul(y, x))); // commutator
            for (int z = 1; z <= n; ++z) seed.insert(associator(q, x, y, z));
        }
    ElementSet d = normal_closure(q, seed);
    LoopTable f = quotient(q, d);
    if (!is_associative_table(f) || !is_commutative_table(f))
        throw internal_error("factor by the derived subloop is not an abelian group");
    return d;
}

bool is_solvable_loop(const LoopTable& q) {
    LoopTable cur = q;
    while (cur.order() > 1) {
        ElementSet d = derived_subloop(cur);
        if (d.size() == cur.order()) return false;
        if (d.size() == 1) return true;
        cur = cur.restrict_to(d);
    }
    return true;
}

std::vector<ElementSet> upper_central_series(const LoopTable& q) {
    const int n = q.order();
    std::vector<ElementSet> series;
    ElementSet z(n);
    z.insert(1);
    series.push_back(z);
    while (z.size() < n) {
        auto label = coset_labels(q, z);
        LoopTable f = quotient(q, z);
        ElementSet fc = nuclei(f).center;
        ElementSet next(n);
        for (int x = 1; x <= n; ++x)
            if (fc.contains(label[static_cast<std::size_t>(x)])) next.insert(x);
        if (next == z) break; // series stalled below Q
        series.push_back(next);
        z = next;
    }
    return series;
}

std::optional<int> nilpotency_class(const LoopTable& q) {
    auto series = upper_central_series(q);
    if (series.back().size() != q.order()) return std::nullopt;
    return static_cast<int>(series.size()) - 1;
}

bool is_simple(const LoopTable& q, std::size_t cap) {
    const int n = q.order();
    if (n == 1) return false; // census convention
    bool simple = true;
    for (int x = 2; x <= n && simple; ++x) {
        ElementSet s(n);
        s.insert(x);
        if (normal_closure(q, s).size() != n) simple = false;
    }
    // Cross-check: a loop is simple iff Mlt acts primitively.
    try {
        PermGroup m = mlt(q, cap);
        if (is_primitive(m) != simple)
            throw internal_error("simplicity disagrees with primitivity of Mlt");
    } catch (const resource_error&) {
        // Mlt too large to materialize; skip the cross-check.
    }
    return simple;
}

bool is_autotopism(const LoopTable& q, const Perm& f, const Perm& g, const Perm& h) {
    if (f.degree() != q.order() || g.degree() != q.order() || h.degree() != q.order())
        return false;
    for (int x = 1; x <= q.order(); ++x)
        for (int y = 1; y <= q.order(); ++y)
            if (q.mul(f(x), g(y)) != h(q.mul(x, y))) return false;
    return true;
}

std::vector<int> pseudo_automorphism_companions(const LoopTable& q, const Perm& f) {
    std::vector<int> out;
    for (int c = 1; c <= q.order(); ++c) {
        bool ok = true;
        for (int x = 1; x <= q.order() && ok; ++x)
            for (int y = 1; y <= q.order() && ok; ++y)
                if (q.mul(f(x), q.mul(f(y), c)) != q.mul(f(q.mul(x, y)), c)) ok = false;
        if (ok) out.push_back(c);
    }
    return out;
}

std::vector<ElementSet> all_subloops(const LoopTable& q) {
    std::unordered_map<std::string, ElementSet> known;
    ElementSet triv(q.order());
    triv.insert(1);
    known.emplace(triv.key(), triv);
    std::vector<ElementSet> frontier{triv};
    while (!frontier.empty()) {
        std::vector<ElementSet> next;
        for (const ElementSet& s : frontier)
            for (int y = 1; y <= q.order(); ++y) {
                if (s.contains(y)) continue;
                ElementSet seed = s;
                seed.insert(y);
                ElementSet t = q.subloop_generated(seed);
                auto [it, inserted] = known.emplace(t.key(), t);
                if (inserted) next.push_back(t);
            }
        frontier = std::move(next);
    }
    std::vector<ElementSet> out;
    out.reserve(known.size());
    for (auto& [k, v] : known) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.key() < b.key();
    });
    return out;
}

std::string Fingerprint::to_string() const {
    std::string s = "n=" + std::to_string(order) + " profile=";
    for (std::size_t i = 0; i < order_profile.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(order_profile[i].first) + "^" +
             std::to_string(order_profile[i].second);
    }
    s += " nl=" + std::to_string(n_left) + " nm=" + std::to_string(n_middle) +
         " nr=" + std::to_string(n_right) + " z=" + std::to_string(center) +
         (commutative ? " comm" : "") + (associative ? " assoc" : "");
    return s;
}

Fingerprint fingerprint(const LoopTable& q) {
    Fingerprint fp;
    fp.order = q.order();
    std::map<int, int> profile;
    for (int x = 1; x <= q.order(); ++x) ++profile[nominal_order(q, x)];
    fp.order_profile.assign(profile.begin(), profile.end());
    NucleiReport rep = nuclei(q);
    fp.n_left = rep.n_left.size();
    fp.n_middle = rep.n_middle.size();
    fp.n_right = rep.n_right.size();
    fp.nucleus = rep.nucleus.size();
    fp.center = rep.center.size();
    fp.commutative = is_commutative_table(q);
    fp.associative = is_associative_table(q);
    return fp;
}

namespace {

// Per-element invariant preserved by isomorphisms: nominal order plus the
// cycle types of both translations.
std::vector<int> element_key(const LoopTable& q, int x) {
    std::vector<int> key{nominal_order(q, x), -1};
    auto lc = q.left_translation(x).cycle_lengths();
    std::sort(lc.begin(), lc.end());
    key.insert(key.end(), lc.begin(), lc.end());
    key.push_back(-1);
    auto rc = q.right_translation(x).cycle_lengths();
    std::sort(rc.begin(), rc.end());
    key.insert(key.end(), rc.begin(), rc.end());
    return key;
}

std::vector<int> greedy_generators(const LoopTable& q) {
    ElementSet s(q.order());
    s.insert(1);
    std::vector<int> gens;
    while (s.size() < q.order()) {
        int g = 0;
        for (int x = 2; x <= q.order(); ++x)
            if (!s.contains(x)) {
                g = x;
                break;
            }
        gens.push_back(g);
        ElementSet seed = s;
        seed.insert(g);
        s = q.subloop_generated(seed);
    }
    return gens;
}

// Backtracking search for bijective homomorphisms a -> b. Images of a
// greedy generating set are chosen one at a time; each choice is closed
// under products, which pins down the whole map and rejects conflicts
// early.
struct HomSearch {
    const LoopTable& a;
    const LoopTable& b;
    long long node_budget;
    bool collect_all;

    std::vector<int> gens;
    std::vector<std::vector<int>> cand; // candidate images per generator
    std::vector<int> img, pre;
    std::vector<int> defined; // elements of a with chosen images, in order
    long long nodes = 0;
    std::vector<Perm> found;

    HomSearch(const LoopTable& a, const LoopTable& b, long long budget, bool all)
        : a(a), b(b), node_budget(budget), collect_all(all) {
        const int n = a.order();
        img.assign(static_cast<std::size_t>(n) + 1, 0);
        pre.assign(static_cast<std::size_t>(n) + 1, 0);
        gens = greedy_generators(a);

        std::map<std::vector<int>, std::vector<int>> by_key;
        for (int y = 1; y <= n; ++y) by_key[element_key(b, y)].push_back(y);
        for (int g : gens) {
            auto it = by_key.find(element_key(a, g));
            cand.push_back(it == by_key.end() ? std::vector<int>{} : it->second);
        }
    }

    bool enforce(int s, int t) {
        int p = a.mul(s, t);
        int v = b.mul(img[static_cast<std::size_t>(s)], img[static_cast<std::size_t>(t)]);
        int& slot = img[static_cast<std::size_t>(p)];
        if (slot == 0) {
            if (pre[static_cast<std::size_t>(v)] != 0) return false;
            slot = v;
            pre[static_cast<std::size_t>(v)] = p;
            defined.push_back(p);
            return true;
        }
        return slot == v;
    }

    // Assign img[x] = y and close under products; on failure the caller
    // rolls back to the recorded mark.
    bool extend(int x, int y) {
        if (img[static_cast<std::size_t>(x)] != 0) return img[static_cast<std::size_t>(x)] == y;
        if (pre[static_cast<std::size_t>(y)] != 0) return false;
        img[static_cast<std::size_t>(x)] = y;
        pre[static_cast<std::size_t>(y)] = x;
        std::size_t qi = defined.size();
        defined.push_back(x);
        for (; qi < defined.size(); ++qi) {
            int u = defined[qi];
            for (std::size_t vj = 0; vj <= qi; ++vj) {
                int v = defined[vj];
                if (!enforce(u, v)) return false;
                if (u != v && !enforce(v, u)) return false;
            }
        }
        return true;
    }

    void rollback(std::size_t mark) {
        while (defined.size() > mark) {
            int x = defined.back();
            defined.pop_back();
            pre[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])] = 0;
            img[static_cast<std::size_t>(x)] = 0;
        }
    }

    // Returns true to stop the whole search (first solution found and we
    // only need one).
    bool assign(std::size_t gi) {
        if (gi == gens.size()) {
            if (static_cast<int>(defined.size()) != a.order())
                throw internal_error("generator closure did not cover the loop");
            std::vector<int> images(img.begin() + 1, img.end());
            found.push_back(Perm::from_images(std::move(images)));
            return !collect_all;
        }
        int g = gens[gi];
        if (img[static_cast<std::size_t>(g)] != 0) return assign(gi + 1);
        for (int y : cand[gi]) {
            if (pre[static_cast<std::size_t>(y)] != 0) continue;
            if (++nodes > node_budget)
                throw budget_exceeded_error("isomorphism search budget exhausted");
            std::size_t mark = defined.size();
            if (extend(g, y) && assign(gi + 1)) return true;
            rollback(mark);
        }
        return false;
    }

    void run() {
        if (!extend(1, 1)) return;
        assign(0);
    }
};

} // namespace

PermGroup automorphism_group(const LoopTable& q, long long node_budget) {
    HomSearch search(q, q, node_budget, /*collect_all=*/true);
    search.run();
    return PermGroup::from_elements(std::move(search.found));
}

std::optional<Perm> are_isomorphic(const LoopTable& a, const LoopTable& b,
                                   long long node_budget) {
    if (a.order() != b.order()) return std::nullopt;
    if (fingerprint(a) != fingerprint(b)) return std::nullopt;
    {
        std::vector<std::vector<int>> ka, kb;
        for (int x = 1; x <= a.order(); ++x) {
            ka.push_back(element_key(a, x));
            kb.push_back(element_key(b, x));
        }
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return std::nullopt;
    }
    HomSearch search(a, b, node_budget, /*collect_all=*/false);
    search.run();
    if (search.found.empty()) return std::nullopt;
    return search.found.front();
}

TorsionDecomposition decompose_torsion(const LoopTable& q) {
    if (!is_commutative_table(q) || !automorphic_class(q).full)
        throw precondition_error("torsion decomposition needs a commutative automorphic loop");
    const int n = q.order();
    TorsionDecomposition d{ElementSet(n), ElementSet(n)};
    for (int x = 1; x <= n; ++x) {
        int m = q.element_order(x);
        if ((m & (m - 1)) == 0)
            d.two_part.insert(x);
        if (m % 2 == 1) d.odd_part.insert(x);
    }
    if (!q.is_subloop(d.two_part) || !q.is_subloop(d.odd_part))
        throw internal_error("torsion parts are not subloops");
    int a = d.two_part.size();
    if ((a & (a - 1)) != 0) throw internal_error("2-part size is not a power of two");
    if (d.odd_part.size() % 2 == 0) throw internal_error("odd part has even size");
    LoopTable prod = direct_product(q.restrict_to(d.two_part), q.restrict_to(d.odd_part));
    if (!are_isomorphic(q, prod))
        throw internal_error("loop is not the product of its torsion parts");
    return d;
}

} // namespace loops
