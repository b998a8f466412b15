#include "loops/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_set>

namespace loops {

namespace {

struct NaiveState {
    int n;
    std::vector<std::vector<int>> rows;
    std::vector<std::uint32_t> row_used, col_used;
    const LoopFilter* filter;
    const std::function<void(const LoopTable&)>* visit;

    void fill(int r, int c) {
        if (r > n) {
            LoopTable t = LoopTable::from_rows(rows);
            if (!*filter || (*filter)(t)) (*visit)(t);
            return;
        }
        int nr = c == n ? r + 1 : r;
        int nc = c == n ? 2 : c + 1;
        std::uint32_t used = row_used[static_cast<std::size_t>(r)] |
                             col_used[static_cast<std::size_t>(c)];
        for (int v = 1; v <= n; ++v) {
            std::uint32_t bit = 1u << v;
            if (used & bit) continue;
            rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = v;
            row_used[static_cast<std::size_t>(r)] |= bit;
            col_used[static_cast<std::size_t>(c)] |= bit;
            fill(nr, nc);
            row_used[static_cast<std::size_t>(r)] &= ~bit;
            col_used[static_cast<std::size_t>(c)] &= ~bit;
        }
    }
};

} // namespace

void naive_enumerate_visit(int n, const LoopFilter& filter,
                           const std::function<void(const LoopTable&)>& visit, int bound) {
    if (n < 1) throw validation_error("order must be positive");
    if (n > bound)
        throw bound_exceeded_error("naive enumeration bound is " + std::to_string(bound));
    if (n > 31) throw bound_exceeded_error("naive enumeration uses 32-bit masks");

    NaiveState st;
    st.n = n;
    st.rows.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    // Identity row and column are forced.
    for (int c = 1; c <= n; ++c) st.rows[0][static_cast<std::size_t>(c) - 1] = c;
    for (int r = 1; r <= n; ++r) st.rows[static_cast<std::size_t>(r) - 1][0] = r;
    st.row_used.assign(static_cast<std::size_t>(n) + 1, 0);
    st.col_used.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) st.row_used[static_cast<std::size_t>(r)] = 1u << r;
    for (int c = 1; c <= n; ++c) st.col_used[static_cast<std::size_t>(c)] = 1u << c;
    st.filter = &filter;
    st.visit = &visit;

    if (n == 1) {
        LoopTable t = LoopTable::from_rows({{1}});
        if (!filter || filter(t)) visit(t);
        return;
    }
    st.fill(2, 2);
}

std::vector<LoopTable> naive_enumerate(int n, const LoopFilter& filter, int bound) {
    std::vector<LoopTable> out;
    naive_enumerate_visit(n, filter, [&](const LoopTable& t) { out.push_back(t); }, bound);
    return out;
}

long long naive_count(int n, int bound) {
    long long count = 0;
    naive_enumerate_visit(n, nullptr, [&](const LoopTable&) { ++count; }, bound);
    return count;
}

std::vector<Perm> translation_candidates(const PermGroup& g, const PermGroup& h, int x) {
    PermGroup hx = stabilizer(h, x);
    std::vector<Perm> out;
    for (const Perm& p : g.elements()) {
        if (p(1) != x || !is_fixed_point_free(p)) continue;
        bool central = true;
        for (const Perm& s : hx.elements())
            if (!(p * s == s * p)) {
                central = false;
                break;
            }
        if (central) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> translation_candidates_fast(const PermGroup& g, const PermGroup& h, int x) {
    PermGroup hx = stabilizer(h, x);
    // One qualifying translation, found by scanning g.
    Perm seed;
    bool found = false;
    for (const Perm& p : g.elements()) {
        if (p(1) != x || !is_fixed_point_free(p)) continue;
        bool central = true;
        for (const Perm& s : hx.elements())
            if (!(p * s == s * p)) {
                central = false;
                break;
            }
        if (central) {
            seed = p;
            found = true;
            break;
        }
    }
    if (!found) return {};
    // All further candidates are seed * c with c a centralizer element
    // fixing 1, refiltered for fixed-point-freeness.
    PermGroup cg = centralizer(g, hx.elements());
    std::vector<Perm> out;
    for (const Perm& c : cg.elements()) {
        if (c(1) != 1) continue;
        Perm p = seed * c;
        if (is_fixed_point_free(p)) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TranslationClass> translation_classes(const PermGroup& h,
                                                  const std::vector<Perm>& candidates, int x) {
    const std::size_t orbit_size = orbit(h, x).size();
    std::vector<TranslationClass> out;
    std::unordered_set<Perm, PermHash> classed; // candidates already in an accepted class
    std::unordered_set<Perm, PermHash> rejected;

    for (const Perm& cand : candidates) {
        if (classed.count(cand) || rejected.count(cand)) continue;
        std::vector<Perm> cls = conj_class(h, cand);
        if (cls.size() != orbit_size) {
            for (const Perm& m : cls) rejected.insert(m);
            continue;
        }
        // Quotients against the base must be fixed-point free; by
        // conjugation this extends to every pair inside the class.
        Perm inv = cand.inverse();
        bool ok = true;
        for (const Perm& m : cls) {
            if (m == cand) continue;
            if (!is_fixed_point_free(inv * m)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            for (const Perm& m : cls) rejected.insert(m);
            continue;
        }
        for (const Perm& m : cls) classed.insert(m);
        TranslationClass tc;
        tc.base = cand;
        tc.members = std::move(cls);
        tc.anchor = x;
        out.push_back(std::move(tc));
    }
    return out;
}

CompatibilityGraph build_compatibility_graph(const PermGroup& g, const PermGroup& h) {
    if (!is_transitive(g, 1)) throw not_transitive_error("the ambient group must be transitive");
    for (const Perm& p : h.elements())
        if (p(1) != 1 || !g.contains(p))
            throw precondition_error("H must be a subgroup of the stabilizer of 1 in G");

    // Orbit representatives of h on points 2..d, in ascending order.
    const int d = g.degree();
    std::vector<char> covered(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> reps;
    for (int x = 2; x <= d; ++x) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        reps.push_back(x);
        for (int y : orbit(h, x)) covered[static_cast<std::size_t>(y)] = 1;
    }

    CompatibilityGraph graph;
    for (int x : reps) {
        auto classes = translation_classes(h, translation_candidates(g, h, x), x);
        for (auto& c : classes) graph.vertices.push_back(std::move(c));
    }

    const std::size_t m = graph.vertices.size();
    graph.adjacent.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            // One-sided check: base of one class against all members of the
            // other; conjugation covers the remaining pairs.
            Perm inv = graph.vertices[i].base.inverse();
            bool compatible = true;
            for (const Perm& mem : graph.vertices[j].members)
                if (!is_fixed_point_free(inv * mem)) {
                    compatible = false;
                    break;
                }
            graph.adjacent[i][j] = graph.adjacent[j][i] = compatible ? 1 : 0;
        }
    return graph;
}

namespace {

void clique_extend(const CompatibilityGraph& graph, const std::vector<int>& order,
                   std::size_t from, int remaining, std::vector<int>& current,
                   std::vector<char>& allowed, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    // Weight still reachable from the candidates at or after `from`.
    int reachable = 0;
    for (std::size_t k = from; k < order.size(); ++k)
        if (allowed[static_cast<std::size_t>(order[k])])
            reachable += graph.vertices[static_cast<std::size_t>(order[k])].weight();
    if (reachable < remaining) return;

    for (std::size_t k = from; k < order.size(); ++k) {
        int v = order[k];
        if (!allowed[static_cast<std::size_t>(v)]) continue;
        int w = graph.vertices[static_cast<std::size_t>(v)].weight();
        if (w > remaining) continue;
        std::vector<char> next_allowed = allowed;
        for (std::size_t u = 0; u < graph.vertices.size(); ++u)
            if (!graph.adjacent[static_cast<std::size_t>(v)][u]) next_allowed[u] = 0;
        current.push_back(v);
        clique_extend(graph, order, k + 1, remaining - w, current, next_allowed, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> clique_search(const CompatibilityGraph& graph, int target_weight) {
    std::vector<int> order(graph.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return graph.vertices[static_cast<std::size_t>(a)].weight() >
               graph.vertices[static_cast<std::size_t>(b)].weight();
    });
    std::vector<char> allowed(graph.vertices.size(), 1);
    std::vector<int> current;
    std::vector<std::vector<int>> out;
    clique_extend(graph, order, 0, target_weight, current, allowed, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LoopTable> algorithm_basic(const PermGroup& g, const PermGroup& h) {
    CompatibilityGraph graph = build_compatibility_graph(g, h);
    const int d = g.degree();

    std::vector<LoopTable> out;
    for (const auto& clique : clique_search(graph, d - 1)) {
        // Assemble the left translations: identity for 1, one member of
        // each chosen class for every other point.
        std::vector<Perm> ell(static_cast<std::size_t>(d) + 1);
        ell[1] = Perm(d);
        for (int v : clique)
            for (const Perm& m : graph.vertices[static_cast<std::size_t>(v)].members) {
                int x = m(1);
                if (ell[static_cast<std::size_t>(x)].degree() != 0)
                    throw internal_error("clique assigns two translations to one point");
                ell[static_cast<std::size_t>(x)] = m;
            }
        for (int x = 1; x <= d; ++x)
            if (ell[static_cast<std::size_t>(x)].degree() == 0)
                throw internal_error("clique leaves a point without a translation");
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(d),
                                           std::vector<int>(static_cast<std::size_t>(d)));
        for (int x = 1; x <= d; ++x)
            for (int y = 1; y <= d; ++y)
                rows[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1] =
                    ell[static_cast<std::size_t>(x)](y);
        out.push_back(LoopTable::from_rows(rows));
    }
    return out;
}

std::vector<CensusRecord> classify(const std::vector<LoopTable>& loops) {
    std::map<Fingerprint, std::vector<std::size_t>> buckets; // record indices
    std::vector<CensusRecord> records;
    for (const LoopTable& q : loops) {
        Fingerprint fp = fingerprint(q);
        auto& bucket = buckets[fp];
        bool matched = false;
        for (std::size_t idx : bucket)
            if (are_isomorphic(records[idx].representative, q)) {
                ++records[idx].multiplicity;
                matched = true;
                break;
            }
        if (!matched) {
            CensusRecord rec;
            rec.representative = q;
            rec.fp = fp;
            rec.provenance = q.label();
            rec.multiplicity = 1;
            bucket.push_back(records.size());
            records.push_back(std::move(rec));
        }
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const CensusRecord& a, const CensusRecord& b) { return a.fp < b.fp; });
    return records;
}

SimpleHuntResult simple_hunt(int d, const std::vector<PermGroup>& groups, std::size_t cap) {
    if (d % 2 != 0)
        throw precondition_error(
            "odd degrees cannot carry simple nonassociative automorphic loops");

    SimpleHuntResult result;
    std::vector<LoopTable> stored;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const PermGroup& g = groups[gi];
        std::string name = "group#" + std::to_string(gi + 1) + " (order " +
                           std::to_string(g.order()) + ")";
        if (g.degree() != d)
            throw degree_mismatch_error(name + " has degree " + std::to_string(g.degree()) +
                                        ", expected " + std::to_string(d));
        try {
            if (!is_transitive(g, 1) || !is_primitive(g)) {
                result.skipped.push_back(name + ": not primitive");
                continue;
            }
            if (is_solvable_group(g, cap)) {
                result.skipped.push_back(name + ": solvable");
                continue;
            }
            if (d >= 4 && is_transitive(g, 4)) {
                result.skipped.push_back(name + ": 4-transitive");
                continue;
            }
            PermGroup g1 = stabilizer(g, 1);
            for (const LoopTable& q : algorithm_basic(g, g1)) {
                PermGroup m = mlt(q, cap);
                if (m.order() != g.order()) continue; // seen with its own Mlt instead
                if (!is_simple(q, cap)) continue;
                if (!automorphic_class(q).full) continue;
                bool known = false;
                for (const LoopTable& s : stored)
                    if (are_isomorphic(s, q)) {
                        known = true;
                        break;
                    }
                if (!known) stored.push_back(q);
            }
        } catch (const resource_error& e) {
            result.skipped.push_back(name + ": " + e.what());
        }
    }
    result.catalog = classify(stored);
    return result;
}

} // namespace loops
