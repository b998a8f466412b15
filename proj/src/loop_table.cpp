#include "loops/loop_table.hpp"

#include <algorithm>

namespace loops {

LoopTable LoopTable::from_rows(const std::vector<std::vector<int>>& rows,
                               std::string label) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw validation_error("empty table");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw validation_error("table is not square");

    LoopTable t;
    t.n_ = n;
    t.label_ = std::move(label);
    t.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            int v = rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1];
            if (v < 1 || v > n)
                throw validation_error("entry out of range at row " + std::to_string(r) +
                                       ", column " + std::to_string(c));
            t.mul_[t.idx(r, c)] = v;
        }

    // Latin property: no repeat in any row or column.
    std::vector<char> seen(static_cast<std::size_t>(n) + 1);
    for (int r = 1; r <= n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 1; c <= n; ++c) {
            int v = t.mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw not_latin_error(r, c, "duplicate value " + std::to_string(v) +
                                      " in row " + std::to_string(r) + " at column " +
                                      std::to_string(c));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int c = 1; c <= n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 1; r <= n; ++r) {
            int v = t.mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw not_latin_error(r, c, "duplicate value " + std::to_string(v) +
                                      " in column " + std::to_string(c) + " at row " +
                                      std::to_string(r));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    for (int c = 1; c <= n; ++c)
        if (t.mul(1, c) != c)
            throw no_identity_error("element 1 is not a left identity");
    for (int r = 1; r <= n; ++r)
        if (t.mul(r, 1) != r)
            throw no_identity_error("element 1 is not a right identity");

    t.build_divisions();
    return t;
}

LoopTable LoopTable::from_rows_any_identity(const std::vector<std::vector<int>>& rows,
                                            std::string label) {
    const int n = static_cast<int>(rows.size());
    int e = 0;
    for (int cand = 1; cand <= n; ++cand) {
        bool ok = true;
        for (int c = 1; c <= n && ok; ++c)
            if (rows[static_cast<std::size_t>(cand) - 1][static_cast<std::size_t>(c) - 1] != c) ok = false;
        for (int r = 1; r <= n && ok; ++r)
            if (rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(cand) - 1] != r) ok = false;
        if (ok) { e = cand; break; }
    }
    if (e == 0) throw no_identity_error("table has no two-sided identity");
    if (e == 1) return from_rows(rows, std::move(label));

    // Swap labels 1 <-> e.
    auto sw = [&](int v) { return v == 1 ? e : (v == e ? 1 : v); };
    std::vector<std::vector<int>> out(rows.size(), std::vector<int>(rows.size()));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            out[static_cast<std::size_t>(sw(r)) - 1][static_cast<std::size_t>(sw(c)) - 1] =
                sw(rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1]);
    return from_rows(out, std::move(label));
}

void LoopTable::build_divisions() {
    ldiv_.resize(mul_.size());
    rdiv_.resize(mul_.size());
    for (int x = 1; x <= n_; ++x)
        for (int y = 1; y <= n_; ++y) {
            int p = mul(x, y);
            ldiv_[idx(x, p)] = y; // x*y = p  =>  x \ p = y
            rdiv_[idx(p, y)] = x; // x*y = p  =>  p / y = x
        }
}

Perm LoopTable::left_translation(int x) const {
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int y = 1; y <= n_; ++y) img[static_cast<std::size_t>(y) - 1] = mul(x, y);
    return Perm::from_images(std::move(img));
}

Perm LoopTable::right_translation(int x) const {
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int y = 1; y <= n_; ++y) img[static_cast<std::size_t>(y) - 1] = mul(y, x);
    return Perm::from_images(std::move(img));
}

int LoopTable::power(int x, long long k) const {
    if (k < 0) return inverse(power(x, -k));
    int acc = 1;
    for (long long i = 0; i < k; ++i) acc = mul(x, acc);
    return acc;
}

int LoopTable::element_order(int x) const {
    // Nominal powers trace the L_x-cycle through 1, so 1 recurs within n steps.
    std::vector<int> pows;
    pows.push_back(1);
    int p = 1;
    int m = 0;
    for (int k = 1; k <= n_; ++k) {
        p = mul(x, p);
        if (p == 1) { m = k; break; }
        pows.push_back(p);
    }
    if (m == 0)
        throw not_power_associative_error("nominal powers of " + std::to_string(x) +
                                          " do not return to 1");
    // <x> must be a cyclic group: x^[i] * x^[j] = x^[(i+j) mod m].
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (mul(pows[static_cast<std::size_t>(i)], pows[static_cast<std::size_t>(j)]) !=
                pows[static_cast<std::size_t>((i + j) % m)])
                throw not_power_associative_error(
                    "powers of " + std::to_string(x) + " do not close into a cyclic group");
    return m;
}

bool LoopTable::has_two_sided_inverse(int x) const {
    return ldiv(x, 1) == rdiv(1, x);
}

int LoopTable::inverse(int x) const {
    int right = ldiv(x, 1); // x * right = 1
    int left = rdiv(1, x);  // left * x = 1
    if (left != right) throw no_two_sided_inverse_error(x);
    return right;
}

bool LoopTable::has_two_sided_inverses() const {
    for (int x = 1; x <= n_; ++x)
        if (!has_two_sided_inverse(x)) return false;
    return true;
}

std::optional<std::vector<int>> LoopTable::sqrt_table() const {
    std::vector<int> root(static_cast<std::size_t>(n_) + 1, 0);
    for (int x = 1; x <= n_; ++x) {
        int sq = mul(x, x);
        if (root[static_cast<std::size_t>(sq)] != 0) return std::nullopt;
        root[static_cast<std::size_t>(sq)] = x;
    }
    return root;
}

bool LoopTable::is_uniquely_2_divisible() const { return sqrt_table().has_value(); }

int LoopTable::unique_sqrt(int x) const {
    auto tbl = sqrt_table();
    if (!tbl) throw not_uniquely_2_divisible_error("squaring is not a bijection");
    return (*tbl)[static_cast<std::size_t>(x)];
}

ElementSet LoopTable::subloop_generated(const ElementSet& seed) const {
    ElementSet s(n_);
    s.insert(1);
    for (int e : seed.members()) s.insert(e);
    bool grew = true;
    while (grew) {
        grew = false;
        auto mem = s.members();
        for (int a : mem)
            for (int b : mem)
                for (int v : {mul(a, b), ldiv(a, b), rdiv(a, b)})
                    if (!s.contains(v)) {
                        s.insert(v);
                        grew = true;
                    }
    }
    return s;
}

bool LoopTable::is_subloop(const ElementSet& s) const {
    if (!s.contains(1)) return false;
    auto mem = s.members();
    for (int a : mem)
        for (int b : mem)
            if (!s.contains(mul(a, b)) || !s.contains(ldiv(a, b)) || !s.contains(rdiv(a, b)))
                return false;
    return true;
}

LoopTable LoopTable::restrict_to(const ElementSet& s) const {
    if (!is_subloop(s))
        throw not_a_subloop_error("set is not closed under the loop operations");
    auto mem = s.members(); // sorted; mem[0] == 1
    std::vector<int> new_label(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < mem.size(); ++i)
        new_label[static_cast<std::size_t>(mem[i])] = static_cast<int>(i) + 1;
    const int m = static_cast<int>(mem.size());
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            rows[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] =
                new_label[static_cast<std::size_t>(
                    mul(mem[static_cast<std::size_t>(a) - 1], mem[static_cast<std::size_t>(b) - 1]))];
    return from_rows(rows, label_.empty() ? "" : label_ + "|sub" + std::to_string(m));
}

LoopTable LoopTable::relabel(const Perm& p) const {
    if (p.degree() != n_) throw validation_error("relabeling degree mismatch");
    if (p(1) != 1) throw validation_error("relabeling must fix the identity");
    Perm q = p.inverse();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_),
                                       std::vector<int>(static_cast<std::size_t>(n_)));
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c)
            rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] =
                p(mul(q(r), q(c)));
    return from_rows(rows, label_);
}

std::vector<std::vector<int>> LoopTable::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_),
                                      std::vector<int>(static_cast<std::size_t>(n_)));
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c)
            out[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = mul(r, c);
    return out;
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
    const int na = a.order(), nb = b.order();
    const int n = na * nb;
    auto enc = [&](int x, int y) { return (x - 1) * nb + (y - 1) + 1; };
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int x1 = 1; x1 <= na; ++x1)
        for (int y1 = 1; y1 <= nb; ++y1)
            for (int x2 = 1; x2 <= na; ++x2)
                for (int y2 = 1; y2 <= nb; ++y2)
                    rows[static_cast<std::size_t>(enc(x1, y1)) - 1]
                        [static_cast<std::size_t>(enc(x2, y2)) - 1] =
                            enc(a.mul(x1, x2), b.mul(y1, y2));
    std::string label;
    if (!a.label().empty() && !b.label().empty()) label = a.label() + "x" + b.label();
    return LoopTable::from_rows(rows, label);
}

} // namespace loops
