#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/element_set.hpp"
#include "loops/errors.hpp"
#include "loops/perm.hpp"

namespace loops {

// Finite loop given by its Cayley table over elements 1..n, with 1 the
// two-sided identity. Every row and column is a permutation of 1..n, so
// both divisions are total; they are precomputed for O(1) lookup.
// Immutable after construction.
class LoopTable {
public:
    LoopTable() = default;

    // Validates the Latin property and the identity row/column.
    static LoopTable from_rows(const std::vector<std::vector<int>>& rows,
                               std::string label = "");

    // Relabels a table whose two-sided identity is not element 1 by
    // swapping it with 1, then validates as usual.
    static LoopTable from_rows_any_identity(const std::vector<std::vector<int>>& rows,
                                            std::string label = "");

    int order() const { return n_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    // x*y
    int mul(int x, int y) const { return mul_[idx(x, y)]; }
    // x \ y : the unique z with x*z = y
    int ldiv(int x, int y) const { return ldiv_[idx(x, y)]; }
    // x / y : the unique z with z*y = x
    int rdiv(int x, int y) const { return rdiv_[idx(x, y)]; }

    // L_x (images = row x) and R_x (images = column x).
    Perm left_translation(int x) const;
    Perm right_translation(int x) const;

    // Nominal power: x^[0] = 1, x^[k+1] = x * x^[k], x^[-k] = (x^[k])^-1.
    // Negative exponents need a two-sided inverse of x^[|k|].
    int power(int x, long long k) const;

    // Least k >= 1 with x^[k] = 1, after verifying that the nominal
    // powers of x form a cyclic group; throws not_power_associative_error
    // when they do not.
    int element_order(int x) const;

    // Two-sided inverse, or no_two_sided_inverse_error if the left and
    // right inverses differ.
    int inverse(int x) const;
    bool has_two_sided_inverse(int x) const;
    bool has_two_sided_inverses() const;

    // True iff squaring is a bijection.
    bool is_uniquely_2_divisible() const;

    // The unique y with y*y = x; requires unique 2-divisibility.
    int unique_sqrt(int x) const;

    // Square root lookup table (index x -> sqrt of x), or nullopt when
    // squaring is not a bijection.
    std::optional<std::vector<int>> sqrt_table() const;

    // Least subloop containing S (and 1), closed under *, \ and /.
    ElementSet subloop_generated(const ElementSet& seed) const;

    // True iff S contains 1 and is closed under *, \ and /.
    bool is_subloop(const ElementSet& s) const;

    // The Cayley table of a subloop, relabeled along the sorted members
    // (1 stays 1). Throws not_a_subloop_error if S is not closed.
    LoopTable restrict_to(const ElementSet& s) const;

    // Relabel along a permutation fixing 1: new(x, y) = p(old(p^-1 x, p^-1 y)).
    LoopTable relabel(const Perm& p) const;

    std::vector<std::vector<int>> rows() const;

    // Same order and same table; labels are ignored.
    bool operator==(const LoopTable& other) const {
        return n_ == other.n_ && mul_ == other.mul_;
    }

private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(y - 1);
    }
    void build_divisions();

    int n_ = 0;
    std::vector<int> mul_, ldiv_, rdiv_;
    std::string label_;
};

// Componentwise product on pairs enumerated row-major; (1,1) becomes 1.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);

} // namespace loops
