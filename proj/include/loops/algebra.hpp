#pragma once

#include <vector>

#include "loops/loop_table.hpp"

namespace loops {

// Finite algebra (Q, +, [.,.]): an abelian-group addition table together
// with a binary bracket table, both over 1..n with 1 playing the role of
// the additive zero. The addition table must be a valid loop table; all
// further axioms (abelian addition, biadditivity, Jacobi, ...) are
// reported by algebra_checks rather than enforced at construction, so
// deliberately broken inputs can be probed.
class Algebra {
public:
    Algebra() = default;
    Algebra(LoopTable add, std::vector<std::vector<int>> bracket, std::string label = "");

    int order() const { return add_.order(); }
    const LoopTable& add_table() const { return add_; }
    const std::string& label() const { return label_; }

    int add(int x, int y) const { return add_.mul(x, y); }
    int sub(int x, int y) const { return add_.rdiv(x, y); } // x - y
    int neg(int x) const { return add_.rdiv(1, x); }        // additive inverse
    int zero() const { return 1; }
    int bracket(int x, int y) const {
        return bracket_[static_cast<std::size_t>(x) - 1][static_cast<std::size_t>(y) - 1];
    }

    bool operator==(const Algebra& other) const {
        return add_ == other.add_ && bracket_ == other.bracket_;
    }

private:
    LoopTable add_;
    std::vector<std::vector<int>> bracket_;
    std::string label_;
};

struct AlgebraChecks {
    bool abelian_add = false;       // addition is an abelian group
    bool biadditive = false;        // bracket additive in each slot
    bool alternating = false;       // [x,x] = 0
    bool jacobi = false;            // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0
    bool wright1 = false;           // y -> y - [x,y] and y -> y - [y,x] biject
    bool wright2 = false;           // [[x,Q],[x,Q]] = 0 for every x
    bool solvable_length_2 = false; // [[Q,Q],[Q,Q]] = 0
    bool lie_ring() const { return abelian_add && biadditive && alternating && jacobi; }
};

AlgebraChecks algebra_checks(const Algebra& a);

} // namespace loops
