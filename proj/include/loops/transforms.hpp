#pragma once

#include "loops/algebra.hpp"
#include "loops/loop_table.hpp"
#include "loops/perm_group.hpp"

namespace loops {

// x o y = (x(y^2 x))^(1/2) on a uniquely 2-divisible left Bol loop.
// The result is a left Bruck loop with the same powers.
LoopTable bruck_from_bol(const LoopTable& q);

// x o y = ((x^-1 \ y^2) x)^(1/2) on a uniquely 2-divisible automorphic
// loop. The result is a left Bruck loop with the same powers, and every
// subloop of the input is a subloop of the result.
LoopTable bruck_from_automorphic(const LoopTable& q);

// Same associated operation on a uniquely 2-divisible Gamma loop.
LoopTable bruck_from_gamma(const LoopTable& q);

// x * y = (L_x L_y [L_y, L_x]^(1/2))(1) on a left Bruck loop of odd
// order, computed inside the materialized left multiplication group
// (whose order must be odd; an even order here is a bug). The result is
// a Gamma loop.
LoopTable gamma_from_bruck(const LoopTable& q, std::size_t cap = default_group_cap);

// For a uniquely 2-divisible automorphic loop whose associated left Bruck
// loop is an abelian group: addition = that group, [x,y] = x o y o (xy)^-1.
// The result is a Lie ring satisfying the two linear-loop conditions.
Algebra lie_from_automorphic(const LoopTable& q);

// x . y = x + y - [x,y]; a loop iff every y -> y - [x,y] and
// y -> y - [y,x] is a bijection (wright1_error otherwise, naming a
// witness x). When the algebra is a Lie ring with [[x,Q],[x,Q]] = 0, the
// result is verified automorphic.
LoopTable linear_loop(const Algebra& a);

} // namespace loops
