#pragma once

#include <optional>
#include <vector>

#include "loops/loop_table.hpp"
#include "loops/perm.hpp"

namespace loops {

LoopTable cyclic(int n);

// Direct product of cyclic groups with the given invariant factors.
LoopTable abelian(const std::vector<int>& factors);

// Dihedral-like loop on Z_m x G for an abelian group G, alpha in Aut(G)
// and even m > 1:
//   (i,u)(j,v) = (i+j, alpha^(ij)((-1)^j u + v)),
// with i, j multiplied as integer representatives in 0..m-1 and (-1)^j
// depending on the parity of j. Verified automorphic exactly when m = 2
// or alpha^2 = id.
LoopTable dih(int m, const LoopTable& g, const Perm& alpha);

// Commutative automorphic loop of order n^3 on triples over Z_n:
//   (x1,x2,x3)(y1,y2,y3) =
//     (x1+y1+(x2+y2)x3y3 + a*ovf(x2,y2) + b*ovf(x3,y3), x2+y2, x3+y3),
// where ovf(x,y) = 1 when the representatives satisfy x+y >= n. Triples
// are enumerated lexicographically with (0,0,0) as element 1.
LoopTable q_ab(int n, int a, int b);

// Coordinate conventions for the order-pq construction; the carrier is
// ambiguous in the defining recipe, so both readings are available.
// ExponentFirst puts the orbit exponent (mod d) in the first coordinate
// and the field value (mod p) in the second; LiteralFirst keeps the first
// coordinate mod p and the second mod d.
enum class DrapalConvention { exponent_first, literal_first };

// Loop of order p*d built from the orbit of 0 under f(x) = (x+1)/(tx+1)
// over Z_p, product (i,a)(j,b) = (i+j, (a+b)(1 + t f^i(0) f^j(0))^-1).
// Returns nothing when the orbit conditions fail (an undefined iterate,
// a non-unique preimage of 0) or when the chosen convention does not
// yield a valid loop table.
std::optional<LoopTable> drapal(int p, int t,
                                DrapalConvention convention = DrapalConvention::exponent_first);

// Automorphic loop of order p^3 on W x F_{p^2}:
//   (a,u)(b,v) = (a+b, (1+b)(u) + (1-a)(v)),
// where W is a one-dimensional space of commuting endomorphisms of the
// k-vector space F_{p^2} such that every 1 + a is invertible. For odd p,
// W is indexed by a label in 0..p-1 and acts by field multiplication:
// label 0 spans sqrt(d) (d the least quadratic nonresidue), label a > 0
// spans 1 + a*sqrt(d); labels a and p-a give isomorphic loops. For p = 2
// the two admissible endomorphism classes are multiplication by w
// (label 1, with w^2 = w + 1) and the nilpotent map x + y*w -> y
// (label 2); conjugate choices of either generator give isomorphic
// loops.
LoopTable field_ext_loop(int p, int subspace_label);

bool is_prime(int n);

} // namespace loops
