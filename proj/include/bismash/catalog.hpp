// Constructors for the permutation groups the engine works with, a
// sharp-k-transitivity checker, and name-based lookup ("AGL1:7", "M11",
// "WtS:7:2", ...).
//
// Point labelings: the affine groups act on the q field elements as points
// 1..q (point a+1 is the field element a); the projective groups act on
// the q+1 points of the projective line ordered infinity, 0, 1, ..., q-1
// as points 1..q+1.  The Mathieu constructors verify order and sharp
// transitivity before returning.

#pragma once

#include <string>

#include "bismash/group.hpp"

namespace bismash {

PermGroup cyclic_regular(int n);                 // <(1,2,...,n)>
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

PermGroup agl1(int q);                           // x -> gx + y
PermGroup asl1(int q);                           // its even permutations
PermGroup agammal1(int q);                       // x -> g x^sigma + y

PermGroup pgl2(int q);                           // Moebius action on PG(1,q)
PermGroup psl2(int q);                           // square-determinant classes
PermGroup pgammal2(int q);                       // with field automorphisms

PermGroup mathieu11();                           // sharply 4-transitive on 11
PermGroup mathieu12();                           // sharply 5-transitive on 12

// <(1,j)(n-1,n) : 1 != j <= n-k>, an S_{n-k} twisted by a far transposition
PermGroup twisted_symmetric(int n, int k);

// |G| = n(n-1)...(n-k+1) and no non-identity element fixes k or more points
bool is_sharply_k_transitive(const PermGroup& g, int k);

// "Cn" | "An" | "Sn" | "AGL1:q" | "ASL1:q" | "AGammaL1:q" | "PGL2:q" |
// "PSL2:q" | "PGammaL2:q" | "M11" | "M12" | "WtS:n:k"
PermGroup catalog_group(const std::string& name);

// the same group acting on 1..n, fixing the points above its natural
// degree; structural symmetric and alternating copies are preserved
PermGroup catalog_group_at_degree(const std::string& name, int n);

}  // namespace bismash
