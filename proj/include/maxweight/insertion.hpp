#pragma once

#include "maxweight/paths.hpp"
#include "maxweight/rigid.hpp"

#include <vector>

namespace maxweight {

// Prepends the new maximal entry m to row u (1-based); the other rows are
// untouched.
StrictSeq insert_box(const StrictSeq& t, int u, int m);

// Smallest shift at which the sequence is a valid skew tableau; the rigid
// index of a sequence is exactly this value.
int min_valid_shift(const StrictSeq& seq);

// Level-3 rigid jeu de taquin: consumes T' in (s+1)B(3)_{m-1}, fills the
// top-rightmost inner cell with m and cycles the three moves until the
// grid is a standard skew tableau again; the result lies in sB(3)_m with
// first entry m and fails to decompose over sB(3)_{m-1}.
StrictSeq rigid_jdt(const StrictSeq& tprime, int m);

// Inverse of rigid_jdt on its image.
StrictSeq reverse_rigid_jdt(const StrictSeq& t);

struct Level3Partition {
    std::vector<StrictSeq> via_row1; // sB(3)_{m-1} +_1 m
    std::vector<StrictSeq> via_row3; // (s-1)B(3)_{m-1} +_3 m
    std::vector<StrictSeq> via_jdt;  // rigid_jdt of (s+1)B(3)_{m-1}
};

// The disjoint three-way split of sB(3)_m realizing the Motzkin recursion.
Level3Partition partition_level3(int m, int s);

// Recording bijections onto lattice paths.
LatticePath tableau_to_motzkin(const StrictSeq& t);      // sB(3)_m -> (m,s)
LatticePath tableau_to_pascal_path(const StrictSeq& t);  // sB(2)_m -> (m, b-a)

} // namespace maxweight
