#pragma once

#include "maxweight/tableau.hpp"

#include <vector>

namespace maxweight {

// Index (m, s) with a row bound k: m cells, last row shifted right of the
// others by s.
struct RigidIndex {
    int m = 0;
    int s = 0;
    int k = 1;
};

using Composition = std::vector<int>;

// Exactly one odd part when the total is odd, exactly two when it is even.
bool is_almost_even(const Composition& c);

// seq lists the k rows as strict partitions (trailing rows may be empty).
// A rigid tableau additionally fails column-strictness once the last row
// moves right by one more step.
bool is_rigid(const StrictSeq& seq, const RigidIndex& idx);

// Spin variant: the padded row-length composition (l_1,...,l_{k-1}, l_k+s)
// is almost even, and for s >= 2 a shift of the last row by two breaks
// column-strictness.
bool is_spin_rigid(const StrictSeq& seq, const RigidIndex& idx);

// All members of sB / sD with exactly idx.k rows (padded with empties),
// in a fixed deterministic order.
std::vector<StrictSeq> enumerate_sB(const RigidIndex& idx);
std::vector<StrictSeq> enumerate_sD(const RigidIndex& idx);

// eps-parity tableaux: straight tableaux with at most k rows whose padded
// row lengths are all congruent to eps mod 2.
std::vector<StrictSeq> enumerate_parity(int eps, int m, int k);

// Valid skew tableaux at shift s with at most k rows, no rigidity filter.
std::vector<StrictSeq> enumerate_shifted_valid(int m, int s, int k);

// Removes the cell holding the maximal entry from position (1,1) of the
// row decomposition; entries are left unchanged.
Tableau strip_head(const Tableau& t);

// k-row padded view of a sequence.
StrictSeq pad_rows(StrictSeq seq, int k);

} // namespace maxweight
