#pragma once

#include "maxweight/bigint.hpp"

#include <functional>
#include <string>
#include <vector>

namespace maxweight {

// Closed count of tableaux with m cells and at most k rows, k = 2..5.
BigInt b_rows_atmost(int m, int k);

// Level-2 closed forms.
BigInt sB2(int m, int s);          // binom(m, floor((m-s)/2))
BigInt sD2_u(int u, int s);        // binom(2u+s-[s=0], u), the (2u-1+s)-cell count

// Level-3 closed forms: the Motzkin binomial sum and the alternating
// Motzkin combination for the spin side.
BigInt sB3(int m, int s);
BigInt sD3(int m, int s);

// |0D(4)|, |0D(5)| by cell count.
BigInt d45(int cells, int k);

// |S(k,t)_m|: tableaux with m cells, at most k rows, exactly t odd rows.
BigInt s_kt(int m, int k, int t);

// The multinomial-determinant evaluation of |S(k)_m| (even and odd row
// bounds use the binomial and Catalan kernels respectively).
BigInt selberg(int m, int k);

// k -> infinity limits.
BigInt b_infty(int m);
BigInt d_infty(int m);
BigInt sB_infty(int m, int s);
BigInt sD_infty(int m, int s);

enum class StableFamily { RigidB, AlmostEvenD, SpinRigidD };

// Minimal row bound at which the family count equals its limit.
int stabilization_bound(int m, int s, StableFamily family);

// Boundary corrections one and two steps below the rigid stabilization bound.
BigInt sB_at_bound_minus_1(int m, int s); // k = m-s+1
BigInt sB_at_bound_minus_2(int m, int s); // k = m-s

struct ReductionReport {
    struct Line {
        std::string name;
        BigInt formula;
        BigInt enumerated;
        bool ok = false;
    };
    std::vector<Line> lines;
    bool all_ok() const;
};

// The almost-even reduction identities, each checked against enumeration.
ReductionReport reduction_corollaries(int m);

enum class FormulaId {
    B2, B3, B4, B5,
    sB2f, sB3f, sD2f, sD3f,
    D4, D5,
    Skt,
    SelbergEven, SelbergOdd, S6,
    Binfty, Dinfty, sBinfty, sDinfty,
    InvCount, Reduction,
};

struct FormulaCheck {
    FormulaId id;
    std::string name;
    std::function<bool(std::string&)> run; // fills detail on failure
};

// One formula-vs-oracle sweep per FormulaId at desk-scale bounds.
std::vector<FormulaCheck> formula_verifications(int m_max);

} // namespace maxweight
