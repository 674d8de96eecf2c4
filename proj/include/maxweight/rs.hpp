#pragma once

#include "maxweight/bigint.hpp"
#include "maxweight/paths.hpp"
#include "maxweight/tableau.hpp"

#include <vector>

namespace maxweight {

// One-line permutation of {1..n}: images[i-1] = pi(i).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }
    Permutation inverse() const;
    bool is_involution() const;

    // pi restricted to values <= k, renumbered by relative position.
    Permutation restrict_le(int k) const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images < b.images;
    }
};

struct Involution {
    Permutation perm;

    explicit Involution(Permutation p);
    int size() const { return perm.size(); }
    std::vector<int> fixed_points() const;
    std::vector<std::pair<int, int>> arcs() const; // (opener, closer), opener < closer
};

// Row insertion; P and Q are standard tableaux of the same straight shape.
std::pair<Tableau, Tableau> rs(const Permutation& pi);
Permutation rs_inverse(const Tableau& p, const Tableau& q);

bool is_non_nesting(const Involution& pi);

// Non-nesting involutions of length n <-> Motzkin paths of length n:
// fixed point -> H, arc -> U at the opener and D at the closer.
LatticePath phi(const Involution& pi);
Involution phi_inverse(const LatticePath& path);

// Membership in sNI_m inside Inv_{2s+m}: the first 2s letters split into
// an initial block of adjacent arcs (2i-1,2i) followed by letters 2j-1
// arcing past 2s while 2j stays fixed.
bool classify_sNI(const Involution& pi, int m, int s);

struct SkewFamilyCounts {
    BigInt S3;  // all 3-row skew tableaux at shift s
    BigInt P3;  // parity shapes
    BigInt AE3; // almost-even shapes
};

// Direct enumeration over shapes lambda >= (s,s) with |lambda \ (s,s)| = m.
SkewFamilyCounts count_skew_syt_families(int m, int s);

// I(m,k): involutions with k fixed points, computed both by involution
// enumeration and by odd-column shape counting; throws on disagreement.
BigInt schensted_fixed_points(int m, int k);

// Enumeration helpers shared by the verification suites.
std::vector<Permutation> all_permutations(int n);
std::vector<Involution> all_involutions(int n);

} // namespace maxweight
