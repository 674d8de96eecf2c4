#pragma once

#include "maxweight/bigint.hpp"
#include "maxweight/lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxweight {

// Dominant maximal weights of V(Lambda) over affine B_n^(1), represented
// through the projection onto the finite weight space: eta-bar = Lambda-bar
// + sum x_i alpha_i with integer x_i.
struct AffineMaxWeight {
    std::vector<long long> x;    // alpha-coordinates of eta-bar minus Lambda-bar
    std::vector<long long> fund; // finite fundamental coordinates of eta-bar
};

// Lambda is given by its coefficients on Lambda_0..Lambda_n; its level is
// the pairing with c = h_0 + h_1 + 2(h_2+...+h_{n-1}) + h_n.
long long affine_level_Bn1(int n, const std::vector<long long>& lambda);

// All dominant maximal weights via the level-k chamber of the projected
// weight space (finitely many by the classical bijection).
std::vector<AffineMaxWeight> affine_kac_enumerate(int n, const std::vector<long long>& lambda,
                                                  int level);

enum class StaircaseClass { RigidB, SpinD };

struct StaircaseIndex {
    StaircaseClass cls;
    int m = 0;
    int s = 0;
};

// Decodes a maximal weight as Lambda minus a staircase-wall content plus a
// smaller one; none when eta is not of staircase shape.
std::optional<StaircaseIndex> staircase_index(int n, const std::vector<long long>& lambda,
                                              const AffineMaxWeight& eta);

struct TheoremCheck {
    int n, k, s, m;
    BigInt closed_form;
    BigInt enumeration;
    BigInt freudenthal_value;
    bool ok = false;
};

// Triple agreement for the rigid family: closed form, tableau enumeration
// and the finite-type Freudenthal multiplicity over B_n.
TheoremCheck verify_rigid_multiplicity(int n, int k, int s, int m);
// Spin family over D_n; requires m <= n-1.
TheoremCheck verify_spin_multiplicity(int n, int k, int s, int m);

struct ConjectureReport {
    struct Line {
        int n, level, s;
        std::string anchor; // "Lambda0" or "LambdaN"
        BigInt enumerated;
        BigInt conjectured;
        bool agree;
    };
    std::vector<Line> lines;
};

// Counts max+((l-2)Lambda_anchor + Lambda_s | l) against the conjectured
// binomial sums; reports only, asserts nothing.
ConjectureReport check_conjecture(int n, int level);

} // namespace maxweight
