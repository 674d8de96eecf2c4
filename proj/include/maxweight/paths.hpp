#pragma once

#include "maxweight/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace maxweight {

enum class Step : char { U = 'U', H = 'H', D = 'D' };

enum class PathKind { Motzkin, Riordan, Dyck, Pascal };

// A step sequence starting at (0,0). Motzkin/Riordan/Dyck paths stay on or
// above the axis; Riordan additionally bans H on the axis, Dyck bans H
// everywhere; Pascal paths use U/D only and may dip below the axis.
struct LatticePath {
    std::vector<Step> steps;

    LatticePath() = default;
    explicit LatticePath(std::vector<Step> s) : steps(std::move(s)) {}
    explicit LatticePath(const std::string& word);

    int length() const { return static_cast<int>(steps.size()); }
    int end_height() const;
    std::string to_string() const;

    bool is_kind(PathKind kind) const;

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps == b.steps; }
    friend bool operator<(const LatticePath& a, const LatticePath& b) { return a.steps < b.steps; }
};

// Generalized triangle numbers: paths of the kind from (0,0) to (m,s).
// All are 0 outside 0 <= s <= m (Pascal included; its endpoint height is s).
BigInt motzkin_number(int m, int s);
BigInt riordan_number(int m, int s);
BigInt catalan_number(int m, int s);   // Dyck endpoint count
BigInt pascal_number(int m, int s);

// Closed forms, kept as an independent second route to the recursions.
BigInt motzkin_closed(int m, int s);
BigInt riordan_row_closed(int m);      // R_m, the s = 0 value
BigInt catalan_closed(int m, int s);
BigInt pascal_closed(int m, int s);

std::vector<LatticePath> enumerate_paths(PathKind kind, int m, int s);

// Replaces the first axis-level H of a Motzkin path by U, landing in the
// Riordan paths one level higher (the level-shift bijection).
LatticePath nr_shift(const LatticePath& p);

struct TriangleTable {
    enum class Kind { Motzkin, Riordan, Catalan, Pascal, Bessel };
    Kind kind;
    std::map<std::pair<int, int>, BigInt> entries; // (m,s) -> value

    static TriangleTable build(Kind kind, int rows);
};

struct IdentityReport {
    std::string name;
    int max_m = 0;
    bool ok = false;
    std::string detail; // failing (m,s) when not ok
};

// The inter-family identities, checked exactly up to m_max.
std::vector<IdentityReport> verify_path_identities(int m_max);

} // namespace maxweight
