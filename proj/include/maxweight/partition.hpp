#pragma once

#include <vector>
#include <string>

namespace maxweight {

// A partition is a weakly decreasing sequence of positive integers.
// The empty partition is a first-class value.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;                 // sum of parts
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const;            // 1-based, 0 beyond the length
    bool empty() const { return parts.empty(); }
    bool is_strict() const;

    // Young-diagram inclusion.
    bool contains(const Partition& inner) const;
    // (lambda_u, lambda_{u+1}, ...), 1-based u.
    Partition from_index(int u) const;
    Partition conjugate() const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// Strictly decreasing positive parts.
struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int i) const;
    bool empty() const { return parts.empty(); }

    Partition as_partition() const { return Partition(parts); }
    StrictPartition from_index(int u) const;

    std::string to_string() const;

    friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts == b.parts; }
    friend bool operator!=(const StrictPartition& a, const StrictPartition& b) { return !(a == b); }
    friend bool operator<(const StrictPartition& a, const StrictPartition& b) { return a.parts < b.parts; }
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);

    int cell_count() const { return outer.size() - inner.size(); }
    int rows() const { return outer.length(); }
    // Column range of row r (1-based): cells inner.part(r)+1 .. outer.part(r).
    std::string to_string() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }
};

// (m, m-1, ..., 1); empty for m <= 0.
StrictPartition staircase(int m);

// Multiset union of parts, sorted weakly decreasing.
Partition merge_parts(const std::vector<Partition>& parts);
Partition merge_parts(const std::vector<StrictPartition>& parts);

// All partitions of m with at most max_rows parts (0 = unbounded), in
// lexicographically decreasing order.
std::vector<Partition> partitions_of(int m, int max_rows = 0);

// Global cap on exhaustive enumerations; MAXWEIGHT_BOUND overrides it.
int enumeration_bound();

} // namespace maxweight
