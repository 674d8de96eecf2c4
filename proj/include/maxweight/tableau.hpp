#pragma once

#include "maxweight/bigint.hpp"
#include "maxweight/partition.hpp"

#include <stdexcept>
#include <vector>

namespace maxweight {

// A standard or reverse-standard filling of a skew shape with 1..m.
// Standard fillings increase along rows and columns, reverse-standard
// fillings decrease; the two are exchanged by i -> m+1-i.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows; // one entry vector per shape row
    bool reverse = false;

    Tableau() = default;
    Tableau(SkewShape sh, std::vector<std::vector<int>> rw, bool rev);

    int cell_count() const { return shape.cell_count(); }
    Tableau flipped() const;            // toggles orientation via i -> m+1-i
    std::vector<int> reading_word() const;
    std::string to_string() const;

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape == b.shape && a.rows == b.rows && a.reverse == b.reverse;
    }
    friend bool operator<(const Tableau& a, const Tableau& b);
};

// Number of standard fillings: hook lengths for straight shapes, the
// Aitken determinant for skew shapes.
BigInt count_syt(const SkewShape& shape);

// All standard fillings, ordered lexicographically by row-reading word.
// Throws bound_error if the cell count exceeds enumeration_bound().
std::vector<Tableau> enumerate_syt(const SkewShape& shape);

// Removes cells filled with <= s from a reverse-standard tableau and
// renumbers the rest down by s.
Tableau restrict_gt(const Tableau& t, int s);

// Rows of a reverse-standard skew tableau viewed as strict partitions.
// Row i (i < k) sits at indent s, the last row is flush left.
using StrictSeq = std::vector<StrictPartition>;

// Validity of the sequence view: merge of all rows is staircase(m),
// consecutive rows nest, and the last row nests after dropping its
// first s parts. Throws std::invalid_argument naming the failing rows.
void check_strict_sequence(const StrictSeq& seq, int shift);
bool is_valid_strict_sequence(const StrictSeq& seq, int shift);

Tableau tableau_from_strict_sequence(const StrictSeq& seq, int shift);
// Inverse: recovers (rows, shift) from a reverse-standard skew tableau
// whose inner shape is a rectangle column (s^{k-1}).
std::pair<StrictSeq, int> strict_sequence_from_tableau(const Tableau& t);

struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace maxweight
