#pragma once

#include "maxweight/bigint.hpp"
#include "maxweight/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maxweight {

// Ground states of the level-1 crystals of affine type B_n^(1). Lambda0
// and Lambda1 walls are built over half-thickness patterns, LambdaN over
// the half-height pattern.
enum class Ground { Lambda0, Lambda1, LambdaN };

enum class SlotKind { Full, HalfLower, HalfUpper, SplitFront, SplitBack };

struct Slot {
    int cell = 0;  // unit cell above ground, 1-based
    SlotKind kind = SlotKind::Full;
    int color = 0;

    friend bool operator==(const Slot& a, const Slot& b) {
        return a.cell == b.cell && a.kind == b.kind && a.color == b.color;
    }
};

// Buildable slots of one unit cell of a column pattern. Cell 1 is special:
// its other half belongs to the ground-state wall.
std::vector<Slot> pattern_cell(Ground g, int n, int col, int cell);

struct YoungWall {
    Ground g = Ground::Lambda0;
    int n = 2;
    // per column, right to left: block count and, when the count ends on a
    // half-filled split cell, which half is present (0 none, 1 front, 2 back)
    struct Column {
        int blocks = 0;
        int pending = 0;
        friend bool operator==(const Column& a, const Column& b) {
            return a.blocks == b.blocks && a.pending == b.pending;
        }
    };
    std::vector<Column> cols;

    int columns() const { return static_cast<int>(cols.size()); }
    const Column& column(int u) const; // 1-based, ground beyond the stored range
    std::vector<int> associated_partition() const;

    friend bool operator==(const YoungWall& a, const YoungWall& b);
    std::string to_string() const;
};

YoungWall ground_wall(Ground g, int n);

// Filled slots of one column, bottom to top.
std::vector<Slot> column_slots(const YoungWall& w, int u);

// Structural soundness: per-column occupancy shapes and the no-free-space
// rule linking each column to its right neighbour.
bool wall_well_formed(const YoungWall& w);
// No two full columns of equal positive height.
bool is_proper(const YoungWall& w);

// alpha_0..alpha_n coefficients of the blocks above the ground state.
std::vector<long long> wall_content(const YoungWall& w);

// Reduced means no removable delta-column.
bool is_reduced(const YoungWall& w);

struct SignatureEntry {
    int col = 0;        // 1-based column
    bool plus = false;  // addable when true, removable otherwise
    Slot slot;
};

// Uncancelled per-column symbols, scanned from the far column toward
// column 1 and bottom to top inside a column.
std::vector<SignatureEntry> raw_signature(const YoungWall& w, int color);
// After cancelling (+,-) pairs: the surviving minuses then pluses.
std::vector<SignatureEntry> signature(const YoungWall& w, int color);
// Display string per column, e.g. "-+" or "."; column 1 last.
std::vector<std::string> signature_symbols(const YoungWall& w, int color, int upto_col);

int eps_i(const YoungWall& w, int color);
int phi_i(const YoungWall& w, int color);

std::optional<YoungWall> crystal_e(const YoungWall& w, int color);
std::optional<YoungWall> crystal_f(const YoungWall& w, int color);

// All proper wall realizations of a partition (split choices resolved).
std::vector<YoungWall> wall_candidates(const std::vector<int>& partition, Ground g, int n);
// The unique one; throws when none or several exist.
YoungWall wall_from_partition(const std::vector<int>& partition, Ground g, int n);
// Spin variant: fixes the half-thickness color at the top of column 1.
YoungWall wall_from_partition_eps(const std::vector<int>& partition, Ground g, int n, int eps);

// Smallest s >= 0 with wall1 containing the columns of wall2 shifted by s,
// measured by per-column content domination.
int s_index(const YoungWall& w1, const YoungWall& w2);

struct TensorWall {
    std::vector<YoungWall> factors;

    friend bool operator==(const TensorWall& a, const TensorWall& b) {
        return a.factors == b.factors;
    }
};

std::vector<long long> tensor_content(const TensorWall& t);
std::optional<TensorWall> tensor_e(const TensorWall& t, int color);
std::optional<TensorWall> tensor_f(const TensorWall& t, int color);
bool tensor_highest(const TensorWall& t);
TensorWall raise_to_highest(TensorWall t);

// Number of k-fold LambdaN tensor walls of total content cont(Y^staircase(m))
// whose highest-weight element is the anchor with tail staircase(s); equals
// the rigid count by the level-k theorem.
BigInt connected_component_count(int n, int k, int s, int m);

} // namespace maxweight
