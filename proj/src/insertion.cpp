#include "maxweight/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxweight {

namespace {

bool contains_from(const StrictPartition& a, const StrictPartition& b, int from) {
    for (int j = from; j <= b.length(); ++j)
        if (a.part(j - from + 1) < b.part(j)) return false;
    return true;
}

// Three-row working grid with 1-based columns; 0 marks an empty cell.
struct Grid {
    std::vector<std::vector<int>> cell; // cell[r][c], r = 0..2

    explicit Grid(int width) : cell(3, std::vector<int>(width + 2, 0)) {}

    static Grid from_rows(const StrictPartition& r1, int start1, const StrictPartition& r2,
                          int start2, const StrictPartition& r3) {
        int width = std::max({start1 + r1.length(), start2 + r2.length(), r3.length()}) + 2;
        Grid g(width);
        for (int i = 0; i < r1.length(); ++i) g.cell[0][start1 + i] = r1.parts[i];
        for (int i = 0; i < r2.length(); ++i) g.cell[1][start2 + i] = r2.parts[i];
        for (int i = 0; i < r3.length(); ++i) g.cell[2][1 + i] = r3.parts[i];
        return g;
    }

    int width() const { return static_cast<int>(cell[0].size()) - 1; }

    // A standard three-row skew tableau with rows 1,2 at the given indent
    // and row 3 flush left?
    bool standard(int indent) const {
        int len[3] = {0, 0, 0};
        for (int r = 0; r < 3; ++r) {
            int start = r < 2 ? indent + 1 : 1;
            int c = start;
            while (c <= width() && cell[r][c] != 0) ++c;
            len[r] = c - start;
            for (; c <= width(); ++c)
                if (cell[r][c] != 0) return false; // gap inside the row
            for (int b = 1; b < start; ++b)
                if (cell[r][b] != 0) return false; // cell left of the row start
        }
        if (len[0] < len[1]) return false;
        if (indent + len[1] < len[2]) return false; // outer shape must decrease
        for (int r = 0; r < 3; ++r)
            for (int c = 1; c < width(); ++c)
                if (cell[r][c] && cell[r][c + 1] && cell[r][c] <= cell[r][c + 1]) return false;
        for (int r = 0; r < 2; ++r)
            for (int c = 1; c <= width(); ++c)
                if (cell[r][c] && cell[r + 1][c] && cell[r][c] <= cell[r + 1][c]) return false;
        return true;
    }

    StrictSeq to_seq(int indent) const {
        StrictSeq seq;
        for (int r = 0; r < 3; ++r) {
            int start = r < 2 ? indent + 1 : 1;
            std::vector<int> parts;
            for (int c = start; c <= width() && cell[r][c]; ++c) parts.push_back(cell[r][c]);
            seq.emplace_back(parts);
        }
        return seq;
    }
};

int last_col(const Grid& g, int r) {
    int c = g.width();
    while (c >= 1 && g.cell[r][c] == 0) --c;
    return c; // 0 when the row is empty
}

} // namespace

StrictSeq insert_box(const StrictSeq& t, int u, int m) {
    if (u < 1 || u > static_cast<int>(t.size()))
        throw std::invalid_argument("insert_box: row index out of range");
    int cells = 0, biggest = 0;
    for (const auto& row : t) {
        cells += row.length();
        biggest = std::max(biggest, row.part(1));
    }
    if (cells != m - 1 || biggest >= m)
        throw std::invalid_argument("insert_box: entry must exceed the current maximum");
    StrictSeq out = t;
    std::vector<int> parts = out[u - 1].parts;
    parts.insert(parts.begin(), m);
    out[u - 1] = StrictPartition(parts);
    return out;
}

int min_valid_shift(const StrictSeq& seq) {
    if (seq.size() < 2) return 0;
    const StrictPartition& prev = seq[seq.size() - 2];
    const StrictPartition& last = seq.back();
    for (int s = 0; s <= last.length(); ++s)
        if (contains_from(prev, last, s + 1)) return s;
    return last.length(); // unreachable: every tail of length 0 is contained
}

StrictSeq rigid_jdt(const StrictSeq& tprime, int m) {
    StrictSeq t = pad_rows(tprime, 3);
    if (t.size() != 3) throw std::invalid_argument("rigid_jdt: level-3 tableau required");
    int s1 = min_valid_shift(t);
    if (s1 < 1 || !is_rigid(t, {m - 1, s1, 3}))
        throw std::invalid_argument("rigid_jdt: input must be rigid with positive index");
    const int s = s1 - 1;

    // row 1 takes m at the vacated inner corner and sits at indent s;
    // row 2 keeps indent s+1, leaving the reference hole at (2, s+1)
    std::vector<int> r1 = t[0].parts;
    r1.insert(r1.begin(), m);
    Grid g = Grid::from_rows(StrictPartition(r1), s + 1, t[1], s + 2, t[2]);

    int hole = s + 1;
    const int max_rounds = t[0].length() + 2;
    for (int round = 0; round <= max_rounds; ++round) {
        // (1) pull the north-east cell of the hole down-left
        if (g.cell[0][hole + 1] != 0) {
            Grid c = g;
            c.cell[1][hole] = c.cell[0][hole + 1];
            int end = last_col(c, 0);
            for (int col = hole + 1; col < end; ++col) c.cell[0][col] = c.cell[0][col + 1];
            c.cell[0][end] = 0;
            if (c.standard(s)) {
                StrictSeq result = c.to_seq(s);
                if (!is_rigid(result, {m, s, 3}))
                    throw std::logic_error("rigid_jdt: result left the rigid family");
                return result;
            }
        }
        // (2) pull the south cell of the hole up
        if (g.cell[2][hole] != 0) {
            Grid c = g;
            c.cell[1][hole] = c.cell[2][hole];
            int end = last_col(c, 2);
            for (int col = hole; col < end; ++col) c.cell[2][col] = c.cell[2][col + 1];
            c.cell[2][end] = 0;
            if (c.standard(s)) {
                StrictSeq result = c.to_seq(s);
                if (!is_rigid(result, {m, s, 3}))
                    throw std::logic_error("rigid_jdt: result left the rigid family");
                return result;
            }
        }
        // (3) slide the east cell of the hole left and advance the hole
        if (g.cell[1][hole + 1] == 0)
            throw std::logic_error("rigid_jdt: hole escaped the second row");
        g.cell[1][hole] = g.cell[1][hole + 1];
        g.cell[1][hole + 1] = 0;
        ++hole;
    }
    throw std::logic_error("rigid_jdt: move cycle failed to terminate");
}

StrictSeq reverse_rigid_jdt(const StrictSeq& tin) {
    StrictSeq t = pad_rows(tin, 3);
    if (t.size() != 3) throw std::invalid_argument("reverse_rigid_jdt: level-3 tableau required");
    int cells = t[0].length() + t[1].length() + t[2].length();
    const int m = cells;
    const int s = min_valid_shift(t);
    if (!is_rigid(t, {m, s, 3}))
        throw std::invalid_argument("reverse_rigid_jdt: input is not rigid");
    if (t[0].part(1) != m || contains_from(t[0].from_index(2), t[1], 1))
        throw std::invalid_argument(
            "reverse_rigid_jdt: tableau decomposes over an insertion instead");

    // remove m from (1, s+1); rows 1,2 now both start at column s+2
    std::vector<int> r1 = t[0].parts;
    r1.erase(r1.begin());
    Grid g = Grid::from_rows(StrictPartition(r1), s + 2, t[1], s + 1, t[2]);

    int ref = s + 1; // leftmost cell of row 2
    const int max_rounds = t[0].length() + 2;
    for (int round = 0; round <= max_rounds; ++round) {
        if (g.cell[1][ref] == 0)
            throw std::logic_error("reverse_rigid_jdt: reference left the second row");
        // (1) drop the reference cell into the third row
        {
            Grid c = g;
            int end = last_col(c, 2);
            for (int col = end; col >= ref; --col) c.cell[2][col + 1] = c.cell[2][col];
            c.cell[2][ref] = c.cell[1][ref];
            c.cell[1][ref] = 0;
            for (int col = ref - 1; col >= s + 1; --col) {
                c.cell[1][col + 1] = c.cell[1][col];
                c.cell[1][col] = 0;
            }
            if (c.standard(s + 1)) {
                StrictSeq result = c.to_seq(s + 1);
                if (!is_rigid(result, {m - 1, s + 1, 3}))
                    throw std::logic_error("reverse_rigid_jdt: result left the rigid family");
                return result;
            }
        }
        // (2) lift the reference cell into the first row
        {
            Grid c = g;
            int end = last_col(c, 0);
            for (int col = end; col >= ref + 1; --col) c.cell[0][col + 1] = c.cell[0][col];
            c.cell[0][ref + 1] = c.cell[1][ref];
            c.cell[1][ref] = 0;
            for (int col = ref - 1; col >= s + 1; --col) {
                c.cell[1][col + 1] = c.cell[1][col];
                c.cell[1][col] = 0;
            }
            if (c.standard(s + 1)) {
                StrictSeq result = c.to_seq(s + 1);
                if (!is_rigid(result, {m - 1, s + 1, 3}))
                    throw std::logic_error("reverse_rigid_jdt: result left the rigid family");
                return result;
            }
        }
        // (3) advance the reference point
        ++ref;
    }
    throw std::logic_error("reverse_rigid_jdt: move cycle failed to terminate");
}

Level3Partition partition_level3(int m, int s) {
    if (m < 1) throw std::invalid_argument("partition_level3: m must be positive");
    Level3Partition out;
    for (const auto& t : enumerate_sB({m - 1, s, 3})) out.via_row1.push_back(insert_box(t, 1, m));
    if (s >= 1)
        for (const auto& t : enumerate_sB({m - 1, s - 1, 3}))
            out.via_row3.push_back(insert_box(t, 3, m));
    for (const auto& t : enumerate_sB({m - 1, s + 1, 3})) out.via_jdt.push_back(rigid_jdt(t, m));
    return out;
}

LatticePath tableau_to_motzkin(const StrictSeq& tin) {
    StrictSeq t = pad_rows(tin, 3);
    if (t.size() != 3) throw std::invalid_argument("tableau_to_motzkin: level-3 tableau required");
    int m = t[0].length() + t[1].length() + t[2].length();
    int s = min_valid_shift(t);
    if (!is_rigid(t, {m, s, 3}))
        throw std::invalid_argument("tableau_to_motzkin: input is not rigid");
    const int target = s;
    std::vector<Step> steps(m, Step::H);
    for (int v = m; v >= 1; --v) {
        if (t[2].part(1) == v) {
            steps[v - 1] = Step::U;
            t[2] = t[2].from_index(2);
            --s;
        } else if (t[0].part(1) == v && contains_from(t[0].from_index(2), t[1], 1)) {
            steps[v - 1] = Step::H;
            t[0] = t[0].from_index(2);
        } else {
            steps[v - 1] = Step::D;
            t = reverse_rigid_jdt(t);
            ++s;
        }
    }
    LatticePath path{std::move(steps)};
    if (!path.is_kind(PathKind::Motzkin) || path.end_height() != target)
        throw std::logic_error("tableau_to_motzkin: recording left the Motzkin family");
    return path;
}

LatticePath tableau_to_pascal_path(const StrictSeq& tin) {
    StrictSeq t = pad_rows(tin, 2);
    if (t.size() != 2)
        throw std::invalid_argument("tableau_to_pascal_path: level-2 tableau required");
    int m = t[0].length() + t[1].length();
    int s = min_valid_shift(t);
    if (!is_rigid(t, {m, s, 2}))
        throw std::invalid_argument("tableau_to_pascal_path: input is not rigid");
    // endpoint height s when m and s agree in parity, -(s+1) otherwise
    const int target = ((m - s) % 2 == 0) ? s : -(s + 1);
    std::vector<Step> steps(m, Step::U);
    for (int v = m; v >= 1; --v) {
        bool up;
        if (t[1].part(1) == v) {
            // insertion into the second row, coming from index s-1
            up = (s % 2) == (v % 2);
            t[1] = t[1].from_index(2);
            --s;
        } else if (t[0].part(1) == v) {
            StrictSeq rest{t[0].from_index(2), t[1]};
            int s_rest = min_valid_shift(rest);
            // insertion into the first row: from s+1, or from 0 when s = 0
            up = (s_rest == s + 1) ? (s % 2) != (v % 2) : (s % 2) == (v % 2);
            t[0] = t[0].from_index(2);
            s = s_rest;
        } else {
            throw std::logic_error("tableau_to_pascal_path: maximum not at a row head");
        }
        steps[v - 1] = up ? Step::U : Step::D;
    }
    LatticePath path{std::move(steps)};
    if (path.end_height() != target)
        throw std::logic_error("tableau_to_pascal_path: endpoint law violated");
    return path;
}

} // namespace maxweight
