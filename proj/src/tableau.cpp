#include "maxweight/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace maxweight {

namespace {

void validate_filling(const SkewShape& shape, const std::vector<std::vector<int>>& rows, bool reverse) {
    const int k = shape.rows();
    if (static_cast<int>(rows.size()) != k)
        throw std::invalid_argument("Tableau: row count does not match shape");
    const int m = shape.cell_count();
    std::vector<char> seen(m + 1, 0);
    for (int i = 1; i <= k; ++i) {
        const auto& row = rows[i - 1];
        int expect = shape.outer.part(i) - shape.inner.part(i);
        if (static_cast<int>(row.size()) != expect)
            throw std::invalid_argument("Tableau: row length does not match shape");
        for (int v : row) {
            if (v < 1 || v > m || seen[v])
                throw std::invalid_argument("Tableau: entries must be exactly 1..m");
            seen[v] = 1;
        }
    }
    auto entry = [&](int r, int c) -> int { // 0 if cell absent
        if (r < 1 || r > k) return 0;
        int lo = shape.inner.part(r) + 1, hi = shape.outer.part(r);
        if (c < lo || c > hi) return 0;
        return rows[r - 1][c - lo];
    };
    for (int r = 1; r <= k; ++r) {
        int lo = shape.inner.part(r) + 1, hi = shape.outer.part(r);
        for (int c = lo; c <= hi; ++c) {
            int v = entry(r, c);
            int right = entry(r, c + 1);
            int below = entry(r + 1, c);
            if (reverse) {
                if (right && right >= v) throw std::invalid_argument("Tableau: row not decreasing");
                if (below && below >= v) throw std::invalid_argument("Tableau: column not decreasing");
            } else {
                if (right && right <= v) throw std::invalid_argument("Tableau: row not increasing");
                if (below && below <= v) throw std::invalid_argument("Tableau: column not increasing");
            }
        }
    }
}

} // namespace

Tableau::Tableau(SkewShape sh, std::vector<std::vector<int>> rw, bool rev)
    : shape(std::move(sh)), rows(std::move(rw)), reverse(rev) {
    validate_filling(shape, rows, reverse);
}

Tableau Tableau::flipped() const {
    const int m = cell_count();
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out)
        for (int& v : row) v = m + 1 - v;
    return Tableau(shape, std::move(out), !reverse);
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string Tableau::to_string() const {
    std::string s;
    for (int i = 1; i <= shape.rows(); ++i) {
        if (i > 1) s += "/";
        for (int j = 0; j < shape.inner.part(i); ++j) s += ". ";
        const auto& row = rows[i - 1];
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(row[j]);
        }
    }
    return s;
}

bool operator<(const Tableau& a, const Tableau& b) {
    if (a.reading_word() != b.reading_word()) return a.reading_word() < b.reading_word();
    return a.shape.outer.parts < b.shape.outer.parts;
}

BigInt count_syt(const SkewShape& shape) {
    const int n = shape.cell_count();
    if (n == 0) return 1;
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    if (mu.empty()) {
        // hook-length formula
        Partition conj = lam.conjugate();
        BigInt f = factorial(n);
        for (int i = 1; i <= lam.length(); ++i) {
            for (int j = 1; j <= lam.part(i); ++j) {
                int hook = (lam.part(i) - j) + (conj.part(j) - i) + 1;
                f = f.div_exact(BigInt(hook));
            }
        }
        return f;
    }
    // Aitken determinant f = n! det(1/(lam_i - mu_j - i + j)!), rows scaled
    // by M_i! to stay in integers.
    const int r = lam.length();
    std::vector<long long> scale(r);
    std::vector<std::vector<BigInt>> mat(r, std::vector<BigInt>(r));
    for (int i = 1; i <= r; ++i) scale[i - 1] = lam.part(i) + r - i;
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            long long a = lam.part(i) - mu.part(j) - i + j;
            if (a < 0) {
                mat[i - 1][j - 1] = 0;
            } else {
                BigInt falling = 1; // M_i! / a!
                for (long long v = scale[i - 1]; v > a; --v) falling *= BigInt(v);
                mat[i - 1][j - 1] = falling;
            }
        }
    }
    BigInt det = bareiss_determinant(std::move(mat));
    BigInt denom = 1;
    for (long long s : scale) denom *= factorial(static_cast<int>(s));
    return (factorial(n) * det).div_exact(denom);
}

std::vector<Tableau> enumerate_syt(const SkewShape& shape) {
    const int m = shape.cell_count();
    if (m > enumeration_bound())
        throw bound_error("enumerate_syt: cell count exceeds enumeration bound");
    std::vector<Tableau> out;
    const int k = shape.rows();
    std::vector<int> ends(k), starts(k);
    for (int i = 0; i < k; ++i) {
        starts[i] = shape.inner.part(i + 1);
        ends[i] = shape.outer.part(i + 1);
    }
    std::vector<std::vector<int>> fill(k);
    for (int i = 0; i < k; ++i) fill[i].assign(ends[i] - starts[i], 0);

    // place m, m-1, ... at removable outer corners
    std::vector<int> cur_end = ends;
    std::function<void(int)> rec = [&](int v) {
        if (v == 0) {
            std::vector<std::vector<int>> rows(k);
            for (int i = 0; i < k; ++i)
                rows[i].assign(fill[i].begin(), fill[i].end());
            out.emplace_back(shape, std::move(rows), false);
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (cur_end[i] <= starts[i]) continue;           // row empty
            if (i + 1 < k && cur_end[i + 1] >= cur_end[i]) continue; // cell below present
            int col = cur_end[i];
            cur_end[i] -= 1;
            fill[i][col - 1 - starts[i]] = v;
            rec(v - 1);
            cur_end[i] += 1;
        }
    };
    rec(m);
    std::sort(out.begin(), out.end());
    return out;
}

Tableau restrict_gt(const Tableau& t, int s) {
    if (!t.reverse)
        throw std::invalid_argument("restrict_gt: tableau must be reverse-standard");
    const int m = t.cell_count();
    if (s < 0 || s > m) throw std::invalid_argument("restrict_gt: s out of range");
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= t.shape.rows(); ++i) {
        std::vector<int> row;
        for (int v : t.rows[i - 1])
            if (v > s) row.push_back(v - s);
        int in = t.shape.inner.part(i);
        outer.push_back(in + static_cast<int>(row.size()));
        inner.push_back(in);
        rows.push_back(std::move(row));
    }
    // drop trailing rows that carry no cells
    while (!rows.empty() && rows.back().empty()) {
        rows.pop_back();
        outer.pop_back();
        inner.pop_back();
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows), true);
}

void check_strict_sequence(const StrictSeq& seq, int shift) {
    if (seq.empty()) throw std::invalid_argument("strict sequence: no rows");
    if (shift < 0) throw std::invalid_argument("strict sequence: negative shift");
    const int k = static_cast<int>(seq.size());
    std::vector<Partition> all;
    for (const auto& p : seq) all.push_back(p.as_partition());
    Partition merged = merge_parts(all);
    int m = merged.length();
    if (merged != staircase(m).as_partition())
        throw std::invalid_argument("strict sequence: rows do not merge to a staircase");
    for (int i = 0; i + 2 < k; ++i) {
        if (!all[i].contains(all[i + 1]))
            throw std::invalid_argument("strict sequence: row " + std::to_string(i + 1) +
                                        " does not contain row " + std::to_string(i + 2));
    }
    if (k >= 2) {
        Partition tail = all[k - 1].from_index(shift + 1);
        if (!all[k - 2].contains(tail))
            throw std::invalid_argument("strict sequence: row " + std::to_string(k - 1) +
                                        " does not contain row " + std::to_string(k) +
                                        " shifted by " + std::to_string(shift));
    }
}

bool is_valid_strict_sequence(const StrictSeq& seq, int shift) {
    try {
        check_strict_sequence(seq, shift);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

Tableau tableau_from_strict_sequence(const StrictSeq& seq, int shift) {
    check_strict_sequence(seq, shift);
    const int k = static_cast<int>(seq.size());
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < k; ++i) {
        int indent = (i + 1 < k) ? shift : 0;
        int out = indent + seq[i].length();
        if (out == 0) {
            if (i + 1 == k) break; // empty flush last row carries nothing
            continue;              // s = 0 and empty middle row
        }
        outer.push_back(out);
        inner.push_back(indent);
        rows.push_back(seq[i].parts);
    }
    while (!rows.empty() && rows.back().empty()) {
        rows.pop_back();
        outer.pop_back();
        inner.pop_back();
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    if (outer.empty())
        return Tableau(SkewShape(), {}, true);
    return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows), true);
}

std::pair<StrictSeq, int> strict_sequence_from_tableau(const Tableau& t) {
    if (!t.reverse)
        throw std::invalid_argument("strict_sequence_from_tableau: tableau must be reverse-standard");
    if (t.shape.rows() == 0) return {StrictSeq{StrictPartition()}, 0};
    int shift = t.shape.inner.part(1);
    for (int i = 1; i <= t.shape.inner.length(); ++i)
        if (t.shape.inner.part(i) != shift)
            throw std::invalid_argument("strict_sequence_from_tableau: inner shape is not a rectangle");
    StrictSeq seq;
    for (const auto& row : t.rows) seq.emplace_back(row);
    // rows 1..k-1 are indented, the last is flush; a flush single row means shift 0
    if (t.shape.rows() >= 1 && t.shape.inner.length() == t.shape.rows())
        seq.emplace_back(); // all rows indented: trailing empty flush row
    return {seq, shift};
}

} // namespace maxweight
