#include "maxweight/rigid.hpp"

#include <functional>
#include <stdexcept>

namespace maxweight {

namespace {

bool contains_from(const StrictPartition& a, const StrictPartition& b, int from) {
    // a contains (b_from, b_{from+1}, ...)
    for (int j = from; j <= b.length(); ++j) {
        if (a.part(j - from + 1) < b.part(j)) return false;
    }
    return true;
}

void require_valid(const StrictSeq& seq, const RigidIndex& idx) {
    if (static_cast<int>(seq.size()) > idx.k)
        throw std::invalid_argument("rigid: sequence has more rows than the bound");
    StrictSeq padded = pad_rows(seq, idx.k);
    if (idx.k >= 2) {
        check_strict_sequence(padded, idx.s);
    } else {
        check_strict_sequence(padded, 0);
    }
    int m = 0;
    for (const auto& row : padded) m += row.length();
    if (m != idx.m) throw std::invalid_argument("rigid: cell count does not match index");
}

} // namespace

StrictSeq pad_rows(StrictSeq seq, int k) {
    while (static_cast<int>(seq.size()) < k) seq.emplace_back();
    return seq;
}

bool is_almost_even(const Composition& c) {
    int odd = 0;
    for (int v : c) {
        if (v < 0) throw std::invalid_argument("composition parts must be nonnegative");
        odd += v & 1;
    }
    return odd == 1 || odd == 2;
}

bool is_rigid(const StrictSeq& seq, const RigidIndex& idx) {
    require_valid(seq, idx);
    if (idx.s == 0) return true;
    if (idx.k < 2) return false;
    StrictSeq p = pad_rows(seq, idx.k);
    return !contains_from(p[idx.k - 2], p[idx.k - 1], idx.s);
}

bool is_spin_rigid(const StrictSeq& seq, const RigidIndex& idx) {
    require_valid(seq, idx);
    if (idx.k < 2 && idx.s > 0) return false;
    StrictSeq p = pad_rows(seq, idx.k);
    Composition lengths;
    for (int i = 0; i + 1 < idx.k; ++i) lengths.push_back(p[i].length());
    lengths.push_back(p[idx.k - 1].length() + idx.s);
    if (!is_almost_even(lengths)) return false;
    if (idx.s >= 2 && idx.k >= 2)
        return !contains_from(p[idx.k - 2], p[idx.k - 1], idx.s - 1);
    return true;
}

namespace {

// All sequences with k rows, m cells, valid at shift s: DFS over values
// m..1 with the prefix-length pruning that encodes the containments.
void enumerate_valid(int m, int s, int k, const std::function<void(const StrictSeq&)>& emit) {
    if (m < 0 || s < 0 || k < 1) return;
    if (m > enumeration_bound())
        throw bound_error("rigid enumeration: cell count exceeds enumeration bound");
    if (k == 1) {
        if (s == 0) {
            StrictSeq seq{staircase(m)};
            emit(seq);
        }
        return;
    }
    std::vector<std::vector<int>> rows(k);
    std::function<void(int)> rec = [&](int v) {
        if (v == 0) {
            StrictSeq seq;
            for (const auto& r : rows) seq.emplace_back(r);
            emit(seq);
            return;
        }
        for (int r = 0; r < k; ++r) {
            int len = static_cast<int>(rows[r].size());
            if (r >= 1 && r <= k - 2 && static_cast<int>(rows[r - 1].size()) <= len) continue;
            if (r == k - 1 && len + 1 > s &&
                static_cast<int>(rows[k - 2].size()) < len + 1 - s)
                continue;
            rows[r].push_back(v);
            rec(v - 1);
            rows[r].pop_back();
        }
    };
    rec(m);
}

} // namespace

std::vector<StrictSeq> enumerate_sB(const RigidIndex& idx) {
    std::vector<StrictSeq> out;
    if (idx.s > idx.m && !(idx.s == 0 && idx.m == 0)) return out; // tolerant empty
    enumerate_valid(idx.m, idx.s, idx.k, [&](const StrictSeq& seq) {
        if (is_rigid(seq, idx)) out.push_back(seq);
    });
    return out;
}

std::vector<StrictSeq> enumerate_sD(const RigidIndex& idx) {
    std::vector<StrictSeq> out;
    if (idx.m < idx.s - 1) return out; // tolerant empty
    enumerate_valid(idx.m, idx.s, idx.k, [&](const StrictSeq& seq) {
        if (is_spin_rigid(seq, idx)) out.push_back(seq);
    });
    return out;
}

std::vector<StrictSeq> enumerate_parity(int eps, int m, int k) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("enumerate_parity: eps must be 0 or 1");
    std::vector<StrictSeq> out;
    enumerate_valid(m, 0, k, [&](const StrictSeq& seq) {
        for (const auto& row : seq)
            if ((row.length() & 1) != eps) return;
        out.push_back(seq);
    });
    return out;
}

std::vector<StrictSeq> enumerate_shifted_valid(int m, int s, int k) {
    std::vector<StrictSeq> out;
    enumerate_valid(m, s, k, [&](const StrictSeq& seq) { out.push_back(seq); });
    return out;
}

Tableau strip_head(const Tableau& t) {
    if (!t.reverse) throw std::invalid_argument("strip_head: tableau must be reverse-standard");
    const int m = t.cell_count();
    if (m < 1) throw std::invalid_argument("strip_head: empty tableau");
    if (t.rows.empty() || t.rows[0].empty() || t.rows[0][0] != m)
        throw std::invalid_argument("strip_head: maximal entry is not at position (1,1)");
    std::vector<int> outer = t.shape.outer.parts;
    std::vector<int> inner;
    for (int i = 1; i <= t.shape.rows(); ++i) inner.push_back(t.shape.inner.part(i));
    inner[0] += 1;
    std::vector<std::vector<int>> rows = t.rows;
    rows[0].erase(rows[0].begin());
    if (rows.size() == 1 && rows[0].empty())
        return Tableau(SkewShape(), {}, true);
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return Tableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows), true);
}

} // namespace maxweight
