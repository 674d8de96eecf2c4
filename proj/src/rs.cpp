#include "maxweight/rs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace maxweight {

Permutation::Permutation(std::vector<int> img) : images(std::move(img)) {
    std::vector<char> seen(images.size() + 1, 0);
    for (int v : images) {
        if (v < 1 || v > size() || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images.size());
    for (int i = 1; i <= size(); ++i) inv[images[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= size(); ++i)
        if (images[images[i - 1] - 1] != i) return false;
    return true;
}

Permutation Permutation::restrict_le(int k) const {
    std::vector<int> word;
    for (int i = 1; i <= size(); ++i)
        if (images[i - 1] <= k) word.push_back(images[i - 1]);
    return Permutation(std::move(word));
}

Involution::Involution(Permutation p) : perm(std::move(p)) {
    if (!perm.is_involution())
        throw std::invalid_argument("Involution: permutation is not self-inverse");
}

std::vector<int> Involution::fixed_points() const {
    std::vector<int> fp;
    for (int i = 1; i <= size(); ++i)
        if (perm(i) == i) fp.push_back(i);
    return fp;
}

std::vector<std::pair<int, int>> Involution::arcs() const {
    std::vector<std::pair<int, int>> a;
    for (int i = 1; i <= size(); ++i)
        if (perm(i) > i) a.emplace_back(i, perm(i));
    return a;
}

std::pair<Tableau, Tableau> rs(const Permutation& pi) {
    std::vector<std::vector<int>> p, q;
    for (int i = 1; i <= pi.size(); ++i) {
        int v = pi(i);
        size_t row = 0;
        while (true) {
            if (row == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), v);
            if (it == p[row].end()) {
                p[row].push_back(v);
                q[row].push_back(i);
                break;
            }
            std::swap(*it, v);
            ++row;
        }
    }
    std::vector<int> shape;
    for (const auto& row : p) shape.push_back(static_cast<int>(row.size()));
    SkewShape sh{Partition(shape), Partition()};
    return {Tableau(sh, p, false), Tableau(sh, q, false)};
}

Permutation rs_inverse(const Tableau& pt, const Tableau& qt) {
    if (pt.shape != qt.shape || pt.reverse || qt.reverse)
        throw std::invalid_argument("rs_inverse: need standard tableaux of equal shape");
    std::vector<std::vector<int>> p = pt.rows;
    const int n = pt.cell_count();
    // position of each recording entry
    std::vector<std::pair<int, int>> pos(n + 1);
    for (size_t r = 0; r < qt.rows.size(); ++r)
        for (size_t c = 0; c < qt.rows[r].size(); ++c) pos[qt.rows[r][c]] = {static_cast<int>(r), static_cast<int>(c)};
    std::vector<int> word(n);
    for (int i = n; i >= 1; --i) {
        auto [r, c] = pos[i];
        int v = p[r][c];
        p[r].pop_back();
        for (int row = r - 1; row >= 0; --row) {
            auto it = std::lower_bound(p[row].begin(), p[row].end(), v);
            --it; // the rightmost entry smaller than v
            std::swap(*it, v);
        }
        word[i - 1] = v;
    }
    return Permutation(std::move(word));
}

bool is_non_nesting(const Involution& pi) {
    auto a = pi.arcs();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i].first < a[j].first && a[j].second < a[i].second) return false;
    return true;
}

LatticePath phi(const Involution& pi) {
    if (!is_non_nesting(pi)) throw std::invalid_argument("phi: involution has a nesting");
    std::vector<Step> steps(pi.size(), Step::H);
    for (auto [i, j] : pi.arcs()) {
        steps[i - 1] = Step::U;
        steps[j - 1] = Step::D;
    }
    return LatticePath(std::move(steps));
}

Involution phi_inverse(const LatticePath& path) {
    if (!path.is_kind(PathKind::Motzkin) || path.end_height() != 0)
        throw std::invalid_argument("phi_inverse: not a Motzkin path back to the axis");
    const int n = path.length();
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    // match D steps to the earliest open U (queue order keeps arcs non-nesting)
    std::vector<int> open;
    size_t next = 0;
    for (int i = 1; i <= n; ++i) {
        Step st = path.steps[i - 1];
        if (st == Step::U) {
            open.push_back(i);
        } else if (st == Step::D) {
            int u = open[next++];
            img[u - 1] = i;
            img[i - 1] = u;
        }
    }
    return Involution(Permutation(std::move(img)));
}

bool classify_sNI(const Involution& pi, int m, int s) {
    if (pi.size() != 2 * s + m)
        throw std::invalid_argument("classify_sNI: involution size must be 2s+m");
    int t = 0;
    while (t < s && pi.perm(2 * t + 1) == 2 * t + 2) ++t;
    for (int j = t + 1; j <= s; ++j) {
        if (pi.perm(2 * j) != 2 * j) return false;
        if (pi.perm(2 * j - 1) <= 2 * s) return false;
    }
    return true;
}

SkewFamilyCounts count_skew_syt_families(int m, int s) {
    if (m < 0 || s < 0) throw std::invalid_argument("count_skew_syt_families: negative index");
    if (m + 2 * s > 3 * enumeration_bound())
        throw bound_error("count_skew_syt_families: size exceeds enumeration bound");
    SkewFamilyCounts out{0, 0, 0};
    // shapes (l1, l2, l3) with l1 >= l2 >= s, l3 <= l2, |shape| = m + 2s
    for (int l3 = 0; l3 <= m + 2 * s; ++l3) {
        for (int l2 = std::max(s, l3); l2 <= m + 2 * s; ++l2) {
            int l1 = m + 2 * s - l2 - l3;
            if (l1 < l2 || l1 < s) continue;
            std::vector<int> outer;
            for (int v : {l1, l2, l3})
                if (v > 0) outer.push_back(v);
            std::vector<int> inner;
            if (s > 0) inner = {s, s};
            SkewShape shape{Partition(outer), Partition(inner)};
            BigInt f((long long)enumerate_syt(shape).size());
            out.S3 += f;
            int odd = (l1 & 1) + (l2 & 1) + (l3 & 1);
            if (odd == 0 || odd == 3)
                out.P3 += f;
            else
                out.AE3 += f;
        }
    }
    return out;
}

BigInt schensted_fixed_points(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("schensted_fixed_points: negative input");
    if (k > m || ((m - k) & 1)) return 0;
    if (m > enumeration_bound())
        throw bound_error("schensted_fixed_points: size exceeds enumeration bound");
    // route one: count involutions with k fixed points directly
    BigInt by_involutions = 0;
    for (const Involution& inv : all_involutions(m))
        if (static_cast<int>(inv.fixed_points().size()) == k) by_involutions += 1;
    // route two: shapes with k odd columns, weighted by hook counts
    BigInt by_tableaux = 0;
    for (const Partition& lam : partitions_of(m)) {
        Partition conj = lam.conjugate();
        int odd_cols = 0;
        for (int p : conj.parts) odd_cols += p & 1;
        if (odd_cols == k) by_tableaux += count_syt(SkewShape(lam, Partition()));
    }
    if (by_involutions != by_tableaux)
        throw std::logic_error("schensted_fixed_points: the two routes disagree");
    return by_involutions;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Involution> all_involutions(int n) {
    std::vector<Involution> out;
    std::vector<int> img(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.emplace_back(Permutation(img));
            return;
        }
        if (img[i - 1] != 0) {
            rec(i + 1);
            return;
        }
        img[i - 1] = i;
        rec(i + 1);
        img[i - 1] = 0;
        for (int j = i + 1; j <= n; ++j) {
            if (img[j - 1] != 0) continue;
            img[i - 1] = j;
            img[j - 1] = i;
            rec(i + 1);
            img[i - 1] = 0;
            img[j - 1] = 0;
        }
    };
    rec(1);
    return out;
}

} // namespace maxweight
