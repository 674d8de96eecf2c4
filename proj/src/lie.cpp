#include "maxweight/lie.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace maxweight {

CartanData CartanData::build(Family family, int rank) {
    if (rank < 1 || rank > 9)
        throw std::invalid_argument("CartanData: rank must be between 1 and 9");
    if (family == Family::D && rank < 3)
        throw std::invalid_argument("CartanData: type D needs rank >= 3");
    if ((family == Family::B || family == Family::C) && rank < 2)
        throw std::invalid_argument("CartanData: types B and C need rank >= 2");

    CartanData data;
    data.family = family;
    data.rank = rank;
    auto& a = data.cartan;
    a.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (family) {
        case Family::A:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            data.dsym2.assign(rank, 2);
            break;
        case Family::B:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 1][rank - 2] = -2; // short last root
            data.dsym2.assign(rank, 2);
            data.dsym2[rank - 1] = 1;
            break;
        case Family::C:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 2][rank - 1] = -2; // long last root
            data.dsym2.assign(rank, 1);
            data.dsym2[rank - 1] = 2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
            link(rank - 3, rank - 1);
            data.dsym2.assign(rank, 2);
            break;
    }

    // close the simple roots under root strings
    std::set<std::vector<int>> roots;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        roots.insert(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(roots.begin(), roots.end());
        for (const auto& beta : snapshot) {
            for (int i = 0; i < rank; ++i) {
                long long pairing = data.pair_coroot(i, beta);
                // q = how far the string extends downward
                int q = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = true, zero = true;
                    for (int v : down) {
                        if (v < 0) nonneg = false;
                        if (v != 0) zero = false;
                    }
                    if (zero || !nonneg || !roots.count(down)) break;
                    ++q;
                }
                if (q - pairing > 0) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) grew = true;
                }
            }
        }
    }
    data.positive_roots.assign(roots.begin(), roots.end());
    return data;
}

long long CartanData::pair_coroot(int i, const std::vector<int>& beta) const {
    long long total = 0;
    for (int j = 0; j < rank; ++j) total += static_cast<long long>(cartan[i][j]) * beta[j];
    return total;
}

long long CartanData::form2(const WeightVec& mu_fund, const std::vector<int>& beta) const {
    // (mu | alpha_j) = d_j <h_j, mu>
    long long total = 0;
    for (int j = 0; j < rank; ++j) total += static_cast<long long>(beta[j]) * dsym2[j] * mu_fund[j];
    return total;
}

bool is_dominant(const WeightVec& w) {
    for (long long v : w)
        if (v < 0) return false;
    return true;
}

WeightVec dominantize(const CartanData& cartan, WeightVec w) {
    const int n = cartan.rank;
    while (true) {
        int i = -1;
        for (int j = 0; j < n; ++j)
            if (w[j] < 0) {
                i = j;
                break;
            }
        if (i < 0) return w;
        long long c = w[i];
        for (int j = 0; j < n; ++j) w[j] -= c * cartan.cartan[j][i]; // s_i
    }
}

BigInt WeightSystem::multiplicity(const WeightVec& mu) const {
    WeightVec dom = dominantize(cartan, mu);
    for (const auto& [depth, entry] : dominant)
        if (entry.first == dom) return entry.second;
    return 0;
}

WeightSystem freudenthal_table(const CartanData& cartan, const WeightVec& lambda) {
    const int n = cartan.rank;
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("freudenthal: weight has wrong rank");
    if (!is_dominant(lambda)) throw std::invalid_argument("freudenthal: lambda must be dominant");

    // generate the full weight hull by lowering along dominance strings
    std::map<std::vector<int>, WeightVec> hull; // depth -> fund coords
    std::vector<int> zero(n, 0);
    hull[zero] = lambda;
    std::vector<std::vector<int>> frontier{zero};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& depth : frontier) {
            const WeightVec& w = hull[depth];
            for (int i = 0; i < n; ++i) {
                if (w[i] <= 0) continue;
                std::vector<int> d = depth;
                WeightVec v = w;
                for (long long j = 1; j <= w[i]; ++j) {
                    d[i] += 1;
                    for (int t = 0; t < n; ++t) v[t] -= cartan.cartan[t][i];
                    if (hull.emplace(d, v).second) next.push_back(d);
                }
            }
        }
        frontier = std::move(next);
    }

    WeightVec rho(n, 1);
    WeightVec lam_rho = lambda;
    for (int i = 0; i < n; ++i) lam_rho[i] += 1;

    WeightSystem out;
    out.cartan = cartan;
    out.lambda = lambda;

    // dominant weights by increasing depth height
    std::vector<std::pair<int, std::vector<int>>> order;
    for (const auto& [depth, w] : hull) {
        if (!is_dominant(w)) continue;
        int h = 0;
        for (int v : depth) h += v;
        order.push_back({h, depth});
    }
    std::sort(order.begin(), order.end());

    std::map<std::vector<int>, BigInt> mult;
    // secondary index: dominant fund coords -> depth
    std::map<WeightVec, std::vector<int>> dom_index;
    for (const auto& [h, depth] : order) dom_index[hull[depth]] = depth;

    for (const auto& [h, depth] : order) {
        const WeightVec& mu = hull[depth];
        if (h == 0) {
            mult[depth] = 1;
            continue;
        }
        // denominator 2*((lambda+rho | lambda+rho) - (mu+rho | mu+rho))
        //            = 2*(lambda + mu + 2 rho | lambda - mu)
        WeightVec sum = lam_rho;
        for (int i = 0; i < n; ++i) sum[i] += mu[i] + 1;
        long long denom = cartan.form2(sum, depth);
        if (denom == 0) throw std::logic_error("freudenthal: vanishing denominator");
        BigInt numer = 0;
        for (const auto& alpha : cartan.positive_roots) {
            std::vector<int> up = depth;
            while (true) {
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    up[i] -= alpha[i];
                    if (up[i] < 0) ok = false;
                }
                if (!ok) break;
                auto it = hull.find(up);
                if (it == hull.end()) break;
                WeightVec dom = dominantize(cartan, it->second);
                auto di = dom_index.find(dom);
                if (di == dom_index.end())
                    throw std::logic_error("freudenthal: weight hull is not Weyl-stable");
                const BigInt& m_up = mult[di->second];
                if (!m_up.is_zero()) numer += m_up * BigInt(cartan.form2(it->second, alpha));
            }
        }
        numer *= BigInt(2);
        BigInt q = numer / BigInt(denom);
        if (q * BigInt(denom) != numer)
            throw std::logic_error("freudenthal: non-integral multiplicity");
        mult[depth] = q;
    }

    for (const auto& [h, depth] : order)
        out.dominant[depth] = {hull[depth], mult[depth]};
    return out;
}

bool in_root_lattice(const CartanData& cartan, const std::vector<long long>& fund,
                     std::vector<long long>* coords) {
    const int n = cartan.rank;
    // solve cartan * x = fund over the rationals
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = BigRat(BigInt(cartan.cartan[i][j]));
        m[i][n] = BigRat(BigInt(fund[i]));
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].num.is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false; // Cartan matrices are invertible
        std::swap(m[col], m[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].num.is_zero()) continue;
            BigRat factor(m[r][col].num * m[col][col].den, m[r][col].den * m[col][col].num);
            for (int c = col; c <= n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    std::vector<long long> x(n);
    for (int i = 0; i < n; ++i) {
        BigRat v(m[i][n].num * m[i][i].den, m[i][n].den * m[i][i].num);
        if (!v.is_integer()) return false;
        x[i] = v.num.to_ll();
    }
    if (coords) *coords = x;
    return true;
}

BigInt freudenthal(const CartanData& cartan, const WeightVec& lambda, const WeightVec& mu) {
    const int n = cartan.rank;
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("freudenthal: weight has wrong rank");
    std::vector<long long> diff(n);
    for (int i = 0; i < n; ++i) diff[i] = lambda[i] - mu[i];
    if (!in_root_lattice(cartan, diff))
        throw std::invalid_argument("freudenthal: mu is not below lambda in the root lattice");
    WeightVec dom = dominantize(cartan, mu);
    WeightSystem table = freudenthal_table(cartan, lambda);
    for (const auto& [depth, entry] : table.dominant)
        if (entry.first == dom) return entry.second;
    return 0;
}

std::vector<WeightVec> dominant_weights(const CartanData& cartan, const WeightVec& lambda) {
    WeightSystem table = freudenthal_table(cartan, lambda);
    std::vector<WeightVec> out;
    for (const auto& [depth, entry] : table.dominant)
        if (!entry.second.is_zero()) out.push_back(entry.first);
    return out;
}

BigInt weyl_dimension(const CartanData& cartan, const WeightVec& lambda) {
    const int n = cartan.rank;
    WeightVec lam_rho = lambda, rho(n, 1);
    for (int i = 0; i < n; ++i) lam_rho[i] += 1;
    BigInt num = 1, den = 1;
    for (const auto& alpha : cartan.positive_roots) {
        num *= BigInt(cartan.form2(lam_rho, alpha));
        den *= BigInt(cartan.form2(rho, alpha));
    }
    return num.div_exact(den);
}

BigInt dimension_by_multiplicities(const CartanData& cartan, const WeightVec& lambda) {
    const int n = cartan.rank;
    WeightSystem table = freudenthal_table(cartan, lambda);
    std::map<WeightVec, BigInt> dom_mult;
    for (const auto& [depth, entry] : table.dominant) dom_mult[entry.first] = entry.second;

    // regenerate the full hull and sum through dominant representatives
    std::map<std::vector<int>, WeightVec> hull;
    std::vector<int> zero(n, 0);
    hull[zero] = lambda;
    std::vector<std::vector<int>> frontier{zero};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& depth : frontier) {
            const WeightVec w = hull[depth];
            for (int i = 0; i < n; ++i) {
                if (w[i] <= 0) continue;
                std::vector<int> d = depth;
                WeightVec v = w;
                for (long long j = 1; j <= w[i]; ++j) {
                    d[i] += 1;
                    for (int t = 0; t < n; ++t) v[t] -= cartan.cartan[t][i];
                    if (hull.emplace(d, v).second) next.push_back(d);
                }
            }
        }
        frontier = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [depth, w] : hull) {
        auto it = dom_mult.find(dominantize(cartan, w));
        if (it != dom_mult.end()) total += it->second;
    }
    return total;
}

WeightVec tilde_omega_B(int rank, int t) {
    WeightVec w(rank, 0);
    if (t == 0) return w;
    if (t < 0 || t > rank) throw std::invalid_argument("tilde_omega_B: index out of range");
    if (t == rank)
        w[rank - 1] = 2;
    else
        w[t - 1] = 1;
    return w;
}

WeightVec tilde_omega_D(int rank, int t) {
    WeightVec w(rank, 0);
    if (t == 0) return w;
    if (t < 0 || t > rank) throw std::invalid_argument("tilde_omega_D: index out of range");
    if (t == rank) {
        w[rank - 1] = 2;
    } else if (t == rank - 1) {
        w[rank - 2] = 1;
        w[rank - 1] = 1;
    } else {
        w[t - 1] = 1;
    }
    return w;
}

} // namespace maxweight
