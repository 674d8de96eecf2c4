#include "maxweight/formulas.hpp"

#include "maxweight/partition.hpp"
#include "maxweight/paths.hpp"
#include "maxweight/rigid.hpp"
#include "maxweight/tableau.hpp"

#include <stdexcept>

namespace maxweight {

namespace {

// Sum of hook-length counts over shapes of m with at most k rows and an
// optional filter; this is the shape-level oracle the closed forms are
// paired with.
template <typename Pred>
BigInt shape_sum(int m, int k, Pred keep) {
    if (k == 0) return (m == 0 && keep(Partition())) ? BigInt(1) : BigInt(0);
    BigInt total = 0;
    for (const Partition& lam : partitions_of(m, k))
        if (keep(lam)) total += count_syt(SkewShape{lam, Partition()});
    return total;
}

int odd_rows(const Partition& lam) {
    int odd = 0;
    for (int p : lam.parts) odd += p & 1;
    return odd;
}

} // namespace

BigInt b_rows_atmost(int m, int k) {
    if (m < 0) return 0;
    switch (k) {
        case 2:
            return binomial(m, m / 2);
        case 3: {
            BigInt total = 0;
            for (int i = 0; 2 * i <= m; ++i) total += catalan(i) * binomial(m, 2 * i);
            return total;
        }
        case 4:
            return catalan((m + 2) / 2) * catalan((m + 1) / 2);
        case 5: {
            BigRat total(BigInt(0));
            for (int i = 0; 2 * i <= m; ++i) {
                BigRat term(binomial(m, 2 * i) * factorial(2 * i + 2) * catalan(i) * BigInt(6),
                            factorial(i + 2) * factorial(i + 3));
                total = total + term;
            }
            if (!total.is_integer()) throw std::logic_error("b_rows_atmost: k=5 sum not integral");
            return total.num;
        }
        default:
            throw std::invalid_argument("b_rows_atmost: closed forms exist for k = 2..5 only");
    }
}

BigInt sB2(int m, int s) {
    if (s < 0 || s > m) return 0;
    return binomial(m, (m - s) / 2);
}

BigInt sD2_u(int u, int s) {
    if (u < 0 || s < 0) return 0;
    return binomial(2 * u + s - (s == 0 ? 1 : 0), u);
}

BigInt sB3(int m, int s) { return motzkin_closed(m, s); }

BigInt sD3(int m, int s) {
    if (m < s - 1 || s < 0) return 0;
    BigInt total = 0;
    if (s >= 1) {
        for (int i = 0; i <= m + 1 - s; ++i) {
            BigInt term = motzkin_closed(m - i, s) + motzkin_closed(m - i, s - 1);
            total += (i % 2 == 0) ? term : -term;
        }
    } else {
        // s = 0 reduces through |0D_m| = |1D_{m-1}| to the level above
        for (int i = 0; i <= m - 1; ++i) {
            BigInt term = motzkin_closed(m - 1 - i, 1) + motzkin_closed(m - 1 - i, 0);
            total += (i % 2 == 0) ? term : -term;
        }
    }
    return total;
}

BigInt d45(int cells, int k) {
    if (cells < 0) return 0;
    const bool odd = cells % 2 == 1;
    const int m = odd ? (cells + 1) / 2 : cells / 2;
    if (k == 4) {
        if (odd) { // binom(C_m + 1, 2)
            BigInt c = catalan(m);
            return (c * (c + BigInt(1))).div_exact(BigInt(2));
        }
        return catalan(m) * catalan(m + 1) - catalan(m) * catalan(m);
    }
    if (k == 5) {
        BigRat total(BigInt(0));
        if (odd) {
            for (int i = 0; i <= m; ++i)
                total = total + BigRat(binomial(2 * m, 2 * i) * catalan(i) * catalan(i + 1));
            for (int i = 0; i + 1 <= m; ++i)
                total = total - BigRat(binomial(2 * m, 2 * i + 1) * catalan(i + 1) * catalan(i + 1));
        } else {
            for (int i = 0; i <= m; ++i)
                total = total + BigRat(BigInt(2 * i) * binomial(2 * m, 2 * i) * catalan(i) *
                                           catalan(i + 1),
                                       BigInt(i + 3));
            for (int i = 0; i + 1 <= m; ++i)
                total = total - BigRat(BigInt(2 * i) * binomial(2 * m, 2 * i + 1) * catalan(i + 1) *
                                           catalan(i + 1),
                                       BigInt(i + 3));
        }
        if (!total.is_integer()) throw std::logic_error("d45: k=5 sum not integral");
        return total.num;
    }
    throw std::invalid_argument("d45: k must be 4 or 5");
}

namespace {

BigInt skt_k5_odd_total(int bigm) { // S(5,0)_{2M} = S(5,1)_{2M-1}
    BigInt total = 0;
    for (int i = 0; i <= bigm; ++i) total += binomial(2 * bigm, 2 * i) * catalan(i) * catalan(i + 1);
    for (int i = 0; i + 1 <= bigm; ++i)
        total -= binomial(2 * bigm, 2 * i + 1) * catalan(i + 1) * catalan(i + 1);
    return total;
}

BigInt skt_k5_t3(int bigm) { // S(5,3)_{2M-1}
    BigRat total(BigInt(0));
    for (int i = 0; i + 1 <= bigm; ++i)
        total = total + BigRat(BigInt(2 * i) * binomial(2 * bigm - 1, 2 * i) * catalan(i) *
                                   catalan(i + 1),
                               BigInt(i + 3));
    for (int i = 0; i + 1 <= bigm; ++i)
        total = total - BigRat(BigInt(2 * i) * binomial(2 * bigm - 1, 2 * i + 1) * catalan(i + 1) *
                                   catalan(i + 1),
                               BigInt(i + 3));
    if (!total.is_integer()) throw std::logic_error("s_kt: k=5 t=3 sum not integral");
    return total.num;
}

BigInt skt_k5_t5(int bigm) { // S(5,5)_{2M-1} = S(5,4)_{2M-2}
    BigInt total = 0;
    for (int i = 0; i + 1 <= bigm; ++i)
        total += binomial(2 * bigm - 1, 2 * i) * catalan(i) * catalan(i + 1);
    for (int i = 0; i + 1 <= bigm; ++i)
        total -= binomial(2 * bigm - 1, 2 * i + 1) * catalan(i + 1) * catalan(i + 1);
    return total;
}

} // namespace

BigInt s_kt(int m, int k, int t) {
    if (m < 0 || t < 0 || t > k) throw std::invalid_argument("s_kt: (k,t) outside the table");
    if (m % 2 != t % 2) return 0;
    if (m == 0) return t == 0 ? 1 : 0;
    switch (k) {
        case 0:
            return 0; // m > 0 needs at least one row
        case 1:
            return t <= 1 ? 1 : 0; // the single row has the parity of m
        case 2:
            switch (t) {
                case 0: return binomial(m - 1, m / 2);
                case 1: return binomial(m, (m + 1) / 2);
                case 2: return binomial(m - 1, m / 2);
            }
            break;
        case 3:
            switch (t) {
                case 0: return riordan_number(m, 0);
                case 1: return riordan_number(m + 1, 0);
                case 2: return riordan_number(m + 1, 0);
                case 3: return riordan_number(m, 0);
            }
            break;
        case 4: {
            auto choose2 = [](const BigInt& n) { return (n * (n - BigInt(1))).div_exact(BigInt(2)); };
            switch (t) {
                case 0: return choose2(catalan(m / 2) + BigInt(1));
                case 1: return choose2(catalan((m + 1) / 2) + BigInt(1));
                case 2: {
                    int mm = m / 2;
                    return catalan(mm) * catalan(mm + 1) - catalan(mm) * catalan(mm);
                }
                case 3: return choose2(catalan((m + 1) / 2));
                case 4: return choose2(catalan(m / 2));
            }
            break;
        }
        case 5:
            switch (t) {
                case 0: return skt_k5_odd_total(m / 2);
                case 1: return skt_k5_odd_total((m + 1) / 2);
                case 2: return d45(m, 5);
                case 3: return skt_k5_t3((m + 1) / 2);
                case 4: return skt_k5_t5((m + 2) / 2);
                case 5: return skt_k5_t5((m + 1) / 2);
            }
            break;
        default:
            throw std::invalid_argument("s_kt: closed forms exist for k <= 5 only");
    }
    throw std::invalid_argument("s_kt: (k,t) outside the table");
}

BigInt selberg(int m, int k) {
    if (k < 1 || m < 0) throw std::invalid_argument("selberg: need k >= 1, m >= 0");
    if (k % 2 == 0) {
        const int kk = k / 2;
        BigInt total = 0;
        std::vector<int> t(kk, 0);
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == kk - 1 || kk == 0) {
                if (kk > 0) t[pos] = remaining;
                std::vector<std::vector<BigInt>> mat(kk, std::vector<BigInt>(kk));
                for (int i = 1; i <= kk; ++i)
                    for (int j = 1; j <= kk; ++j) {
                        long long a = t[i - 1] + 2 * kk - i - j;
                        mat[i - 1][j - 1] = a < 0 ? BigInt(0) : binomial(a, a / 2);
                    }
                total += multinomial(t) * bareiss_determinant(std::move(mat));
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                t[pos] = v;
                rec(pos + 1, remaining - v);
            }
        };
        if (kk == 0) return m == 0 ? 1 : 0;
        rec(0, m);
        return total;
    }
    const int kk = (k - 1) / 2;
    BigInt total = 0;
    std::vector<int> t(kk + 1, 0); // t[0] is the free slot of the odd case
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == kk) {
            t[pos] = remaining;
            std::vector<std::vector<BigInt>> mat(kk, std::vector<BigInt>(kk));
            for (int i = 1; i <= kk; ++i)
                for (int j = 1; j <= kk; ++j) {
                    long long a = t[i] + 2 * kk - i - j; // rows use t_1..t_k
                    mat[i - 1][j - 1] =
                        (a < 0 || a % 2 != 0) ? BigInt(0) : catalan(static_cast<int>(a / 2));
                }
            total += multinomial(t) * bareiss_determinant(std::move(mat));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            t[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, m);
    return total;
}

BigInt b_infty(int m) {
    if (m < 0) return 0;
    BigInt total = 0;
    for (int s = 0; 2 * s <= m; ++s) total += binomial(m, 2 * s) * double_factorial(2 * s - 1);
    return total;
}

BigInt d_infty(int m) {
    if (m < 0) return 0;
    if (m % 2 == 1) return double_factorial(m);
    return BigInt(m / 2) * double_factorial(m - 1);
}

BigInt sB_infty(int m, int s) {
    if (s < 0 || s > m) return 0;
    return binomial(m, s) * b_infty(m - s);
}

BigInt sD_infty(int m, int s) {
    if (s < 0 || m < s - 1) return 0;
    if ((m - s) % 2 != 0) return binomial(m + 1, s) * double_factorial(m - s);
    return binomial(m, s) * d_infty(m - s) + binomial(m, s - 1) * d_infty(m - s + 1);
}

int stabilization_bound(int m, int s, StableFamily family) {
    switch (family) {
        case StableFamily::RigidB:
            return m - s + 2;
        case StableFamily::AlmostEvenD:
            return m % 2 == 1 ? (m + 1) / 2 : m / 2 + 1;
        case StableFamily::SpinRigidD:
            return m - s + 3;
    }
    throw std::invalid_argument("stabilization_bound: unknown family");
}

BigInt sB_at_bound_minus_1(int m, int s) {
    return binomial(m, s) * b_infty(m - s) - binomial(m - 1, s - 1);
}

BigInt sB_at_bound_minus_2(int m, int s) {
    // deficit m * binom(m-2, s-1), exact on the exhaustive table m <= 9
    return binomial(m, s) * b_infty(m - s) - BigInt(m) * binomial(m - 2, s - 1);
}

bool ReductionReport::all_ok() const {
    for (const auto& line : lines)
        if (!line.ok) return false;
    return true;
}

ReductionReport reduction_corollaries(int m) {
    if (m < 2) throw std::invalid_argument("reduction_corollaries: need m >= 2");
    ReductionReport report;
    auto check = [&](std::string name, BigInt formula, int cells, int rows) {
        BigInt enumerated((long long)enumerate_sD({cells, 0, rows}).size());
        bool ok = formula == enumerated;
        report.lines.push_back({std::move(name), std::move(formula), std::move(enumerated), ok});
    };

    check("|D^(m-1)_{2m-1}| = (2m-1)!! - C_m",
          double_factorial(2 * m - 1) - catalan(m), 2 * m - 1, m - 1);

    check("|D^(m)_{2m}| = m(2m-1)!! - 3(2m)!/((m-1)!(m+2)!)",
          BigInt(m) * double_factorial(2 * m - 1) -
              (BigInt(3) * factorial(2 * m)).div_exact(factorial(m - 1) * factorial(m + 2)),
          2 * m, m);

    if (m >= 3) {
        // two further shapes leave when the bound drops again: (3,2^{m-2})
        // and (4,2^{m-3},1), with hook-length counts in closed form
        BigInt f_a = binomial(2 * m - 1, m + 1);
        BigInt f_b = factorial(2 * m - 1).div_exact(BigInt(m) * BigInt(m + 2) * factorial(m - 1) *
                                                    factorial(m - 3));
        check("|D^(m-2)_{2m-1}| = (2m-1)!! - C_m - f(3,2^{m-2}) - f(4,2^{m-3},1)",
              double_factorial(2 * m - 1) - catalan(m) - f_a - f_b, 2 * m - 1, m - 2);

        // even case: shapes (3,2^{m-2},1) and (4,2^{m-3},1,1)
        BigInt f_c = (BigInt(4) * factorial(2 * m - 1))
                         .div_exact(BigInt(m + 2) * factorial(m) * factorial(m - 2));
        BigInt f_d = (BigInt(3) * factorial(2 * m))
                         .div_exact(BigInt(2 * m) * BigInt(m + 3) * factorial(m) * factorial(m - 3));
        check("|D^(m-1)_{2m}| = m(2m-1)!! - 3(2m)!/((m-1)!(m+2)!) - f(3,2^{m-2},1) - f(4,2^{m-3},1,1)",
              BigInt(m) * double_factorial(2 * m - 1) -
                  (BigInt(3) * factorial(2 * m)).div_exact(factorial(m - 1) * factorial(m + 2)) -
                  f_c - f_d,
              2 * m, m - 1);
    }
    return report;
}

std::vector<FormulaCheck> formula_verifications(int m_max) {
    std::vector<FormulaCheck> checks;
    auto add = [&](FormulaId id, std::string name, std::function<bool(std::string&)> run) {
        checks.push_back({id, std::move(name), std::move(run)});
    };

    for (int k = 2; k <= 5; ++k) {
        FormulaId id = k == 2   ? FormulaId::B2
                       : k == 3 ? FormulaId::B3
                       : k == 4 ? FormulaId::B4
                                : FormulaId::B5;
        add(id, "|B(" + std::to_string(k) + ")_m| closed form", [k, m_max](std::string& detail) {
            for (int m = 0; m <= m_max; ++m) {
                if (b_rows_atmost(m, k) != shape_sum(m, k, [](const Partition&) { return true; })) {
                    detail = "m=" + std::to_string(m);
                    return false;
                }
            }
            return true;
        });
    }

    add(FormulaId::sB2f, "|sB(2)_m| = binom(m, floor((m-s)/2))", [m_max](std::string& detail) {
        for (int m = 0; m <= m_max; ++m)
            for (int s = 0; s <= m; ++s)
                if (sB2(m, s) != BigInt((long long)enumerate_sB({m, s, 2}).size())) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
        return true;
    });

    add(FormulaId::sB3f, "|sB(3)_m| = M_(m,s)", [m_max](std::string& detail) {
        for (int m = 0; m <= m_max; ++m)
            for (int s = 0; s <= m; ++s)
                if (sB3(m, s) != motzkin_number(m, s) ||
                    sB3(m, s) != BigInt((long long)enumerate_sB({m, s, 3}).size())) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
        return true;
    });

    add(FormulaId::sD2f, "|sD(2)_{2u-1+s}| = binom(2u+s-[s=0], u)", [m_max](std::string& detail) {
        for (int u = 0; 2 * u - 1 <= m_max; ++u)
            for (int s = 0; 2 * u - 1 + s <= m_max; ++s) {
                int cells = 2 * u - 1 + s;
                if (cells < 0) continue;
                if (sD2_u(u, s) != BigInt((long long)enumerate_sD({cells, s, 2}).size())) {
                    detail = "(u,s)=(" + std::to_string(u) + "," + std::to_string(s) + ")";
                    return false;
                }
            }
        return true;
    });

    add(FormulaId::sD3f, "|sD(3)_m| = R_(m+1,s)", [m_max](std::string& detail) {
        for (int m = 0; m <= m_max; ++m)
            for (int s = 0; s <= m + 1; ++s)
                if (sD3(m, s) != riordan_number(m + 1, s) ||
                    sD3(m, s) != BigInt((long long)enumerate_sD({m, s, 3}).size())) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
        return true;
    });

    add(FormulaId::D4, "|0D(4)_m| closed form", [m_max](std::string& detail) {
        for (int cells = 0; cells <= m_max; ++cells)
            if (d45(cells, 4) !=
                shape_sum(cells, 4, [](const Partition& lam) { return odd_rows(lam) == 1 || odd_rows(lam) == 2; })) {
                detail = "cells=" + std::to_string(cells);
                return false;
            }
        return true;
    });

    add(FormulaId::D5, "|0D(5)_m| closed form", [m_max](std::string& detail) {
        for (int cells = 0; cells <= m_max; ++cells)
            if (d45(cells, 5) !=
                shape_sum(cells, 5, [](const Partition& lam) { return odd_rows(lam) == 1 || odd_rows(lam) == 2; })) {
                detail = "cells=" + std::to_string(cells);
                return false;
            }
        return true;
    });

    add(FormulaId::Skt, "|S(k,t)_m| full table", [m_max](std::string& detail) {
        for (int k = 0; k <= 5; ++k)
            for (int t = 0; t <= k; ++t)
                for (int m = 0; m <= m_max; ++m)
                    if (s_kt(m, k, t) != shape_sum(m, k, [t](const Partition& lam) { return odd_rows(lam) == t; })) {
                        detail = "(m,k,t)=(" + std::to_string(m) + "," + std::to_string(k) + "," +
                                 std::to_string(t) + ")";
                        return false;
                    }
        return true;
    });

    add(FormulaId::SelbergEven, "determinant |S(2k)_m|", [m_max](std::string& detail) {
        for (int k = 2; k <= 6; k += 2)
            for (int m = 0; m <= m_max; ++m)
                if (selberg(m, k) != shape_sum(m, k, [](const Partition&) { return true; })) {
                    detail = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
                    return false;
                }
        return true;
    });

    add(FormulaId::SelbergOdd, "determinant |S(2k+1)_m|", [m_max](std::string& detail) {
        for (int k = 1; k <= 5; k += 2)
            for (int m = 0; m <= m_max; ++m)
                if (selberg(m, k) != shape_sum(m, k, [](const Partition&) { return true; })) {
                    detail = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
                    return false;
                }
        return true;
    });

    add(FormulaId::S6, "|S(6)_m| agrees with the k <= 5 closed forms too", [m_max](std::string& detail) {
        for (int m = 0; m <= m_max; ++m) {
            if (selberg(m, 6) != shape_sum(m, 6, [](const Partition&) { return true; })) {
                detail = "m=" + std::to_string(m);
                return false;
            }
            for (int k = 2; k <= 5; ++k)
                if (selberg(m, k) != b_rows_atmost(m, k)) {
                    detail = "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
                    return false;
                }
        }
        return true;
    });

    add(FormulaId::Binfty, "B_infty(m) counts involutions", [m_max](std::string& detail) {
        for (int m = 0; m <= m_max; ++m) {
            BigInt inv = 0;
            for (int k = 0; k <= m; ++k) {
                if ((m - k) % 2) continue;
                inv += binomial(m, k) * double_factorial(m - k - 1);
            }
            if (b_infty(m) != inv) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    add(FormulaId::Dinfty, "D_infty(m) = I(m,1)+I(m,2) piecewise", [m_max](std::string& detail) {
        for (int m = 1; m <= m_max; ++m) {
            int fp = m % 2 == 1 ? 1 : 2;
            BigInt expect = binomial(m, fp) * double_factorial(m - fp - 1);
            if (d_infty(m) != expect) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    add(FormulaId::sBinfty, "sB_infty stabilizes the rigid counts", [m_max](std::string& detail) {
        int cap = std::min(m_max, 9);
        for (int m = 0; m <= cap; ++m)
            for (int s = 0; s <= m; ++s) {
                int k = stabilization_bound(m, s, StableFamily::RigidB);
                if (sB_infty(m, s) != BigInt((long long)enumerate_sB({m, s, k}).size())) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
            }
        return true;
    });

    add(FormulaId::sDinfty, "sD_infty stabilizes the spin counts", [m_max](std::string& detail) {
        int cap = std::min(m_max, 9);
        for (int m = 0; m <= cap; ++m)
            for (int s = 0; s <= m + 1; ++s) {
                int k = stabilization_bound(m, s, StableFamily::SpinRigidD);
                if (sD_infty(m, s) != BigInt((long long)enumerate_sD({m, s, k}).size())) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
            }
        return true;
    });

    add(FormulaId::InvCount, "I(2m,0) = I(2m-1,1) = (2m-1)!!", [m_max](std::string& detail) {
        for (int m = 1; 2 * m <= std::min(m_max, 12); ++m) {
            BigInt expect = double_factorial(2 * m - 1);
            BigInt a = shape_sum(2 * m, 2 * m, [](const Partition& lam) {
                Partition conj = lam.conjugate();
                int odd = 0;
                for (int p : conj.parts) odd += p & 1;
                return odd == 0;
            });
            BigInt b = shape_sum(2 * m - 1, 2 * m - 1, [](const Partition& lam) {
                Partition conj = lam.conjugate();
                int odd = 0;
                for (int p : conj.parts) odd += p & 1;
                return odd == 1;
            });
            if (a != expect || b != expect) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    add(FormulaId::Reduction, "reduction identities", [m_max](std::string& detail) {
        for (int m = 2; m <= std::min(m_max / 2 + 1, 5); ++m) {
            if (!reduction_corollaries(m).all_ok()) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    return checks;
}

} // namespace maxweight
