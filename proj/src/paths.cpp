#include "maxweight/paths.hpp"

#include "maxweight/partition.hpp"
#include "maxweight/tableau.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace maxweight {

LatticePath::LatticePath(const std::string& word) {
    for (char c : word) {
        switch (c) {
            case 'U': steps.push_back(Step::U); break;
            case 'H': steps.push_back(Step::H); break;
            case 'D': steps.push_back(Step::D); break;
            default: throw std::invalid_argument("LatticePath: step must be U, H or D");
        }
    }
}

int LatticePath::end_height() const {
    int h = 0;
    for (Step s : steps) h += (s == Step::U) - (s == Step::D);
    return h;
}

std::string LatticePath::to_string() const {
    std::string w;
    for (Step s : steps) w.push_back(static_cast<char>(s));
    return w;
}

bool LatticePath::is_kind(PathKind kind) const {
    int h = 0;
    for (Step s : steps) {
        if (s == Step::H) {
            if (kind == PathKind::Dyck || kind == PathKind::Pascal) return false;
            if (kind == PathKind::Riordan && h == 0) return false;
        }
        h += (s == Step::U) - (s == Step::D);
        if (h < 0 && kind != PathKind::Pascal) return false;
    }
    return true;
}

namespace {

// memoized recursion tables, grown on demand behind one lock
class Table {
public:
    explicit Table(std::function<BigInt(int, int, const Table&)> rec) : rec_(std::move(rec)) {}

    BigInt at(int m, int s) const {
        {
            std::lock_guard<std::recursive_mutex> hold(lock_);
            auto it = cache_.find({m, s});
            if (it != cache_.end()) return it->second;
        }
        BigInt v = rec_(m, s, *this);
        std::lock_guard<std::recursive_mutex> hold(lock_);
        return cache_.emplace(std::make_pair(m, s), std::move(v)).first->second;
    }

private:
    std::function<BigInt(int, int, const Table&)> rec_;
    mutable std::recursive_mutex lock_;
    mutable std::map<std::pair<int, int>, BigInt> cache_;
};

const Table& motzkin_table() {
    static Table t([](int m, int s, const Table& self) -> BigInt {
        if (s < 0 || s > m) return 0;
        if (m == 0) return 1;
        return self.at(m - 1, s) + self.at(m - 1, s - 1) + self.at(m - 1, s + 1);
    });
    return t;
}

const Table& riordan_table() {
    static Table t([](int m, int s, const Table& self) -> BigInt {
        if (s < 0 || s > m) return 0;
        if (m == 0) return s == 0 ? 1 : 0;
        if (s == 0) return self.at(m - 1, 1);
        return self.at(m - 1, s) + self.at(m - 1, s - 1) + self.at(m - 1, s + 1);
    });
    return t;
}

const Table& catalan_table() {
    static Table t([](int m, int s, const Table& self) -> BigInt {
        if (s < 0 || s > m) return 0;
        if (m == 0) return s == 0 ? 1 : 0;
        return self.at(m - 1, s - 1) + self.at(m - 1, s + 1);
    });
    return t;
}

} // namespace

BigInt motzkin_number(int m, int s) { return motzkin_table().at(m, s); }
BigInt riordan_number(int m, int s) { return riordan_table().at(m, s); }
BigInt catalan_number(int m, int s) { return catalan_table().at(m, s); }

BigInt pascal_number(int m, int s) {
    if (s < 0 || s > m || ((m - s) % 2) != 0) return 0;
    return binomial(m, (m - s) / 2);
}

BigInt motzkin_closed(int m, int s) {
    if (s < 0 || s > m) return 0;
    // sum over the number of D steps i: choose the 2i+s non-horizontal
    // positions, then a ballot count for the U/D subword
    BigInt total = 0;
    for (int i = 0; 2 * i + s <= m; ++i) {
        BigInt ballot = binomial(2 * i + s, i) - binomial(2 * i + s, i - 1);
        total += binomial(m, 2 * i + s) * ballot;
    }
    return total;
}

BigInt riordan_row_closed(int m) {
    if (m == 0) return 1;
    if (m == 1) return 0;
    BigInt total = 0;
    for (int i = 1; i <= m / 2; ++i)
        total += binomial(m + 1, i) * binomial(m - i - 1, i - 1);
    return total.div_exact(BigInt(m + 1));
}

BigInt catalan_closed(int m, int s) {
    if (s < 0 || s > m || ((m - s) % 2) != 0) return 0;
    // ballot form of the half-integer factorial expression
    return binomial(m, (m - s) / 2) - binomial(m, (m - s) / 2 - 1);
}

BigInt pascal_closed(int m, int s) { return pascal_number(m, s); }

std::vector<LatticePath> enumerate_paths(PathKind kind, int m, int s) {
    if (m > enumeration_bound())
        throw bound_error("enumerate_paths: length exceeds enumeration bound");
    std::vector<LatticePath> out;
    std::vector<Step> cur;
    std::function<void(int, int)> rec = [&](int pos, int h) {
        if (pos == m) {
            if (h == s) out.emplace_back(cur);
            return;
        }
        int remaining = m - pos;
        for (Step st : {Step::U, Step::H, Step::D}) {
            if (st == Step::H && (kind == PathKind::Dyck || kind == PathKind::Pascal)) continue;
            if (st == Step::H && kind == PathKind::Riordan && h == 0) continue;
            int nh = h + (st == Step::U) - (st == Step::D);
            if (nh < 0 && kind != PathKind::Pascal) continue;
            if (nh - (remaining - 1) > s || nh + (remaining - 1) < s) continue;
            cur.push_back(st);
            rec(pos + 1, nh);
            cur.pop_back();
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

LatticePath nr_shift(const LatticePath& p) {
    if (!p.is_kind(PathKind::Motzkin))
        throw std::invalid_argument("nr_shift: input is not a Motzkin path");
    std::vector<Step> steps = p.steps;
    int h = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::H && h == 0) {
            steps[i] = Step::U;
            return LatticePath(std::move(steps));
        }
        h += (steps[i] == Step::U) - (steps[i] == Step::D);
    }
    throw std::invalid_argument("nr_shift: no horizontal step on the axis");
}

TriangleTable TriangleTable::build(Kind kind, int rows) {
    TriangleTable t;
    t.kind = kind;
    for (int m = 0; m < rows; ++m) {
        int s_max = kind == Kind::Bessel ? m + 1 : m; // spin limits live at m >= s-1
        for (int s = 0; s <= s_max; ++s) {
            BigInt v;
            switch (kind) {
                case Kind::Motzkin: v = motzkin_number(m, s); break;
                case Kind::Riordan: v = riordan_number(m, s); break;
                case Kind::Catalan: v = catalan_number(m, s); break;
                case Kind::Pascal: v = pascal_number(m, s); break;
                case Kind::Bessel:
                    // the spin limits follow this product only off parity;
                    // the array leaves the other positions empty
                    if (m < s - 1 || (m - s) % 2 == 0) continue;
                    v = binomial(m + 1, s) * double_factorial(m - s);
                    break;
            }
            t.entries[{m, s}] = std::move(v);
        }
    }
    return t;
}

std::vector<IdentityReport> verify_path_identities(int m_max) {
    std::vector<IdentityReport> out;

    auto report = [&](const std::string& name, std::function<bool(std::string&)> body) {
        IdentityReport r;
        r.name = name;
        r.max_m = m_max;
        r.ok = body(r.detail);
        out.push_back(std::move(r));
    };

    report("M_m = R_m + R_{m+1}", [&](std::string& detail) {
        for (int m = 0; m <= m_max; ++m) {
            if (motzkin_number(m, 0) != riordan_number(m, 0) + riordan_number(m + 1, 0)) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    report("3^m = sum (s+1) M_(m,s)", [&](std::string& detail) {
        for (int m = 0; m <= m_max; ++m) {
            BigInt lhs = 1, rhs = 0;
            for (int i = 0; i < m; ++i) lhs *= BigInt(3);
            for (int s = 0; s <= m; ++s) rhs += BigInt(s + 1) * motzkin_number(m, s);
            if (lhs != rhs) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    report("3^m = sum (2s+1) R_(m,s)", [&](std::string& detail) {
        for (int m = 0; m <= m_max; ++m) {
            BigInt lhs = 1, rhs = 0;
            for (int i = 0; i < m; ++i) lhs *= BigInt(3);
            for (int s = 0; s <= m; ++s) rhs += BigInt(2 * s + 1) * riordan_number(m, s);
            if (lhs != rhs) {
                detail = "m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    report("R_(m,s) = M_(m-1,s) + M_(m-1,s-1) - R_(m-1,s)", [&](std::string& detail) {
        for (int m = 1; m <= m_max; ++m) {
            for (int s = 1; s <= m; ++s) {
                BigInt rhs = motzkin_number(m - 1, s) + motzkin_number(m - 1, s - 1) -
                             riordan_number(m - 1, s);
                if (riordan_number(m, s) != rhs) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    report("R_(m,s) = sum (-1)^i (M_(m-1-i,s) + M_(m-1-i,s-1))", [&](std::string& detail) {
        for (int m = 1; m <= m_max; ++m) {
            for (int s = 1; s <= m; ++s) {
                BigInt rhs = 0;
                for (int i = 0; i <= m - s; ++i) {
                    BigInt term = motzkin_number(m - 1 - i, s) + motzkin_number(m - 1 - i, s - 1);
                    rhs += (i % 2 == 0) ? term : -term;
                }
                if (riordan_number(m, s) != rhs) {
                    detail = "(m,s)=(" + std::to_string(m) + "," + std::to_string(s) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    return out;
}

} // namespace maxweight
