#include "maxweight/youngwall.hpp"

#include "maxweight/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace maxweight {

namespace {

// Bottom buildable color of a half-thickness column: the ground holds the
// other color of the split pair.
int bottom_color(Ground g, int col) {
    if (g == Ground::Lambda0) return col % 2 == 1 ? 0 : 1;
    return col % 2 == 1 ? 1 : 0; // Lambda1 starts one column later
}

} // namespace

std::vector<Slot> pattern_cell(Ground g, int n, int col, int cell) {
    if (n < 2) throw std::invalid_argument("pattern_cell: rank must be at least 2");
    if (cell < 1) throw std::invalid_argument("pattern_cell: cells start at 1");
    const int period = 2 * n - 2;
    const int r = (cell - 1) % period + 1;
    std::vector<Slot> out;
    if (g == Ground::LambdaN) {
        if (r == 1) {
            if (cell == 1) {
                out.push_back({cell, SlotKind::HalfUpper, n}); // lower half is ground
            } else {
                out.push_back({cell, SlotKind::HalfLower, n});
                out.push_back({cell, SlotKind::HalfUpper, n});
            }
        } else if (r == n && n > 2) {
            int front = col % 2 == 1 ? 0 : 1;
            out.push_back({cell, SlotKind::SplitFront, front});
            out.push_back({cell, SlotKind::SplitBack, 1 - front});
        } else if (r == 2 && n == 2) { // period 2: the split follows directly
            int front = col % 2 == 1 ? 0 : 1;
            out.push_back({cell, SlotKind::SplitFront, front});
            out.push_back({cell, SlotKind::SplitBack, 1 - front});
        } else if (r <= n - 1) {
            out.push_back({cell, SlotKind::Full, n + 1 - r});
        } else {
            out.push_back({cell, SlotKind::Full, r - n + 1});
        }
        return out;
    }
    // half-thickness patterns
    int b = bottom_color(g, col);
    if (r == 1) {
        if (cell == 1) {
            out.push_back({cell, SlotKind::SplitBack, b}); // front half is ground
        } else {
            out.push_back({cell, SlotKind::SplitFront, 1 - b});
            out.push_back({cell, SlotKind::SplitBack, b});
        }
    } else if (r == n && n > 2) {
        out.push_back({cell, SlotKind::HalfLower, n});
        out.push_back({cell, SlotKind::HalfUpper, n});
    } else if (r == 2 && n == 2) {
        out.push_back({cell, SlotKind::HalfLower, n});
        out.push_back({cell, SlotKind::HalfUpper, n});
    } else if (r <= n - 1) {
        out.push_back({cell, SlotKind::Full, r});
    } else {
        out.push_back({cell, SlotKind::Full, 2 * n - r});
    }
    return out;
}

const YoungWall::Column& YoungWall::column(int u) const {
    static const Column empty{};
    if (u < 1) throw std::invalid_argument("YoungWall: columns are 1-based");
    if (u > columns()) return empty;
    return cols[u - 1];
}

std::vector<int> YoungWall::associated_partition() const {
    std::vector<int> parts;
    for (const auto& c : cols) parts.push_back(c.blocks);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

bool operator==(const YoungWall& a, const YoungWall& b) {
    if (a.g != b.g || a.n != b.n) return false;
    int m = std::max(a.columns(), b.columns());
    for (int u = 1; u <= m; ++u)
        if (!(a.column(u) == b.column(u))) return false;
    return true;
}

std::string YoungWall::to_string() const {
    std::string s = "[";
    for (int u = 1; u <= columns(); ++u) {
        if (u > 1) s += ",";
        s += std::to_string(column(u).blocks);
        if (column(u).pending == 1) s += "f";
        if (column(u).pending == 2) s += "b";
    }
    return s + "]";
}

YoungWall ground_wall(Ground g, int n) {
    YoungWall w;
    w.g = g;
    w.n = n;
    return w;
}

std::vector<Slot> column_slots(const YoungWall& w, int u) {
    const auto& c = w.column(u);
    std::vector<Slot> out;
    int remaining = c.blocks;
    for (int cell = 1; remaining > 0; ++cell) {
        auto slots = pattern_cell(w.g, w.n, u, cell);
        if (static_cast<int>(slots.size()) <= remaining) {
            for (const auto& s : slots) out.push_back(s);
            remaining -= static_cast<int>(slots.size());
            continue;
        }
        // one block inside a two-slot cell
        if (slots[0].kind == SlotKind::HalfLower) {
            out.push_back(slots[0]); // the lower half is forced
        } else {
            if (c.pending == 1)
                out.push_back(slots[0]); // front
            else if (c.pending == 2)
                out.push_back(slots[1]); // back
            else
                throw std::logic_error("column_slots: split choice missing");
        }
        remaining = 0;
    }
    return out;
}

namespace {

// Cell count when the column stops exactly at a cell boundary; -1 when a
// two-slot cell is only half filled.
int complete_cells(const YoungWall& w, int u) {
    int remaining = w.column(u).blocks;
    int cell = 0;
    while (remaining > 0) {
        ++cell;
        int size = static_cast<int>(pattern_cell(w.g, w.n, u, cell).size());
        if (remaining < size) return -1;
        remaining -= size;
    }
    return cell;
}

struct Pos {
    int cell;
    SlotKind kind;
    friend bool operator<(const Pos& a, const Pos& b) {
        return a.cell != b.cell ? a.cell < b.cell : a.kind < b.kind;
    }
    friend bool operator==(const Pos& a, const Pos& b) {
        return a.cell == b.cell && a.kind == b.kind;
    }
};

std::set<Pos> filled_positions(const YoungWall& w, int u) {
    std::set<Pos> out;
    for (const auto& s : column_slots(w, u)) out.insert({s.cell, s.kind});
    return out;
}

} // namespace

bool wall_well_formed(const YoungWall& w) {
    for (int u = 1; u <= w.columns(); ++u) {
        const auto& c = w.column(u);
        if (c.blocks < 0) return false;
        if (c.pending != 0) {
            // the pending flag must sit on a half-filled split cell
            int remaining = c.blocks;
            int cell = 0;
            bool split_top = false;
            while (remaining > 0) {
                ++cell;
                auto slots = pattern_cell(w.g, w.n, u, cell);
                if (remaining < static_cast<int>(slots.size())) {
                    split_top = slots[0].kind == SlotKind::SplitFront;
                    break;
                }
                remaining -= static_cast<int>(slots.size());
            }
            if (!split_top) return false;
        } else if (complete_cells(w, u) < 0) {
            int remaining = c.blocks;
            int cell = 0;
            while (remaining > 0) {
                ++cell;
                auto slots = pattern_cell(w.g, w.n, u, cell);
                if (remaining < static_cast<int>(slots.size())) {
                    if (slots[0].kind == SlotKind::SplitFront) return false; // needs a choice
                    break;
                }
                remaining -= static_cast<int>(slots.size());
            }
        }
    }
    // no free space to the right of any block
    for (int u = 2; u <= w.columns(); ++u) {
        auto mine = filled_positions(w, u);
        auto right = filled_positions(w, u - 1);
        for (const auto& p : mine)
            if (!right.count(p)) return false;
    }
    return true;
}

bool is_proper(const YoungWall& w) {
    std::set<int> heights;
    for (int u = 1; u <= w.columns(); ++u) {
        if (w.column(u).blocks == 0) continue;
        int h = complete_cells(w, u);
        if (h < 0) continue; // not a full column
        if (!heights.insert(h).second) return false;
    }
    return true;
}

std::vector<long long> wall_content(const YoungWall& w) {
    std::vector<long long> content(w.n + 1, 0);
    for (int u = 1; u <= w.columns(); ++u)
        for (const auto& s : column_slots(w, u)) content[s.color] += 1;
    return content;
}

bool is_reduced(const YoungWall& w) {
    // delta-column: a_i-many i-blocks stacked in one column; removing one
    // period from column u must leave a proper well-formed wall
    const int period_blocks = 2 * w.n;
    for (int u = 1; u <= w.columns(); ++u) {
        if (w.column(u).blocks < period_blocks) continue;
        YoungWall trial = w;
        trial.cols[u - 1].blocks -= period_blocks;
        if (wall_well_formed(trial) && is_proper(trial)) return false;
    }
    return true;
}

namespace {

struct Action {
    int col = 0;
    int delta = 0;    // +1 add, -1 remove
    int new_pending = 0;
    Slot slot;
};

YoungWall apply_action(const YoungWall& w, const Action& a) {
    YoungWall out = w;
    while (out.columns() < a.col) out.cols.push_back({});
    out.cols[a.col - 1].blocks += a.delta;
    out.cols[a.col - 1].pending = a.new_pending;
    while (!out.cols.empty() && out.cols.back().blocks == 0) out.cols.pop_back();
    return out;
}

// Candidate additions in one column, ignoring neighbour and properness.
std::vector<Action> raw_addables(const YoungWall& w, int u) {
    const auto& c = w.column(u);
    std::vector<Action> out;
    int remaining = c.blocks;
    int cell = 0;
    while (true) {
        ++cell;
        auto slots = pattern_cell(w.g, w.n, u, cell);
        int size = static_cast<int>(slots.size());
        if (remaining >= size) {
            remaining -= size;
            continue;
        }
        if (remaining == 0) {
            // cell is empty: lower half first, or either split half
            if (slots[0].kind == SlotKind::HalfLower) {
                out.push_back({u, +1, 0, slots[0]});
            } else if (slots[0].kind == SlotKind::SplitFront) {
                out.push_back({u, +1, 1, slots[0]});
                out.push_back({u, +1, 2, slots[1]});
            } else {
                out.push_back({u, +1, 0, slots[0]});
            }
        } else {
            // half-filled two-slot cell: complete it
            if (slots[0].kind == SlotKind::HalfLower) {
                out.push_back({u, +1, 0, slots[1]});
            } else if (c.pending == 1) {
                out.push_back({u, +1, 0, slots[1]});
            } else {
                out.push_back({u, +1, 0, slots[0]});
            }
        }
        return out;
    }
}

// Candidate removals in one column, ignoring neighbour and properness.
std::vector<Action> raw_removables(const YoungWall& w, int u) {
    const auto& c = w.column(u);
    std::vector<Action> out;
    if (c.blocks == 0) return out;
    int remaining = c.blocks;
    int cell = 0;
    while (true) {
        ++cell;
        auto slots = pattern_cell(w.g, w.n, u, cell);
        int size = static_cast<int>(slots.size());
        if (remaining > size) {
            remaining -= size;
            continue;
        }
        if (remaining == size) {
            // complete top cell: its exposed blocks come off
            if (size == 1) {
                out.push_back({u, -1, 0, slots[0]});
            } else if (slots[0].kind == SlotKind::HalfLower) {
                out.push_back({u, -1, 0, slots[1]}); // only the upper half
            } else {
                out.push_back({u, -1, 2, slots[0]}); // drop front, back stays
                out.push_back({u, -1, 1, slots[1]}); // drop back, front stays
            }
        } else {
            // half-filled cell: the present half comes off
            if (slots[0].kind == SlotKind::HalfLower) {
                out.push_back({u, -1, 0, slots[0]});
            } else if (c.pending == 1) {
                out.push_back({u, -1, 0, slots[0]});
            } else {
                out.push_back({u, -1, 0, slots[1]});
            }
        }
        return out;
    }
}

bool action_allowed(const YoungWall& w, const Action& a) {
    if (a.delta > 0) {
        // the position to the right must already be occupied
        if (a.col > 1) {
            auto right = filled_positions(w, a.col - 1);
            if (!right.count({a.slot.cell, a.slot.kind})) return false;
        }
    } else {
        // removing must not expose the column to the left
        auto left = filled_positions(w, a.col + 1);
        if (left.count({a.slot.cell, a.slot.kind})) return false;
    }
    YoungWall next = apply_action(w, a);
    return wall_well_formed(next) && is_proper(next);
}

} // namespace

// Successive same-color moves available in one column (at most two: the
// half-height pairs stack two blocks of one color in a cell).
static std::vector<Action> action_chain(const YoungWall& w, int u, int color, bool plus) {
    std::vector<Action> out;
    YoungWall cur = w;
    for (int step = 0; step < 2; ++step) {
        bool advanced = false;
        auto actions = plus ? raw_addables(cur, u) : raw_removables(cur, u);
        for (const auto& a : actions) {
            if (a.slot.color != color || !action_allowed(cur, a)) continue;
            out.push_back(a);
            cur = apply_action(cur, a);
            advanced = true;
            break;
        }
        if (!advanced) break;
    }
    return out;
}

std::vector<SignatureEntry> raw_signature(const YoungWall& w, int color) {
    std::vector<SignatureEntry> word;
    for (int u = w.columns() + 1; u >= 1; --u) {
        for (const auto& a : action_chain(w, u, color, false)) word.push_back({u, false, a.slot});
        for (const auto& a : action_chain(w, u, color, true)) word.push_back({u, true, a.slot});
    }
    return word;
}

std::vector<SignatureEntry> signature(const YoungWall& w, int color) {
    std::vector<SignatureEntry> stack;
    for (const auto& e : raw_signature(w, color)) {
        if (!e.plus && !stack.empty() && stack.back().plus)
            stack.pop_back(); // cancel a (+,-) pair
        else
            stack.push_back(e);
    }
    return stack;
}

std::vector<std::string> signature_symbols(const YoungWall& w, int color, int upto_col) {
    std::vector<std::string> out(upto_col, ".");
    for (const auto& e : raw_signature(w, color)) {
        if (e.col > upto_col) continue;
        std::string& s = out[upto_col - e.col]; // leftmost printed first
        if (s == ".") s.clear();
        s += e.plus ? "+" : "-";
    }
    return out;
}

int eps_i(const YoungWall& w, int color) {
    int count = 0;
    for (const auto& e : signature(w, color)) count += e.plus ? 0 : 1;
    return count;
}

int phi_i(const YoungWall& w, int color) {
    int count = 0;
    for (const auto& e : signature(w, color)) count += e.plus ? 1 : 0;
    return count;
}

namespace {

std::optional<Action> find_action(const YoungWall& w, int col, int color, bool plus) {
    auto chain = action_chain(w, col, color, plus);
    if (chain.empty()) return std::nullopt;
    return chain.front();
}

} // namespace

std::optional<YoungWall> crystal_e(const YoungWall& w, int color) {
    auto word = signature(w, color);
    // rightmost minus: the last one in the scan order
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!it->plus) {
            auto act = find_action(w, it->col, color, false);
            if (!act) throw std::logic_error("crystal_e: signature lost its action");
            return apply_action(w, *act);
        }
    }
    return std::nullopt;
}

std::optional<YoungWall> crystal_f(const YoungWall& w, int color) {
    auto word = signature(w, color);
    for (const auto& e : word) {
        if (e.plus) {
            auto act = find_action(w, e.col, color, true);
            if (!act) throw std::logic_error("crystal_f: signature lost its action");
            return apply_action(w, *act);
        }
    }
    return std::nullopt;
}

std::vector<YoungWall> wall_candidates(const std::vector<int>& partition, Ground g, int n) {
    for (size_t i = 1; i < partition.size(); ++i)
        if (partition[i - 1] < partition[i])
            throw std::invalid_argument("wall_candidates: parts must decrease weakly");
    std::vector<YoungWall> out;
    YoungWall base = ground_wall(g, n);
    for (int p : partition) base.cols.push_back({p, 0});
    // resolve split choices column by column
    std::function<void(YoungWall&, int)> rec = [&](YoungWall& w, int u) {
        if (u > w.columns()) {
            if (wall_well_formed(w) && is_proper(w)) out.push_back(w);
            return;
        }
        int remaining = w.column(u).blocks;
        int cell = 0;
        bool needs_choice = false;
        while (remaining > 0) {
            ++cell;
            auto slots = pattern_cell(g, n, u, cell);
            if (remaining < static_cast<int>(slots.size())) {
                needs_choice = slots[0].kind == SlotKind::SplitFront;
                break;
            }
            remaining -= static_cast<int>(slots.size());
        }
        if (!needs_choice) {
            rec(w, u + 1);
            return;
        }
        for (int pending : {1, 2}) {
            w.cols[u - 1].pending = pending;
            rec(w, u + 1);
        }
        w.cols[u - 1].pending = 0;
    };
    rec(base, 1);
    return out;
}

YoungWall wall_from_partition(const std::vector<int>& partition, Ground g, int n) {
    auto candidates = wall_candidates(partition, g, n);
    if (candidates.empty())
        throw std::invalid_argument("wall_from_partition: no proper wall has this partition");
    if (candidates.size() > 1)
        throw std::invalid_argument("wall_from_partition: the wall is not uniquely determined");
    return candidates[0];
}

YoungWall wall_from_partition_eps(const std::vector<int>& partition, Ground g, int n, int eps) {
    std::vector<YoungWall> matching;
    for (const auto& w : wall_candidates(partition, g, n)) {
        auto slots = column_slots(w, 1);
        if (slots.empty()) continue;
        const Slot& top = slots.back();
        if ((top.kind == SlotKind::SplitFront || top.kind == SlotKind::SplitBack) &&
            top.color == eps)
            matching.push_back(w);
    }
    if (matching.size() != 1)
        throw std::invalid_argument("wall_from_partition_eps: spin variant not determined");
    return matching[0];
}

int s_index(const YoungWall& w1, const YoungWall& w2) {
    if (w1.n != w2.n) throw std::invalid_argument("s_index: rank mismatch");
    auto col_content = [](const YoungWall& w, int u) {
        std::vector<long long> c(w.n + 1, 0);
        if (u <= w.columns())
            for (const auto& s : column_slots(w, u)) c[s.color] += 1;
        return c;
    };
    for (int s = 0;; ++s) {
        bool ok = true;
        for (int j = 1; j <= w2.columns() && ok; ++j) {
            auto a = col_content(w1, j);
            auto b = col_content(w2, j + s);
            for (int i = 0; i <= w1.n; ++i)
                if (a[i] < b[i]) {
                    ok = false;
                    break;
                }
        }
        if (ok) return s;
        if (s > w2.columns()) throw std::logic_error("s_index: no shift admits containment");
    }
}

std::vector<long long> tensor_content(const TensorWall& t) {
    if (t.factors.empty()) throw std::invalid_argument("tensor_content: no factors");
    std::vector<long long> total(t.factors[0].n + 1, 0);
    for (const auto& f : t.factors) {
        auto c = wall_content(f);
        for (size_t i = 0; i < total.size(); ++i) total[i] += c[i];
    }
    return total;
}

namespace {

// Concatenated signature word: factor 1 leftmost, then cancellation.
struct TensorEntry {
    int factor;
    bool plus;
};

std::vector<TensorEntry> tensor_signature(const TensorWall& t, int color) {
    std::vector<TensorEntry> stack;
    for (size_t f = 0; f < t.factors.size(); ++f) {
        for (const auto& e : signature(t.factors[f], color)) {
            TensorEntry entry{static_cast<int>(f), e.plus};
            if (!entry.plus && !stack.empty() && stack.back().plus)
                stack.pop_back();
            else
                stack.push_back(entry);
        }
    }
    return stack;
}

} // namespace

std::optional<TensorWall> tensor_e(const TensorWall& t, int color) {
    auto word = tensor_signature(t, color);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!it->plus) {
            TensorWall out = t;
            auto next = crystal_e(out.factors[it->factor], color);
            if (!next) throw std::logic_error("tensor_e: factor lost its minus");
            out.factors[it->factor] = *next;
            return out;
        }
    }
    return std::nullopt;
}

std::optional<TensorWall> tensor_f(const TensorWall& t, int color) {
    auto word = tensor_signature(t, color);
    for (const auto& e : word) {
        if (e.plus) {
            TensorWall out = t;
            auto next = crystal_f(out.factors[e.factor], color);
            if (!next) throw std::logic_error("tensor_f: factor lost its plus");
            out.factors[e.factor] = *next;
            return out;
        }
    }
    return std::nullopt;
}

bool tensor_highest(const TensorWall& t) {
    const int n = t.factors[0].n;
    for (int i = 0; i <= n; ++i)
        if (tensor_e(t, i)) return false;
    return true;
}

TensorWall raise_to_highest(TensorWall t) {
    const int n = t.factors[0].n;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i <= n; ++i) {
            while (auto next = tensor_e(t, i)) {
                t = *next;
                moved = true;
            }
        }
    }
    return t;
}

BigInt connected_component_count(int n, int k, int s, int m) {
    if (n > 4 || k > 3 || m > 6)
        throw bound_error("connected_component_count: desk-scale bounds exceeded");
    if (m > n || s > std::min(m, n - 1))
        throw std::invalid_argument("connected_component_count: need s <= m <= n, s < n");

    // target content: the staircase wall over LambdaN (front choice at m = n)
    std::vector<int> stair;
    for (int i = m; i >= 1; --i) stair.push_back(i);
    auto stair_candidates = wall_candidates(stair, Ground::LambdaN, n);
    if (stair_candidates.empty()) throw std::logic_error("connected_component_count: no staircase wall");
    std::vector<long long> target = wall_content(stair_candidates[0]);

    // anchor: ground^{k-1} (x) staircase(s)
    std::vector<int> tail;
    for (int i = s; i >= 1; --i) tail.push_back(i);
    TensorWall anchor;
    for (int i = 0; i + 1 < k; ++i) anchor.factors.push_back(ground_wall(Ground::LambdaN, n));
    anchor.factors.push_back(wall_from_partition(tail, Ground::LambdaN, n));

    // all ordered set partitions of {1..m} into k strict rows
    BigInt count = 0;
    std::vector<std::vector<int>> rows(k);
    std::function<void(int)> assign = [&](int v) {
        if (v == 0) {
            // every combination of wall variants per factor
            std::vector<std::vector<YoungWall>> options;
            for (int f = 0; f < k; ++f) {
                auto cands = wall_candidates(rows[f], Ground::LambdaN, n);
                if (cands.empty()) return;
                options.push_back(std::move(cands));
            }
            std::function<void(size_t, TensorWall&)> pick = [&](size_t f, TensorWall& t) {
                if (f == options.size()) {
                    if (tensor_content(t) != target) return;
                    if (raise_to_highest(t) == anchor) count += 1;
                    return;
                }
                for (const auto& w : options[f]) {
                    t.factors.push_back(w);
                    pick(f + 1, t);
                    t.factors.pop_back();
                }
            };
            TensorWall t;
            pick(0, t);
            return;
        }
        for (int f = 0; f < k; ++f) {
            rows[f].push_back(v);
            assign(v - 1);
            rows[f].pop_back();
        }
    };
    assign(m);
    return count;
}

} // namespace maxweight
