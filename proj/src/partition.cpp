#include "maxweight/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace maxweight {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
}

bool Partition::is_strict() const {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] <= parts[i]) return false;
    return true;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

Partition Partition::from_index(int u) const {
    if (u < 1) throw std::invalid_argument("Partition::from_index: u must be >= 1");
    if (u > length()) return Partition();
    return Partition(std::vector<int>(parts.begin() + (u - 1), parts.end()));
}

Partition Partition::conjugate() const {
    if (parts.empty()) return Partition();
    std::vector<int> conj(parts[0], 0);
    for (int col = 1; col <= parts[0]; ++col) {
        int len = 0;
        for (int p : parts)
            if (p >= col) ++len;
        conj[col - 1] = len;
    }
    return Partition(conj);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    s += ")";
    return s;
}

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("StrictPartition: parts must be positive");
        if (i > 0 && parts[i - 1] <= parts[i])
            throw std::invalid_argument("StrictPartition: parts must be strictly decreasing");
    }
}

int StrictPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int StrictPartition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
}

StrictPartition StrictPartition::from_index(int u) const {
    if (u < 1) throw std::invalid_argument("StrictPartition::from_index: u must be >= 1");
    if (u > length()) return StrictPartition();
    return StrictPartition(std::vector<int>(parts.begin() + (u - 1), parts.end()));
}

std::string StrictPartition::to_string() const { return as_partition().to_string(); }

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("SkewShape: inner shape not contained in outer");
}

std::string SkewShape::to_string() const {
    return outer.to_string() + "\\" + inner.to_string();
}

StrictPartition staircase(int m) {
    std::vector<int> parts;
    for (int i = m; i >= 1; --i) parts.push_back(i);
    return StrictPartition(std::move(parts));
}

Partition merge_parts(const std::vector<Partition>& ps) {
    std::vector<int> all;
    for (const auto& p : ps) all.insert(all.end(), p.parts.begin(), p.parts.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    return Partition(std::move(all));
}

Partition merge_parts(const std::vector<StrictPartition>& ps) {
    std::vector<Partition> q;
    q.reserve(ps.size());
    for (const auto& p : ps) q.push_back(p.as_partition());
    return merge_parts(q);
}

std::vector<Partition> partitions_of(int m, int max_rows) {
    std::vector<Partition> out;
    if (m < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_rows > 0 && static_cast<int>(cur.size()) == max_rows) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(m, m > 0 ? m : 1);
    return out;
}

int enumeration_bound() {
    static const int bound = [] {
        if (const char* env = std::getenv("MAXWEIGHT_BOUND")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 18;
    }();
    return bound;
}

} // namespace maxweight
