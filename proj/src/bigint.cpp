#include "maxweight/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace maxweight {

namespace {
constexpr uint32_t BASE = 1000000000u;
}

BigInt::BigInt(long long v) {
    if (v < 0) { negative_ = true; }
    unsigned long long u = negative_ ? 0ull - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
    while (u > 0) {
        limbs_.push_back(static_cast<uint32_t>(u % BASE));
        u /= BASE;
    }
}

BigInt::BigInt(const std::string& s) { *this = from_string(s); }

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    // parse 9-digit chunks from the end
    size_t end = s.size();
    while (end > i) {
        size_t begin = end >= i + 9 ? end - 9 : i;
        uint32_t limb = 0;
        for (size_t j = begin; j < end; ++j) {
            if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("BigInt: bad digit");
            limb = limb * 10 + static_cast<uint32_t>(s[j] - '0');
        }
        r.limbs_.push_back(limb);
        end = begin;
    }
    r.negative_ = neg;
    r.trim();
    return r;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = negative_ ? "-" : "";
    out += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 3) return false;
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (mag > (~0ull) / BASE) return false;
        mag = mag * BASE;
        if (mag > ~0ull - limbs_[i]) return false;
        mag += limbs_[i];
    }
    unsigned long long lim = negative_ ? 9223372036854775808ull : 9223372036854775807ull;
    return mag <= lim;
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
    unsigned long long mag = 0;
    for (size_t i = limbs_.size(); i-- > 0;) mag = mag * BASE + limbs_[i];
    return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s % BASE);
        carry = s / BASE;
    }
    r.trim();
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t s = static_cast<int64_t>(a.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? b.limbs_[i] : 0);
        if (s < 0) {
            s += BASE;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (negative_ == o.negative_) {
        bool neg = negative_;
        *this = add_mag(*this, o);
        negative_ = limbs_.empty() ? false : neg;
        return *this;
    }
    int c = cmp_mag(*this, o);
    if (c == 0) { *this = BigInt(); return *this; }
    if (c > 0) {
        bool neg = negative_;
        *this = sub_mag(*this, o);
        negative_ = limbs_.empty() ? false : neg;
    } else {
        bool neg = o.negative_;
        *this = sub_mag(o, *this);
        negative_ = limbs_.empty() ? false : neg;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (is_zero() || o.is_zero()) { *this = BigInt(); return *this; }
    std::vector<uint64_t> acc(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = acc[i + j] + static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            acc[i + j] = cur % BASE;
            carry = cur / BASE;
        }
        size_t k = i + o.limbs_.size();
        while (carry > 0) {
            uint64_t cur = acc[k] + carry;
            acc[k] = cur % BASE;
            carry = cur / BASE;
            ++k;
        }
    }
    BigInt r;
    r.limbs_.assign(acc.begin(), acc.end());
    r.negative_ = negative_ != o.negative_;
    r.trim();
    *this = std::move(r);
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // schoolbook long division on magnitudes, one base-10^9 digit at a time
    BigInt rem;
    std::vector<uint32_t> quot(a.limbs_.size(), 0);
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        // rem = rem * BASE + a.limbs_[i]
        rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
        rem.trim();
        // binary search the digit d with d*|b| <= rem < (d+1)*|b|
        uint32_t lo = 0, hi = BASE - 1, d = 0;
        BigInt bb = b;
        bb.negative_ = false;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            BigInt t = bb * BigInt(static_cast<long long>(mid));
            if (cmp_mag(t, rem) <= 0) {
                d = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        quot[i] = d;
        rem = sub_mag(rem, bb * BigInt(static_cast<long long>(d)));
    }
    q.limbs_ = std::move(quot);
    q.negative_ = a.negative_ != b.negative_;
    q.trim();
    r = rem;
    r.negative_ = r.limbs_.empty() ? false : a.negative_;
    r.trim();
}

BigInt BigInt::operator/(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return r;
}

BigInt BigInt::div_exact(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt: division expected exact");
    return q;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = BigInt::cmp_mag(a, b);
    return a.negative_ ? c > 0 : c < 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

BigInt double_factorial(int n) {
    if (n <= 0) return 1;
    BigInt r = 1;
    for (int i = n; i >= 2; i -= 2) r *= BigInt(i);
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = r.div_exact(BigInt(i));
    }
    return r;
}

BigInt multinomial(const std::vector<int>& parts) {
    long long n = 0;
    BigInt r = 1;
    for (int p : parts) {
        if (p < 0) return 0;
        for (int i = 1; i <= p; ++i) {
            ++n;
            r *= BigInt(n);
            r = r.div_exact(BigInt(i));
        }
    }
    return r;
}

BigInt catalan(int n) {
    if (n < 0) return 0;
    return binomial(2LL * n, n).div_exact(BigInt(n + 1));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

BigRat::BigRat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("BigRat: zero denominator");
    if (den.is_negative()) {
        num = -num;
        den = -den;
    }
    BigInt g = BigInt::gcd(num, den);
    if (!g.is_zero() && g != BigInt(1)) {
        num = num.div_exact(g);
        den = den.div_exact(g);
    }
}

BigRat BigRat::operator+(const BigRat& o) const { return BigRat(num * o.den + o.num * den, den * o.den); }
BigRat BigRat::operator-(const BigRat& o) const { return BigRat(num * o.den - o.num * den, den * o.den); }
BigRat BigRat::operator*(const BigRat& o) const { return BigRat(num * o.num, den * o.den); }

} // namespace maxweight
