#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace maxweight {

// Arbitrary-precision signed integer, sign-magnitude over base 10^9 limbs.
// Counts in this library grow past 64 bits quickly (double factorials,
// hook-length products), so every count-valued function returns BigInt.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal);
    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    // Value as long long; throws std::overflow_error if it does not fit.
    long long to_ll() const;
    bool fits_ll() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Truncated division (quotient rounds toward zero, C++ semantics).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    // Division known to be exact; throws std::logic_error on remainder.
    BigInt div_exact(const BigInt& b) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    static BigInt gcd(BigInt a, BigInt b);

private:
    // limbs_ little-endian base 10^9; empty means zero; no leading zero limb.
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b); // |a| >= |b|
};

BigInt factorial(int n);
BigInt double_factorial(int n);          // n!! with (-1)!! = 0!! = 1
BigInt binomial(long long n, long long k);
BigInt multinomial(const std::vector<int>& parts);
BigInt catalan(int n);

// Exact determinant by Bareiss fraction-free elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// Exact rational, normalized with positive denominator.
struct BigRat {
    BigInt num = 0;
    BigInt den = 1;

    BigRat() = default;
    BigRat(BigInt n) : num(std::move(n)), den(1) {}
    BigRat(BigInt n, BigInt d);

    BigRat operator+(const BigRat& o) const;
    BigRat operator-(const BigRat& o) const;
    BigRat operator*(const BigRat& o) const;
    bool is_integer() const { return den == BigInt(1); }
};

} // namespace maxweight
