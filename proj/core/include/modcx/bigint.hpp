// Signed arbitrary-precision integers, just enough for exact recurrence
// extension and rational elimination in the growth classifier: add/sub/mul,
// comparisons, small-divisor division for printing, binary gcd.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modcx {

class BigInt {
  public:
    BigInt() : neg_(false) {}
    BigInt(long long v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }
    int cmp(const BigInt& o) const;

    bool fits_int64() const;
    long long to_int64() const;  // throws if out of range
    std::string to_string() const;
    double to_double() const;

    static BigInt gcd(BigInt a, BigInt b);  // non-negative result

  private:
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }
    void shr1();
    void shl1();

    bool neg_;
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32, no leading zeros
};

// Rationals over BigInt, normalized with positive denominator. Used only for
// order <= max_order Hankel elimination, so simplicity over speed.
class BigRational {
  public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    BigRational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;
    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }

  private:
    void normalize();
    BigInt num_, den_;
};

}  // namespace modcx
