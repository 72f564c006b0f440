#include "modcx/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modcx {

BigInt::BigInt(long long v) : neg_(v < 0) {
    unsigned long long u = neg_ ? -static_cast<unsigned long long>(v)
                                : static_cast<unsigned long long>(v);
    while (u) {
        limbs_.push_back(static_cast<std::uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (1ll << 32); borrow = 1; } else borrow = 0;
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.neg_ = neg_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return neg_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1) mag |= limbs_[0];
    if (limbs_.size() >= 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // divide by 10^9
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return neg_ ? -r : r;
}

void BigInt::shr1() {
    std::uint32_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint32_t next = limbs_[i] & 1;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
        carry = next;
    }
    trim();
}

void BigInt::shl1() {
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint32_t next = limbs_[i] >> 31;
        limbs_[i] = (limbs_[i] << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int shift = 0;
    while (a.is_even() && b.is_even()) {
        a.shr1();
        b.shr1();
        ++shift;
    }
    while (a.is_even()) a.shr1();
    while (!b.is_zero()) {
        while (b.is_even()) b.shr1();
        if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
        b = b - a;
        b.neg_ = false;
    }
    while (shift--) a.shl1();
    return a;
}

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
}

void BigRational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        // exact division via repeated subtraction would be slow; do long
        // division digit-free: both num_ and den_ are multiples of g, and
        // g fits the sizes we meet (order <= 6 systems), so divide by
        // reconstructing quotients with doubling.
        auto divexact = [](const BigInt& a, const BigInt& g2) {
            BigInt q(0), r = a.is_negative() ? -a : a;
            // binary long division: find largest g*2^k <= r, subtract.
            std::vector<BigInt> shifts{g2};
            std::vector<BigInt> powers{BigInt(1)};
            while (shifts.back() + shifts.back() <= r) {
                shifts.push_back(shifts.back() + shifts.back());
                powers.push_back(powers.back() + powers.back());
            }
            for (std::size_t i = shifts.size(); i-- > 0;) {
                if (shifts[i] <= r) {
                    r = r - shifts[i];
                    q = q + powers[i];
                }
            }
            return a.is_negative() ? -q : q;
        };
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

BigRational BigRational::operator+(const BigRational& o) const {
    return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
BigRational BigRational::operator-(const BigRational& o) const {
    return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
BigRational BigRational::operator*(const BigRational& o) const {
    return BigRational(num_ * o.num_, den_ * o.den_);
}
BigRational BigRational::operator/(const BigRational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return BigRational(num_ * o.den_, den_ * o.num_);
}

}  // namespace modcx
