// Arithmetic in the prime field GF(p).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modcx {

// Thrown on bad user input (CLI maps it to exit code 2).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal invariant fails (CLI maps it to exit code 3).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// A prime field GF(p), p < 2^20 so that products fit comfortably in 64 bits.
// One field per session; every matrix and algebra carries its field and
// refuses to mix moduli.
class PrimeField {
  public:
    PrimeField() : p_(0), magic_(0) {}
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw input_error("modulus " + std::to_string(p) + " is not prime");
        if (p >= (1u << 20))
            throw input_error("modulus " + std::to_string(p) + " too large (need p < 2^20)");
        magic_ = ~std::uint64_t{0} / p;  // floor(2^64 / p), for Barrett reduction
    }

    std::uint32_t modulus() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    // Reduce any x < 2^62; one conditional fixup suffices for our ranges.
    std::uint32_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * magic_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(static_cast<std::uint64_t>(a) * b);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        std::uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw internal_error("inverse of zero in GF(p)");
        return pow(a, p_ - 2);
    }
    // Canonical residue of a (possibly negative) integer.
    std::uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

  private:
    std::uint32_t p_;
    std::uint64_t magic_;
};

}  // namespace modcx
