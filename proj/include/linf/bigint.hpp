#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace linf {

// Exact signed integer of unbounded size. Everything the toolkit reports
// (formula values, pattern counts) goes through this type; no floating
// point is involved anywhere.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

    // Optional leading '-' followed by decimal digits.
    static BigInt from_string(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    std::string to_string() const;
    // Throws std::overflow_error if the value does not fit.
    std::uint64_t to_u64() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt operator-() const;

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

    // Division by a small positive divisor with zero remainder required;
    // throws std::logic_error on a nonzero remainder.
    BigInt divide_exact(std::uint32_t divisor) const;

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // Little-endian base-2^32 magnitude; empty means zero, and zero is never
    // marked negative.
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    void mul_small(std::uint32_t m);
    void add_small(std::uint32_t v);
    std::uint32_t divmod_small(std::uint32_t divisor);  // returns remainder
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

// All formula outputs and pattern counts are exact non-negative integers.
using Count = BigInt;

}  // namespace linf
