#include "linf/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace linf {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    // avoid overflow on LLONG_MIN
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    if (mag != 0) limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
    if (limbs_.empty()) negative_ = false;
}

BigInt::BigInt(unsigned long long v) {
    if (v != 0) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

BigInt BigInt::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        out.mul_small(10);
        out.add_small(static_cast<std::uint32_t>(c - '0'));
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

void BigInt::mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    trim();
}

void BigInt::add_small(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

// requires |a| >= |b|
void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(cur);
    }
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_mag(limbs_, rhs.limbs_);
    } else if (compare_mag(limbs_, rhs.limbs_) >= 0) {
        sub_mag(limbs_, rhs.limbs_);
    } else {
        std::vector<std::uint32_t> tmp = rhs.limbs_;
        sub_mag(tmp, limbs_);
        limbs_ = std::move(tmp);
        negative_ = rhs.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    BigInt neg = rhs;
    if (!neg.limbs_.empty()) neg.negative_ = !neg.negative_;
    return *this += neg;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (limbs_.empty() || rhs.limbs_.empty()) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t pos = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out[pos] + carry;
            out[pos] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++pos;
        }
    }
    limbs_ = std::move(out);
    negative_ = negative_ != rhs.negative_;
    trim();
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::divide_exact(std::uint32_t divisor) const {
    if (divisor == 0) throw std::logic_error("BigInt: division by zero");
    BigInt out = *this;
    std::uint32_t rem = out.divmod_small(divisor);
    if (rem != 0) throw std::logic_error("BigInt: divide_exact with nonzero remainder");
    return out;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = BigInt::compare_mag(a.limbs_, b.limbs_);
    return a.negative_ ? c > 0 : c < 0;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    BigInt tmp = *this;
    std::vector<std::uint32_t> chunks;
    while (!tmp.limbs_.empty()) chunks.push_back(tmp.divmod_small(1000000000u));
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

std::uint64_t BigInt::to_u64() const {
    if (negative_ || limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit in u64");
    std::uint64_t out = 0;
    if (limbs_.size() > 1) out = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) out |= limbs_[0];
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace linf
